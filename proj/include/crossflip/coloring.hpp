#pragma once

#include <optional>
#include <vector>

#include "crossflip/complex.hpp"

namespace crossflip {

/// Vertex -> color assignment, colors in [0, num_colors).
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int num_colors) : num_colors_(num_colors) {}

  int num_colors() const { return num_colors_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// -1 when v is uncolored.
  int color(Vertex v) const;
  void set(Vertex v, int color);
  void erase(Vertex v);

  std::vector<int> class_sizes() const;
  std::vector<std::vector<Vertex>> classes() const;

  /// Colors renumbered so classes are ordered by size, ties by smallest label.
  Coloring canonical() const;

  /// Same partition of the same vertex set (colors may be permuted).
  bool same_partition(const Coloring& other) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int num_colors_ = 0;
  std::vector<Vertex> vertices_;  // sorted
  std::vector<int> colors_;
};

/// κ(i) != κ(j) on every edge and every vertex of the complex colored.
bool is_proper(const Complex& complex, const Coloring& coloring);

/// Every facet uses each of the dim+1 colors exactly once.
bool is_facet_rainbow(const Complex& complex, const Coloring& coloring);

/// Proper (dim+1)-coloring of a pure complex, in canonical form.
///
/// Colors are forced facet by facet along the dual graph; only the relative
/// color permutation between distinct dual-graph components is searched.
/// Returns nullopt for non-pure input or when no coloring exists.
std::optional<Coloring> find_coloring(const Complex& complex);

/// True when coloring every dual-graph component is forced up to one color
/// permutation (no branching during propagation).
bool coloring_is_unique_up_to_permutation(const Complex& complex);

/// For each face dimension k, the sorted multiset of colors occurring on the
/// k-faces of `sub`, flattened face by face.
std::vector<std::vector<int>> color_signature(const Complex& sub, const Coloring& coloring);

/// Colors of a single face, sorted.
std::vector<int> face_colors(std::span<const Vertex> face, const Coloring& coloring);

/// The rank coloring of a barycentric subdivision: vertex ↦ dim of its face.
Coloring dimension_coloring(const Subdivision& subdivision);

/// κ(i) = κ(v_i) = i on the canonical cross-polytope labels.
Coloring cross_polytope_coloring(int d);

}  // namespace crossflip
