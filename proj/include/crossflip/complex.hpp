#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace crossflip {

using Vertex = int;

// A face is a strictly increasing list of vertex labels.
using Face = std::vector<Vertex>;

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big);
Face face_union(std::span<const Vertex> a, std::span<const Vertex> b);
Face face_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
std::string to_string(std::span<const Vertex> face);

/// Face counts per dimension, starting at f_{-1}.
struct FVector {
  std::vector<long long> entries;

  /// f_k for k >= -1.
  long long operator()(int k) const { return entries.at(static_cast<std::size_t>(k + 1)); }
  int dim() const { return static_cast<int>(entries.size()) - 2; }
  long long euler() const;  // sum_{i>=0} (-1)^i f_i
  std::string str() const;  // "(1,6,12,8)"

  friend bool operator==(const FVector&, const FVector&) = default;
};

FVector operator-(const FVector& a, const FVector& b);

namespace detail {
struct FaceCache;
}

/// Pure-or-not simplicial complex stored by its facets.
///
/// Values are immutable once built and cheap to copy; the lazily expanded
/// face lattice is shared between copies.
class Complex {
 public:
  /// The void complex (no faces at all). Only useful as a placeholder.
  Complex();

  /// Applies duplicate removal and antichain reduction. An input consisting
  /// of the empty set alone gives the complex {∅}. Throws VoidComplex on an
  /// empty facet list.
  static Complex from_facets(std::vector<Face> facets, Vertex min_next_label = 0);

  const std::vector<Face>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }
  int dim() const { return dim_; }
  bool is_pure() const { return pure_; }
  bool is_void() const { return facets_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  bool has_vertex(Vertex v) const;

  /// Smallest label guaranteed never to have been used by this complex or
  /// any complex it was derived from through flips.
  Vertex next_label() const { return next_label_; }

  /// Indices into facets() of the facets containing v (empty if absent).
  std::span<const int> facets_containing(Vertex v) const;

  bool contains(std::span<const Vertex> face) const;
  bool has_facet(std::span<const Vertex> face) const;
  int facet_index(std::span<const Vertex> face) const;  // -1 if absent

  std::vector<Vertex> neighbors(Vertex v) const;
  /// Number of vertices in the link of v.
  int degree(Vertex v) const;

  /// All k-faces, sorted lexicographically; k in [-1, dim].
  const std::vector<Face>& faces(int k) const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.facets_ == b.facets_; }

 private:
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> star_;
  int dim_ = -2;
  bool pure_ = true;
  Vertex next_label_ = 0;
  std::shared_ptr<detail::FaceCache> cache_;
};

Complex make_complex(std::vector<Face> facets);

FVector f_vector(const Complex& complex);

/// Throws FaceNotPresent when `face` is not a face of the complex.
Complex link(const Complex& complex, std::span<const Vertex> face);
Complex star(const Complex& complex, std::span<const Vertex> face);

/// Throws LabelCollision on overlapping vertex sets.
Complex join(const Complex& a, const Complex& b);
Complex simplex(Face vertices);
Complex cone(const Complex& base, Vertex apex);
Complex suspension(const Complex& base, Vertex north, Vertex south);

/// Faces of `complex` with all vertices in `subset`.
Complex induced_subcomplex(const Complex& complex, std::span<const Vertex> subset);
bool is_induced(const Complex& complex, const Complex& sub);
/// True iff every facet of `sub` is a face of `complex`.
bool is_subcomplex(const Complex& sub, const Complex& complex);

/// Result of a barycentric subdivision: vertex label i stands for the face
/// face_of_vertex[i] of the original complex.
struct Subdivision {
  Complex complex;
  std::vector<Face> face_of_vertex;
};

Subdivision barycentric_subdivision_with_faces(const Complex& complex);
Complex barycentric_subdivision(const Complex& complex);

/// Boundary of the (d+1)-simplex on labels 0..d+1.
Complex standard_sphere(int d);

/// Boundary of the (d+1)-dimensional cross-polytope. Label i (0 <= i <= d)
/// and label d+1+i form the i-th antipodal pair; its color is i.
Complex cross_polytope_boundary(int d);
inline Vertex cross_polytope_partner(int d, Vertex i) { return i <= d ? i + d + 1 : i - d - 1; }

/// Applies `map` to every label. Labels missing from `map` are kept.
Complex relabel(const Complex& complex, std::span<const std::pair<Vertex, Vertex>> map);
Complex shift_labels(const Complex& complex, Vertex offset);

}  // namespace crossflip
