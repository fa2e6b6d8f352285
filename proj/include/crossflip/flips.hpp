#pragma once

#include <span>
#include <string>
#include <vector>

#include "crossflip/coloring.hpp"
#include "crossflip/complex.hpp"
#include "crossflip/isomorphism.hpp"
#include "crossflip/vf2.hpp"

namespace crossflip {

enum class FlipKind { Up, Down, Trivial };

std::string_view to_string(FlipKind kind);

/// The subcomplex Φ_I of the canonical cross-polytope boundary
/// (labels i and d+1+i form the i-th antipodal pair, colored i).
/// Throws EmptyIndexSet when `index_set` is empty.
Complex phi_complex(std::span<const int> index_set, int d);

/// One basic cross-flip: replace a copy of `phi` by `complement`, glued
/// along their common boundary. Both sides use canonical labels.
struct FlipTemplate {
  int id = -1;
  int dim = 0;
  std::vector<int> index_set;  // phi = Φ_{index_set}
  std::string name;            // e.g. "[1,3]"
  Complex phi;
  Complex complement;
  Complex boundary;
  FVector delta_f;  // f(complement) - f(phi)
  FlipKind kind = FlipKind::Trivial;
  bool sufficient = false;

  int inverse_id = -1;
  VertexMap complement_to_inverse;  // complement label -> inverse.phi label

  std::vector<Vertex> removed;  // vertices of phi interior (vanish)
  std::vector<Vertex> added;    // vertices of complement interior (fresh)
  std::vector<Face> boundary_edges;
  std::vector<int> degree_change;  // per canonical label, on boundary vertices
  std::vector<int> complement_degree;  // per canonical label

  vf2::Adjacency phi_dual;
  vf2::MatchOrder order;  // rooted at a center of phi_dual
  int radius = 0;         // eccentricity of that root

  int vertex_change() const { return static_cast<int>(added.size()) - static_cast<int>(removed.size()); }
  int color_of(Vertex canonical) const { return canonical % (dim + 1); }
};

/// Every basic cross-flip in dimension d, up to isomorphism.
///
/// templates() holds the 2^{d+1}-2 non-trivial ones ordered by the number
/// of facets of phi; each one's inverse is also in the list. The trivial
/// flip is kept separately. The sufficient subset marks the pairs Φ_J with
/// d ∈ J ⊆ {1..d} and their inverses (2^d templates).
class FlipCatalog {
 public:
  explicit FlipCatalog(int d);

  int dim() const { return dim_; }
  const std::vector<FlipTemplate>& templates() const { return templates_; }
  const FlipTemplate& trivial() const { return trivial_; }
  /// ids 0..size()-1 are templates(); size() is the trivial flip.
  const FlipTemplate& at(int id) const;
  std::size_t size() const { return templates_.size(); }

  std::vector<int> all_ids() const;
  std::vector<int> sufficient_ids() const;
  std::vector<int> ids_of_kind(FlipKind kind) const;

 private:
  int dim_;
  std::vector<FlipTemplate> templates_;
  FlipTemplate trivial_;
};

/// Shared, lazily built catalog for dimension d (d >= 1).
const FlipCatalog& flip_catalog(int d);

/// A copy of a template's phi inside a host complex.
struct Embedding {
  int template_id = -1;
  std::vector<Vertex> vertex_map;      // canonical label -> host vertex, -1 off phi
  std::vector<Face> image;             // image facets, sorted
  std::vector<Vertex> image_vertices;  // sorted

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.template_id == b.template_id && a.image == b.image;
  }
  friend bool operator<(const Embedding& a, const Embedding& b) {
    if (a.template_id != b.template_id) return a.template_id < b.template_id;
    return a.image < b.image;
  }
};

using EmbeddingCache = std::vector<Embedding>;

/// All induced copies of `tmpl.phi` in `host`, one per image.
///
/// Phi's dual graph is matched into the host's dual graph; each match is
/// lifted to a vertex map through shared ridges and colors, and kept when the
/// image is an induced subcomplex. Host must be a pseudomanifold of the
/// template's dimension with a proper coloring.
std::vector<Embedding> find_embeddings(const Complex& host, const Coloring& coloring, const FlipTemplate& tmpl);

/// find_embeddings over several templates of one catalog, merged and sorted.
EmbeddingCache find_all_embeddings(const Complex& host, const Coloring& coloring, const FlipCatalog& catalog,
                                   std::span<const int> template_ids);

/// True iff the facets generate an induced subcomplex of host.
bool image_is_induced(const Complex& host, std::span<const Face> image, std::span<const Vertex> image_vertices);

struct FlipResult {
  Complex complex;
  Coloring coloring;
  std::vector<Vertex> removed_vertices;
  std::vector<Vertex> new_vertices;
  Embedding inverse;  // undoes this flip on the result
};

/// Replaces the embedded phi by the template complement. Throws
/// StaleEmbedding when the image is no longer an induced copy in host.
FlipResult apply_flip(const Complex& host, const Coloring& coloring, const Embedding& embedding,
                      const FlipCatalog& catalog);

/// Brings `cache` (computed on `before` for `template_ids`) up to date for
/// `after`. Entries away from the changed facets are kept; only embeddings
/// touching a changed vertex are searched again.
EmbeddingCache refresh_cache(const Complex& before, const Complex& after, const Coloring& after_coloring,
                             const EmbeddingCache& cache, const FlipCatalog& catalog,
                             std::span<const int> template_ids);

/// Vertices of the facets present in exactly one of the two complexes.
std::vector<Vertex> changed_vertices(const Complex& before, const Complex& after);

}  // namespace crossflip
