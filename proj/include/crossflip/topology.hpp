#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossflip/complex.hpp"
#include "crossflip/isomorphism.hpp"

namespace crossflip {

/// Betti numbers over the two-element field, β_0..β_d.
struct BettiProfile {
  std::vector<long long> betti;
  std::vector<long long> reduced;  // β̃_0 = β_0 - 1, the rest unchanged

  long long euler() const;
  std::string str() const;  // "(1,0,0,1)"
};

BettiProfile betti_f2(const Complex& complex);

/// Rank over F_2 of the boundary map from k-faces to (k-1)-faces.
long long boundary_rank_f2(const Complex& complex, int k);

/// Signs (+1/-1, relative to sorted vertex order) making neighboring facets
/// induce opposite orientations on their common ridge; nullopt if none
/// exists. Throws NotPseudomanifold.
std::optional<std::vector<int>> coherent_orientation(const Complex& complex);
bool is_orientable(const Complex& complex);

struct SurfaceType {
  bool orientable = true;
  long long euler = 2;

  /// "S^2", "T^2", "(T^2)^{#g}", "RP^2", "(RP^2)^{#k}"
  std::string name() const;
};

/// Throws NotClosedSurface unless the input is a connected 2-pseudomanifold
/// whose vertex links are cycles.
SurfaceType classify_surface(const Complex& complex);

/// Pseudomanifold whose faces of dimension <= d-2 all have connected links.
bool is_normal_pseudomanifold(const Complex& complex);

struct SingularityReport {
  std::vector<Face> edges;       // in a number of triangles other than 2
  std::vector<Vertex> vertices;  // link is not a single cycle
  long long f0_sing = 0;         // vertices of the singular subcomplex
};

/// For pure 2-dimensional complexes.
SingularityReport singular_faces(const Complex& complex);

/// f_0 - f_1 + f_2 = 1 and f0_sing + 2 f_1 - 3 f_2 = 0.
bool dunce_relations(const FVector& f, long long f0_sing);
bool dunce_relations(const Complex& complex);

/// Each facet after the first meets the union of the earlier ones in a
/// pure (d-1)-dimensional complex. Throws BadOrder unless `order` is a
/// permutation of the facets.
bool verify_shelling(const Complex& complex, const std::vector<Face>& order);

bool all_vertex_links_isomorphic(const Complex& complex);

/// A simplicial involution without fixed faces, if any. Exhaustive over the
/// automorphism group, so only meant for small complexes.
std::optional<VertexMap> find_free_involution(const Complex& complex);

}  // namespace crossflip
