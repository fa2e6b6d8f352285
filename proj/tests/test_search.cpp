#include <doctest.h>

#include "crossflip/coloring.hpp"
#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"
#include "crossflip/isomorphism.hpp"
#include "crossflip/search.hpp"
#include "helpers.hpp"

using namespace crossflip;
using testing::fv;

TEST_CASE("removable candidates of Bd of the tetrahedron boundary") {
  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  const auto candidates = removable_candidates(bd.complex);
  CHECK(candidates.size() == 6);
  for (Vertex v : candidates) CHECK(bd.face_of_vertex[static_cast<std::size_t>(v)].size() == 2);
}

TEST_CASE("predicted scores match the flipped complex") {
  const FlipCatalog& catalog = flip_catalog(2);
  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  const Coloring k = dimension_coloring(bd);
  const Score now = score(bd.complex);
  std::vector<int> degree(static_cast<std::size_t>(bd.complex.next_label()), 0);
  for (Vertex v : bd.complex.vertices()) degree[static_cast<std::size_t>(v)] = bd.complex.degree(v);
  for (const auto& e : find_all_embeddings(bd.complex, k, catalog, catalog.all_ids())) {
    const FlipResult r = apply_flip(bd.complex, k, e, catalog);
    CHECK(predicted_score(now, degree, catalog.at(e.template_id), e) == score(r.complex));
  }
}

TEST_CASE("minimal spheres are irreducible") {
  // A balanced d-sphere needs two vertices per color, so ∂C_{d+1} cannot shrink.
  CHECK(is_irreducible(cross_polytope_boundary(2), cross_polytope_coloring(2)));
  const FlipCatalog& catalog = flip_catalog(3);
  const bool no_down = find_all_embeddings(cross_polytope_boundary(3), cross_polytope_coloring(3), catalog,
                                           catalog.ids_of_kind(FlipKind::Down))
                           .empty();
  CHECK(is_irreducible(cross_polytope_boundary(3), cross_polytope_coloring(3)) == no_down);
  CHECK(no_down);

  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  CHECK_FALSE(is_irreducible(bd.complex, dimension_coloring(bd)));
}

TEST_CASE("reduce") {
  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  const Coloring k = dimension_coloring(bd);

  ReduceOptions none;
  none.budget = 0;
  const SearchState idle = reduce(bd.complex, k, none);
  CHECK(idle.best == bd.complex);
  CHECK(idle.steps == 0);

  ReduceOptions options;
  options.seed = 4;
  options.target_f0 = 6;
  const SearchState a = reduce(bd.complex, k, options);
  const SearchState b = reduce(bd.complex, k, options);
  CHECK(is_isomorphic(a.best, cross_polytope_boundary(2)));
  CHECK(a.stop_reason == "target");
  REQUIRE(a.history.size() == b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) CHECK(a.history[i].str() == b.history[i].str());
  CHECK(is_proper(a.best, a.best_coloring));
}

TEST_CASE("reduce validates its input") {
  CHECK_THROWS_AS(reduce(standard_sphere(2), Coloring(3)), Error);
  ReduceOptions options;
  options.protected_edges = {{0, 3}};  // antipodal, not an edge
  CHECK_THROWS_AS(reduce(cross_polytope_boundary(2), cross_polytope_coloring(2), options), Error);
}

TEST_CASE("protected edges survive every accepted flip") {
  const FlipCatalog& catalog = flip_catalog(2);
  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  const Coloring k = dimension_coloring(bd);
  const std::vector<Face> edges(bd.complex.faces(1).begin(), bd.complex.faces(1).begin() + 6);
  int accepted = 0, rejected = 0;
  for (const auto& e : find_all_embeddings(bd.complex, k, catalog, catalog.all_ids())) {
    const bool ok = respects_protection(catalog.at(e.template_id), e, edges);
    const FlipResult r = apply_flip(bd.complex, k, e, catalog);
    const bool kept = std::all_of(edges.begin(), edges.end(), [&](const Face& f) { return r.complex.contains(f); });
    if (ok) {
      CHECK(kept);
      ++accepted;
    } else {
      ++rejected;
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("flip graph of the octahedron") {
  const FlipGraph g = explore_flip_graph(cross_polytope_boundary(2), cross_polytope_coloring(2), {10, false, 5000});
  int at_six = 0;
  for (const auto& n : g.nodes) at_six += n.f0 == 6 ? 1 : 0;
  CHECK(at_six == 1);
  CHECK(g.nodes.front().f0 == 6);
  for (const auto& n : g.nodes) CHECK(n.f0 <= 10 + 3);
  // Every node was reached from the start, so the graph is connected.
  std::vector<bool> reached(g.nodes.size(), false);
  reached[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : g.edges)
      if (reached[static_cast<std::size_t>(e.from)] && !reached[static_cast<std::size_t>(e.to)])
        grew = reached[static_cast<std::size_t>(e.to)] = true;
  }
  CHECK(std::all_of(reached.begin(), reached.end(), [](bool r) { return r; }));

  // Raising the cap only adds classes.
  const FlipGraph bigger =
      explore_flip_graph(cross_polytope_boundary(2), cross_polytope_coloring(2), {12, false, 5000});
  CHECK(bigger.nodes.size() >= g.nodes.size());
  const std::string dot = to_dot(g);
  CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("flip graph of the 3-dimensional cross-polytope with the sufficient flips") {
  const FlipGraph g = explore_flip_graph(cross_polytope_boundary(3), cross_polytope_coloring(3), {10, true, 5000});
  int minimal = 0;
  for (const auto& n : g.nodes) minimal += n.f0 == 8 ? 1 : 0;
  CHECK(minimal == 1);
  for (const auto& n : g.nodes) CHECK(n.f0 >= 8);
}
