#include <doctest.h>

#include "crossflip/coloring.hpp"
#include "crossflip/constructions.hpp"
#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"
#include "crossflip/isomorphism.hpp"
#include "crossflip/topology.hpp"
#include "helpers.hpp"

using namespace crossflip;
using testing::fv;

namespace {

long long binomial(long long n, long long k) {
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

ColoredComplex shifted_cross(int d, Vertex offset) {
  ColoredComplex c{shift_labels(cross_polytope_boundary(d), offset), Coloring(d + 1)};
  for (Vertex v = 0; v <= 2 * d + 1; ++v) c.coloring.set(v + offset, v % (d + 1));
  return c;
}

// Glue facet {0..d} of b onto facet {0..d} of a, color to color.
Gluing base_gluing(int d, Vertex offset) {
  Gluing g;
  for (Vertex v = 0; v <= d; ++v) {
    g.from.push_back(v);
    g.to.push_back(v + offset);
  }
  return g;
}

// The first color-matched facet pair admitting a handle, optionally with an
// odd dual distance.
std::optional<Gluing> some_handle(const ColoredComplex& c, bool want_odd) {
  const auto& facets = c.complex.facets();
  const DualGraph g = dual_graph(c.complex);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto dist = g.distances(static_cast<int>(i));
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (want_odd != (dist[j] % 2 == 1)) continue;
      Gluing gl;
      for (int color = 0; color <= c.complex.dim(); ++color) {
        for (Vertex v : facets[i])
          if (c.coloring.color(v) == color) gl.from.push_back(v);
        for (Vertex v : facets[j])
          if (c.coloring.color(v) == color) gl.to.push_back(v);
      }
      if (handle_violation(c.complex, gl).empty()) return gl;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("connected sums follow the f-vector formula") {
  for (int d = 2; d <= 3; ++d) {
    const ColoredComplex a = shifted_cross(d, 0);
    const ColoredComplex b = shifted_cross(d, 100);
    const ColoredComplex sum = connected_sum(a, b, base_gluing(d, 100));
    const auto fa = fv(a.complex), fb = fv(b.complex), fs = fv(sum.complex);
    for (int i = 0; i < d; ++i)
      CHECK(fs[static_cast<std::size_t>(i + 1)] == fa[static_cast<std::size_t>(i + 1)] +
                                                       fb[static_cast<std::size_t>(i + 1)] - binomial(d + 1, i + 1));
    CHECK(fs.back() == fa.back() + fb.back() - 2);
    CHECK(fs == testing::brute_f(sum.complex.facets()));
    CHECK(is_proper(sum.complex, sum.coloring));
  }
  const ColoredComplex two = connected_sum(shifted_cross(3, 0), shifted_cross(3, 100), base_gluing(3, 100));
  CHECK(fv(two.complex) == std::vector<long long>{1, 12, 42, 60, 30});

  const Complex simplex = standard_sphere(2);
  const Complex sum = connected_sum(simplex, shift_labels(simplex, 10), {{0, 1, 2}, {10, 11, 12}});
  CHECK(sum.num_vertices() == 5);
}

TEST_CASE("connected sum errors") {
  const ColoredComplex a = shifted_cross(2, 0);
  const ColoredComplex b = shifted_cross(2, 100);
  CHECK_THROWS_AS(connected_sum(a, b, {{0, 1, 3}, {100, 101, 102}}), Error);       // not a facet
  CHECK_THROWS_AS(connected_sum(a, b, {{0, 1, 2}, {101, 100, 102}}), Error);       // colors crossed
  CHECK_THROWS_AS(connected_sum(a.complex, a.complex, base_gluing(2, 0)), Error);  // shared labels
  try {
    connected_sum(a, b, {{0, 1, 2}, {101, 100, 102}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ColorMismatch);
  }
}

TEST_CASE("handle additions") {
  const ColoredComplex chain = cross_polytopal_stacked_sphere(3, 4);
  CHECK(betti_f2(chain.complex).reduced[1] == 0);
  const auto even = some_handle(chain, false);
  REQUIRE(even);
  const ColoredComplex h = handle_addition(chain, *even, {.require_even_distance = true});
  CHECK(betti_f2(h.complex).reduced[1] == 1);
  CHECK(is_proper(h.complex, h.coloring));
  CHECK(walkup_equality_gap(h.complex, 1) == 0);

  const auto odd = some_handle(chain, true);
  REQUIRE(odd);
  CHECK_NOTHROW(handle_addition(chain, *odd));
  CHECK_THROWS_AS(handle_addition(chain, *odd, {.require_even_distance = true}), Error);

  // Adjacent facets share vertices; facets at distance two have meeting links.
  const Complex cross = cross_polytope_boundary(3);
  CHECK_THROWS_AS(handle_addition(cross, {cross.facets()[0], cross.facets()[1]}), Error);
}

TEST_CASE("the 12-vertex twisted bundle") {
  const Construction c = build_s2_twisted_s1_12();
  CHECK(fv(c.result.complex) == std::vector<long long>{1, 12, 54, 84, 42});
  CHECK(betti_f2(c.result.complex).betti == std::vector<long long>{1, 1, 1, 1});
  CHECK_FALSE(is_orientable(c.result.complex));
  CHECK(is_proper(c.result.complex, c.result.coloring));
  CHECK(c.names.at("y'1") == c.names.at("y1"));
  CHECK(c.names.at("x'3") == c.names.at("x3"));
}

TEST_CASE("the 16-vertex product bundle") {
  const Construction c = build_s2_times_s1_16();
  CHECK(c.result.complex.num_vertices() == 16);
  CHECK(betti_f2(c.result.complex).reduced[1] == 1);
  CHECK(is_orientable(c.result.complex));
  CHECK(walkup_equality_gap(c.result.complex, 1) == 0);
}

TEST_CASE("bundle doubles") {
  for (BundleKind kind : {BundleKind::Twisted, BundleKind::Orientable}) {
    const Construction c = build_bundle_double(kind);
    CHECK(fv(c.result.complex) == std::vector<long long>{1, 16, 84, 136, 68});
    const BettiProfile b = betti_f2(c.result.complex);
    CHECK(b.reduced[1] == 2);
    CHECK(walkup_equality_gap(c.result.complex, b.reduced[1]) == 0);
    CHECK(is_orientable(c.result.complex) == (kind == BundleKind::Orientable));
    CHECK(is_normal_pseudomanifold(c.result.complex));
    const auto k = find_coloring(c.result.complex);
    REQUIRE(k);
    CHECK(k->same_partition(c.result.coloring));
  }
  CHECK_FALSE(is_isomorphic(build_bundle_double(BundleKind::Twisted).result.complex,
                            build_bundle_double(BundleKind::Orientable).result.complex));
}

TEST_CASE("Walkup gap") {
  CHECK(walkup_equality_gap(cross_polytope_boundary(3), 0) == 0);
  CHECK(walkup_equality_gap(testing::fixture_complex("rp3_16.txt"), 1) == 32);
  for (int copies = 1; copies <= 4; ++copies)
    CHECK(walkup_equality_gap(cross_polytopal_stacked_sphere(3, copies).complex, 0) == 0);
}

TEST_CASE("suspension towers and stacked spheres") {
  const ColoredComplex s = suspension_tower(colored_cross_polytope(1), 1);
  CHECK(is_isomorphic(s.complex, cross_polytope_boundary(2)));
  const Complex rp3 = testing::fixture_complex("rp3_16.txt");
  const ColoredComplex t = suspension_tower({rp3, *find_coloring(rp3)}, 2);
  CHECK(t.complex.num_vertices() == 20);
  CHECK(t.complex.dim() == 5);
  CHECK(is_proper(t.complex, t.coloring));

  const ColoredComplex stacked = cross_polytopal_stacked_sphere(2, 3);
  CHECK(stacked.complex.num_vertices() == 12);
  CHECK(betti_f2(stacked.complex).betti == std::vector<long long>{1, 0, 1});
  CHECK(is_proper(stacked.complex, stacked.coloring));
}
