// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crossflip/coloring.hpp"
#include "crossflip/complex.hpp"
#include "crossflip/constructions.hpp"
#include "crossflip/dual_graph.hpp"
#include "crossflip/flips.hpp"
#include "crossflip/io.hpp"
#include "crossflip/isomorphism.hpp"
#include "crossflip/search.hpp"
#include "crossflip/topology.hpp"

using namespace crossflip;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

FVector fv(std::vector<long long> entries) { return FVector{std::move(entries)}; }


Outcome catalog_counts() {
  const std::size_t n2 = flip_catalog(2).size();
  const std::size_t n3 = flip_catalog(3).size();
  return {n2 == 6 && n3 == 14, "d=2: " + std::to_string(n2) + ", d=3: " + std::to_string(n3)};
}

Outcome basic_flip_pairs() {
  struct Row {
    std::vector<int> j;
    FVector fj;
    std::vector<int> k;
    FVector fk;
  };
  const std::vector<Row> rows{
      {{3}, fv({1, 4, 6, 4, 1}), {0, 1, 2, 3}, fv({1, 8, 24, 32, 15})},
      {{2}, fv({1, 5, 9, 7, 2}), {0, 1, 2}, fv({1, 8, 24, 31, 14})},
      {{2, 3}, fv({1, 6, 12, 10, 3}), {0, 1, 3}, fv({1, 8, 24, 30, 13})},
      {{1}, fv({1, 6, 13, 12, 4}), {0, 1}, fv({1, 8, 23, 28, 12})},
      {{1, 3}, fv({1, 7, 16, 15, 5}), {0, 2, 3}, fv({1, 8, 23, 27, 11})},
      {{1, 2}, fv({1, 7, 17, 17, 6}), {0, 2}, fv({1, 8, 22, 25, 10})},
      {{1, 2, 3}, fv({1, 7, 18, 19, 7}), {0, 3}, fv({1, 8, 21, 23, 9})},
      {{0}, fv({1, 7, 18, 20, 8}), {0}, fv({1, 7, 18, 20, 8})},
  };
  const Complex cross = cross_polytope_boundary(3);
  int matched = 0;
  for (const Row& r : rows) {
    const Complex phi_j = phi_complex(r.j, 3);
    const Complex phi_k = phi_complex(r.k, 3);
    // The complement of Φ_J inside ∂C_4, computed from the facet sets.
    std::vector<Face> rest;
    for (const auto& f : cross.facets())
      if (!phi_j.has_facet(f)) rest.push_back(f);
    const Complex complement = make_complex(std::move(rest));
    const bool ok = f_vector(phi_j) == r.fj && f_vector(phi_k) == r.fk && f_vector(complement) == r.fk &&
                    is_isomorphic(complement, phi_k);
    matched += ok ? 1 : 0;
  }
  return {matched == 8, std::to_string(matched) + "/8 rows match"};
}

Outcome fixtures() {
  std::ostringstream detail;
  bool ok = true;

  const Complex rp3 = load_complex(fixture_path("rp3_16.txt"));
  const auto k = find_coloring(rp3);
  const bool rp3_ok = f_vector(rp3) == fv({1, 16, 88, 144, 72}) && k && k->class_sizes() == std::vector<int>{4, 4, 4, 4} &&
                      all_vertex_links_isomorphic(rp3) && betti_f2(rp3).betti == std::vector<long long>{1, 1, 1, 1};
  detail << "RP3_16 " << (rp3_ok ? "ok" : "bad");
  ok = ok && rp3_ok;

  const FaceList t2 = load_face_list(fixture_path("double_trefoil_22.txt"));
  const Complex c2 = make_complex(t2.faces);
  const bool t2_ok = f_vector(c2) == fv({1, 22, 136, 228, 114}) && verify_shelling(c2, t2.faces);
  detail << ", 2T22 " << (t2_ok ? "ok" : "bad");
  ok = ok && t2_ok;

  const Complex c3 = load_complex(fixture_path("triple_trefoil_28.txt"));
  const bool t3_ok =
      f_vector(c3) == fv({1, 28, 204, 352, 176}) && betti_f2(c3).betti == std::vector<long long>{1, 0, 0, 1};
  detail << ", 3T28 " << (t3_ok ? "ok" : "bad");
  ok = ok && t3_ok;
  return {ok, detail.str()};
}

Outcome irreducibility() {
  const Subdivision bd4 = barycentric_subdivision_with_faces(standard_sphere(3));
  const bool irreducible = is_irreducible(bd4.complex, dimension_coloring(bd4));
  const auto candidates = removable_candidates(barycentric_subdivision(standard_sphere(2)));
  return {irreducible && candidates.size() == 6, std::string("Bd(S3 simplex) irreducible=") +
                                                     (irreducible ? "true" : "false") +
                                                     ", Bd(S2 simplex) candidates=" + std::to_string(candidates.size())};
}

Outcome reduce_sphere() {
  const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(2));
  const Coloring k = dimension_coloring(bd);
  const Complex target = cross_polytope_boundary(2);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ReduceOptions options;
    options.budget = 500;
    options.seed = seed;
    options.target_f0 = 6;
    const SearchState s = reduce(bd.complex, k, options);
    if (f_vector(s.best) == fv({1, 6, 12, 8}) && is_isomorphic(s.best, target)) ++hits;
  }
  return {hits >= 9, std::to_string(hits) + "/10 seeds reach the octahedron"};
}

Outcome reduce_rp2() {
  const Subdivision bd = barycentric_subdivision_with_faces(load_complex(fixture_path("rp2_6.txt")));
  const Coloring k = dimension_coloring(bd);
  int hits = 0;
  bool checks = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ReduceOptions options;
    options.budget = 5000;
    options.seed = seed;
    options.target_f0 = 9;
    const SearchState s = reduce(bd.complex, k, options);
    if (f_vector(s.best) != fv({1, 9, 24, 16})) continue;
    ++hits;
    const SurfaceType surface = classify_surface(s.best);
    const auto classes = s.best_coloring.class_sizes();
    const bool three_each = std::all_of(classes.begin(), classes.end(), [](int n) { return n >= 3; });
    checks = checks && !surface.orientable && surface.euler == 1 && three_each && is_proper(s.best, s.best_coloring);
  }
  return {hits >= 1 && checks,
          std::to_string(hits) + "/10 seeds reach (1,9,24,16); surface and color-class checks " +
              (checks ? "hold" : "fail")};
}

// Uniform over the cache, restricted to down-flips (when there are any) once
// the complex reaches `cap` vertices.
const Embedding& pick(const EmbeddingCache& cache, const FlipCatalog& catalog, std::size_t f0, std::size_t cap,
                      std::mt19937_64& rng) {
  std::vector<std::size_t> pool;
  if (f0 >= cap)
    for (std::size_t i = 0; i < cache.size(); ++i)
      if (catalog.at(cache[i].template_id).kind == FlipKind::Down) pool.push_back(i);
  if (pool.empty())
    for (std::size_t i = 0; i < cache.size(); ++i) pool.push_back(i);
  return cache[pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]];
}

// Random walks over reachable spheres; every flip is checked and undone once.
Outcome flip_soundness() {
  constexpr int kWalks = 10;
  constexpr int kStepsPerWalk = 1000;
  int flips = 0;
  std::string failure;
  for (int walk = 0; walk < kWalks && failure.empty(); ++walk) {
    const int d = walk % 2 == 0 ? 2 : 3;
    const std::size_t cap = d == 2 ? 16 : 18;
    const FlipCatalog& catalog = flip_catalog(d);
    const auto ids = catalog.all_ids();
    std::mt19937_64 rng(static_cast<std::uint64_t>(walk) + 1000);
    Complex c = cross_polytope_boundary(d);
    Coloring k = cross_polytope_coloring(d);
    const auto betti = betti_f2(c).betti;
    EmbeddingCache cache = find_all_embeddings(c, k, catalog, ids);
    for (int step = 0; step < kStepsPerWalk; ++step) {
      const Embedding e = pick(cache, catalog, c.num_vertices(), cap, rng);
      FlipResult r = apply_flip(c, k, e, catalog);
      ++flips;

      const auto found = find_coloring(r.complex);
      if (!is_proper(r.complex, r.coloring) || !is_facet_rainbow(r.complex, r.coloring) || !found ||
          !found->same_partition(r.coloring))
        failure = "balance lost";
      else if (!is_pseudomanifold(r.complex))
        failure = "pseudomanifold lost";
      else if (betti_f2(r.complex).betti != betti)
        failure = "Betti numbers changed";
      else if (!is_isomorphic(apply_flip(r.complex, r.coloring, r.inverse, catalog).complex, c))
        failure = "inverse flip is not an isomorphism";
      if (!failure.empty()) {
        failure += " at walk " + std::to_string(walk) + " step " + std::to_string(step);
        break;
      }
      cache = refresh_cache(c, r.complex, r.coloring, cache, catalog, ids);
      c = std::move(r.complex);
      k = std::move(r.coloring);
    }
  }
  if (!failure.empty()) return {false, failure};
  return {flips == kWalks * kStepsPerWalk, std::to_string(flips) + " flips checked on 2- and 3-spheres"};
}

Outcome cache_oracle() {
  int steps = 0;
  for (int d : {2, 3}) {
    const FlipCatalog& catalog = flip_catalog(d);
    const auto ids = catalog.all_ids();
    std::mt19937_64 rng(static_cast<std::uint64_t>(d) * 77);
    const Subdivision bd = barycentric_subdivision_with_faces(standard_sphere(d));
    Complex c = bd.complex;
    Coloring k = dimension_coloring(bd);
    EmbeddingCache cache = find_all_embeddings(c, k, catalog, ids);
    for (int step = 0; step < 100; ++step) {
      const Embedding e = pick(cache, catalog, c.num_vertices(), bd.complex.num_vertices() + 10, rng);
      FlipResult r = apply_flip(c, k, e, catalog);
      cache = refresh_cache(c, r.complex, r.coloring, cache, catalog, ids);
      if (cache != find_all_embeddings(r.complex, r.coloring, catalog, ids))
        return {false, "mismatch at d=" + std::to_string(d) + " step " + std::to_string(step)};
      c = std::move(r.complex);
      k = std::move(r.coloring);
      ++steps;
    }
  }
  return {steps == 200, std::to_string(steps) + " refreshes equal a full rescan"};
}

Outcome walkup() {
  std::ostringstream detail;
  bool ok = true;
  const Construction d12 = build_s2_twisted_s1_12();
  const bool d12_ok = f_vector(d12.result.complex) == fv({1, 12, 54, 84, 42});
  detail << "Δ12 " << f_vector(d12.result.complex).str();
  ok = ok && d12_ok;
  for (BundleKind kind : {BundleKind::Twisted, BundleKind::Orientable}) {
    const Construction c = build_bundle_double(kind);
    const BettiProfile b = betti_f2(c.result.complex);
    const long long gap = walkup_equality_gap(c.result.complex, b.reduced[1]);
    const bool good = f_vector(c.result.complex) == fv({1, 16, 84, 136, 68}) && b.reduced[1] == 2 && gap == 0 &&
                      is_proper(c.result.complex, c.result.coloring);
    detail << (kind == BundleKind::Twisted ? ", twisted " : ", orientable ") << f_vector(c.result.complex).str()
           << " β̃1=" << b.reduced[1] << " gap=" << gap;
    ok = ok && good;
  }
  return {ok, detail.str()};
}

Outcome knot_protection() {
  const Complex c = load_complex(fixture_path("double_trefoil_22.txt"));
  const auto edges = load_edges(fixture_path("double_trefoil_22_knot.txt"));
  const auto k = find_coloring(c);
  if (!k) return {false, "fixture is not balanced"};
  ReduceOptions options;
  options.budget = 100;
  options.seed = 1;
  options.protected_edges = edges;
  int violations = 0;
  options.on_step = [&](const SearchState& s) {
    for (const auto& e : edges)
      if (!s.complex.contains(e)) ++violations;
  };
  const SearchState s = reduce(c, *k, options);
  return {violations == 0 && s.steps == 100,
          std::to_string(s.steps) + " protected flips, " + std::to_string(violations) + " knot edges lost; f " +
              f_vector(c).str() + " -> " + f_vector(s.complex).str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "flip catalog has 2^(d+1)-2 templates", 1, catalog_counts},
      {2, "basic flip f-vector pairs in dimension 3", 1, basic_flip_pairs},
      {3, "fixture verification", 10, fixtures},
      {4, "irreducibility of Bd(S3) and removable candidates of Bd(S2)", 5, irreducibility},
      {5, "reduce Bd(S2) to the octahedron", 30, reduce_sphere},
      {6, "reduce Bd(RP2_6) to 9 vertices", 600, reduce_rp2},
      {7, "flip soundness over 10,000 random flips", 300, flip_soundness},
      {8, "incremental cache equals full rescan", 120, cache_oracle},
      {9, "balanced Walkup constructions", 10, walkup},
      {10, "knot-protected reduction", 60, knot_protection},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s [%d] %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
