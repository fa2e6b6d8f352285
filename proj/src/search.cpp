#include "crossflip/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"
#include "crossflip/isomorphism.hpp"

namespace crossflip {

namespace {

std::vector<int> degree_table(const Complex& complex) {
  std::vector<int> degree(static_cast<std::size_t>(complex.next_label()), 0);
  if (complex.dim() < 1) return degree;
  for (const auto& e : complex.faces(1)) {
    ++degree[static_cast<std::size_t>(e[0])];
    ++degree[static_cast<std::size_t>(e[1])];
  }
  return degree;
}

Score score_from(const Complex& complex, const std::vector<int>& degree) {
  Score s;
  const int target = 2 * complex.dim();
  for (Vertex v : complex.vertices()) {
    const long long k = degree[static_cast<std::size_t>(v)];
    if (k == target) ++s.count_2d;
    s.sumsq += k * k;
  }
  return s;
}

// Unbiased draw from [0, n).
std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::string list(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

}  // namespace

std::vector<Vertex> removable_candidates(const Complex& complex) {
  const auto degree = degree_table(complex);
  std::vector<Vertex> out;
  for (Vertex v : complex.vertices())
    if (degree[static_cast<std::size_t>(v)] == 2 * complex.dim()) out.push_back(v);
  return out;
}

Score score(const Complex& complex) { return score_from(complex, degree_table(complex)); }

Score predicted_score(const Score& current, const std::vector<int>& degree, const FlipTemplate& tmpl,
                      const Embedding& embedding) {
  Score s = current;
  const long long target = 2 * tmpl.dim;
  auto drop = [&](long long k) {
    if (k == target) --s.count_2d;
    s.sumsq -= k * k;
  };
  auto add = [&](long long k) {
    if (k == target) ++s.count_2d;
    s.sumsq += k * k;
  };
  for (Vertex x : tmpl.phi.vertices()) {
    const long long k = degree[static_cast<std::size_t>(embedding.vertex_map[static_cast<std::size_t>(x)])];
    drop(k);
    if (!std::binary_search(tmpl.removed.begin(), tmpl.removed.end(), x))
      add(k + tmpl.degree_change[static_cast<std::size_t>(x)]);
  }
  for (Vertex x : tmpl.added) add(tmpl.complement_degree[static_cast<std::size_t>(x)]);
  return s;
}

bool respects_protection(const FlipTemplate& tmpl, const Embedding& embedding,
                         const std::vector<Face>& protected_edges) {
  if (protected_edges.empty()) return true;
  auto canonical = [&](Vertex h) {
    for (std::size_t x = 0; x < embedding.vertex_map.size(); ++x)
      if (embedding.vertex_map[x] == h) return static_cast<Vertex>(x);
    return -1;
  };
  for (const auto& e : protected_edges) {
    const Vertex a = canonical(e[0]);
    const Vertex b = canonical(e[1]);
    if (a < 0 || b < 0) continue;
    // The image is induced, so the edge is in it; it survives only on the boundary.
    Face pair{std::min(a, b), std::max(a, b)};
    if (!std::binary_search(tmpl.boundary_edges.begin(), tmpl.boundary_edges.end(), pair)) return false;
  }
  return true;
}

std::string FlipLogEntry::str() const {
  return std::to_string(step) + " " + std::to_string(template_id) + " " + std::string(to_string(kind)) + " " +
         list(image_vertices) + "->" + list(new_vertices);
}

SearchState start_search(const Complex& complex, const Coloring& coloring, const ReduceOptions& options) {
  if (complex.is_void() || !complex.is_pure() || complex.dim() < 1)
    throw Error(ErrorKind::NotBalanced, "input must be a pure complex of dimension at least 1");
  if (!is_proper(complex, coloring) || coloring.num_colors() != complex.dim() + 1)
    throw Error(ErrorKind::NotBalanced, "coloring is not a proper (d+1)-coloring");
  if (!is_pseudomanifold(complex)) throw Error(ErrorKind::NotBalanced, "input is not a pseudomanifold");

  SearchState state;
  state.complex = complex;
  state.coloring = coloring;
  state.rng.seed(options.seed);
  for (auto e : options.protected_edges) {
    std::sort(e.begin(), e.end());
    if (e.size() != 2 || !complex.contains(e))
      throw Error(ErrorKind::BadConstraint, "protected edge " + to_string(e) + " is not an edge of the input");
    state.protected_edges.push_back(std::move(e));
  }
  std::sort(state.protected_edges.begin(), state.protected_edges.end());

  const FlipCatalog& catalog = flip_catalog(complex.dim());
  state.template_ids = options.sufficient_only ? catalog.sufficient_ids() : catalog.all_ids();
  state.cache = find_all_embeddings(complex, coloring, catalog, state.template_ids);
  state.best = complex;
  state.best_coloring = coloring;
  return state;
}

void apply_to_state(SearchState& state, const Embedding& embedding, const FlipCatalog& catalog,
                    const ReduceOptions& options) {
  const FlipTemplate& t = catalog.at(embedding.template_id);
  FlipResult result = apply_flip(state.complex, state.coloring, embedding, catalog);
  state.cache = refresh_cache(state.complex, result.complex, result.coloring, state.cache, catalog, state.template_ids);
  if (options.verify_cache) {
    auto full = find_all_embeddings(result.complex, result.coloring, catalog, state.template_ids);
    if (full != state.cache) throw Error(ErrorKind::StaleEmbedding, "incremental cache diverged from a full rescan");
  }

  ++state.steps;
  state.history.push_back({state.steps, t.id, t.name, t.kind, embedding.image_vertices, result.new_vertices});
  state.complex = std::move(result.complex);
  state.coloring = std::move(result.coloring);
  if (state.complex.num_vertices() < state.best.num_vertices()) {
    state.best = state.complex;
    state.best_coloring = state.coloring;
  }
  if (options.on_step) options.on_step(state);
}

SearchState reduce(const Complex& complex, const Coloring& coloring, const ReduceOptions& options) {
  SearchState state = start_search(complex, coloring, options);
  const FlipCatalog& catalog = flip_catalog(complex.dim());
  const auto started = std::chrono::steady_clock::now();

  auto finished = [&]() -> bool {
    if (options.target_f0 && static_cast<int>(state.best.num_vertices()) <= *options.target_f0) {
      state.stop_reason = "target";
      return true;
    }
    if (state.steps >= options.budget) {
      state.stop_reason = "budget";
      return true;
    }
    if (options.time_limit && std::chrono::steady_clock::now() - started >= *options.time_limit) {
      state.stop_reason = "time";
      return true;
    }
    return false;
  };

  auto allowed = [&](const Embedding& e, FlipKind kind) {
    const FlipTemplate& t = catalog.at(e.template_id);
    return t.kind == kind && respects_protection(t, e, state.protected_edges);
  };

  while (!finished()) {
    const auto degree = degree_table(state.complex);
    const Score current = score_from(state.complex, degree);
    std::vector<std::size_t> best;
    Score best_score;
    for (std::size_t i = 0; i < state.cache.size(); ++i) {
      const Embedding& e = state.cache[i];
      if (!allowed(e, FlipKind::Down)) continue;
      const Score s = predicted_score(current, degree, catalog.at(e.template_id), e);
      if (best.empty() || best_score < s) {
        best.assign(1, i);
        best_score = s;
      } else if (s == best_score) {
        best.push_back(i);
      }
    }
    if (!best.empty()) {
      const Embedding chosen = state.cache[best[draw(state.rng, best.size())]];
      apply_to_state(state, chosen, catalog, options);
      continue;
    }

    // Stuck: a burst of random up-flips, template first, then site.
    for (int k = 0; k < options.upflip_burst && !finished(); ++k) {
      std::map<int, std::vector<std::size_t>> by_template;
      for (std::size_t i = 0; i < state.cache.size(); ++i)
        if (allowed(state.cache[i], FlipKind::Up)) by_template[state.cache[i].template_id].push_back(i);
      if (by_template.empty()) {
        state.stop_reason = "no-flips";
        return state;
      }
      auto it = std::next(by_template.begin(), static_cast<long>(draw(state.rng, by_template.size())));
      const Embedding chosen = state.cache[it->second[draw(state.rng, it->second.size())]];
      apply_to_state(state, chosen, catalog, options);
    }
    if (options.upflip_burst <= 0) {
      state.stop_reason = "stuck";
      return state;
    }
  }
  return state;
}

bool is_irreducible(const Complex& complex, const Coloring& coloring) {
  const FlipCatalog& catalog = flip_catalog(complex.dim());
  return find_all_embeddings(complex, coloring, catalog, catalog.ids_of_kind(FlipKind::Down)).empty();
}

FlipGraph explore_flip_graph(const Complex& complex, const Coloring& coloring, const FlipGraphOptions& options) {
  const FlipCatalog& catalog = flip_catalog(complex.dim());
  const auto ids = options.sufficient_only ? catalog.sufficient_ids() : catalog.all_ids();

  FlipGraph graph;
  graph.dim = complex.dim();
  std::multimap<std::uint64_t, int> by_key;

  auto locate = [&](const Complex& c, const Coloring& k) -> int {
    const std::uint64_t key = invariant_hash(c);
    auto [lo, hi] = by_key.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (is_isomorphic(graph.nodes[static_cast<std::size_t>(it->second)].representative, c)) return it->second;
    const int id = static_cast<int>(graph.nodes.size());
    graph.nodes.push_back({id, key, c, k, static_cast<int>(c.num_vertices())});
    by_key.emplace(key, id);
    return id;
  };

  locate(complex, coloring);
  std::set<std::tuple<int, int, int>> edges;
  for (std::size_t next = 0; next < graph.nodes.size(); ++next) {
    // Copies: locate() may grow the node vector.
    const Complex here = graph.nodes[next].representative;
    const Coloring here_coloring = graph.nodes[next].coloring;
    const bool may_grow = static_cast<int>(here.num_vertices()) < options.f0_cap;
    for (const auto& e : find_all_embeddings(here, here_coloring, catalog, ids)) {
      const FlipTemplate& t = catalog.at(e.template_id);
      if (t.kind == FlipKind::Up && !may_grow) continue;
      if (t.kind == FlipKind::Up && graph.nodes.size() >= options.max_nodes) {
        graph.truncated = true;
        continue;
      }
      FlipResult r = apply_flip(here, here_coloring, e, catalog);
      const int to = locate(r.complex, r.coloring);
      edges.emplace(static_cast<int>(next), to, t.id);
    }
  }
  for (const auto& [from, to, tid] : edges) graph.edges.push_back({from, to, tid});
  return graph;
}

std::string to_dot(const FlipGraph& graph) {
  const FlipCatalog& catalog = flip_catalog(graph.dim);
  std::ostringstream out;
  out << "digraph flips {\n";
  out << "  node [shape=box];\n";
  std::map<int, std::vector<int>> ranks;
  for (const auto& n : graph.nodes) {
    out << "  n" << n.id << " [label=\"" << f_vector(n.representative).str() << "\"];\n";
    ranks[n.f0].push_back(n.id);
  }
  for (const auto& [f0, ids] : ranks) {
    out << "  { rank=same;";
    for (int id : ids) out << " n" << id << ";";
    out << " }\n";
  }
  for (const auto& e : graph.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << catalog.at(e.template_id).name << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace crossflip
