#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crossflip/coloring.hpp"
#include "crossflip/complex.hpp"
#include "crossflip/flips.hpp"

namespace crossflip {

/// Vertices whose link has exactly 2d vertices (graph degree 2d). Every
/// removable vertex is among them; the converse can fail.
std::vector<Vertex> removable_candidates(const Complex& complex);

struct Score {
  long long count_2d = 0;
  long long sumsq = 0;  // sum of squared vertex degrees

  friend auto operator<=>(const Score&, const Score&) = default;
};

Score score(const Complex& complex);

/// Score of the complex that `embedding` would produce, from template data
/// and the current vertex degrees (indexed by label).
Score predicted_score(const Score& current, const std::vector<int>& degree, const FlipTemplate& tmpl,
                      const Embedding& embedding);

/// False when the flip would delete one of `protected_edges` (sorted pairs).
bool respects_protection(const FlipTemplate& tmpl, const Embedding& embedding,
                         const std::vector<Face>& protected_edges);

struct SearchState;

struct ReduceOptions {
  int budget = 500;
  std::uint64_t seed = 0;
  int upflip_burst = 3;
  std::optional<int> target_f0;
  std::vector<Face> protected_edges;
  std::optional<std::chrono::milliseconds> time_limit;
  bool sufficient_only = false;
  bool verify_cache = false;  // compare the cache with a full rescan after every flip
  std::function<void(const SearchState&)> on_step;  // called after every applied flip
};

struct FlipLogEntry {
  int step = 0;
  int template_id = -1;
  std::string template_name;
  FlipKind kind = FlipKind::Trivial;
  std::vector<Vertex> image_vertices;
  std::vector<Vertex> new_vertices;

  /// `step template_id direction [image]->[new]`
  std::string str() const;
};

struct SearchState {
  Complex complex;
  Coloring coloring;
  EmbeddingCache cache;
  std::vector<int> template_ids;
  std::mt19937_64 rng;
  std::vector<Face> protected_edges;
  std::vector<FlipLogEntry> history;
  Complex best;
  Coloring best_coloring;
  int steps = 0;
  std::string stop_reason;
};

/// Validates the input and builds the initial cache. Throws NotBalanced when
/// the coloring is not proper on a pure pseudomanifold, BadConstraint when a
/// protected edge is missing.
SearchState start_search(const Complex& complex, const Coloring& coloring, const ReduceOptions& options);

/// Applies one flip to the state and refreshes the cache.
void apply_to_state(SearchState& state, const Embedding& embedding, const FlipCatalog& catalog,
                    const ReduceOptions& options);

/// Greedy down-flips by score, with bursts of random up-flips when stuck.
SearchState reduce(const Complex& complex, const Coloring& coloring, const ReduceOptions& options = {});

/// No down-flip embedding exists (all down templates are searched).
bool is_irreducible(const Complex& complex, const Coloring& coloring);

struct FlipGraphNode {
  int id = 0;
  std::uint64_t key = 0;  // invariant_hash of the representative
  Complex representative;
  Coloring coloring;
  int f0 = 0;
};

struct FlipGraphEdge {
  int from = 0;
  int to = 0;
  int template_id = -1;
};

struct FlipGraph {
  int dim = 0;
  std::vector<FlipGraphNode> nodes;
  std::vector<FlipGraphEdge> edges;  // sorted, one per (from, to, template)
  bool truncated = false;
};

struct FlipGraphOptions {
  int f0_cap = 14;
  bool sufficient_only = false;
  std::size_t max_nodes = 5000;
};

/// Breadth-first search over isomorphism classes reachable by basic flips,
/// where up-flips are only taken from classes with f0 below the cap.
FlipGraph explore_flip_graph(const Complex& complex, const Coloring& coloring, const FlipGraphOptions& options);

/// DOT rendering; nodes with equal f0 share a rank.
std::string to_dot(const FlipGraph& graph);

}  // namespace crossflip
