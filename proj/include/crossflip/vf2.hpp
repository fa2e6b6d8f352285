#pragma once

// VF2-style subgraph monomorphism enumeration over adjacency lists.
//
// Every pattern edge must map onto a target edge; target edges between
// matched nodes that have no pattern counterpart are allowed. Pattern nodes
// are matched in a fixed connected order (each node after the first has an
// already-matched neighbor, its "parent"), and candidates for a node are the
// free target neighbors of its parent's image. The terminal-set look-ahead of
// VF2 prunes the remainder.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <span>
#include <utility>
#include <vector>

namespace crossflip::vf2 {

using Adjacency = std::vector<std::vector<int>>;

/// A connected matching order for `pattern` rooted at `root`.
struct MatchOrder {
  std::vector<int> nodes;   // pattern nodes in match order
  std::vector<int> parent;  // parent[i] is an earlier neighbor of nodes[i]; -1 for the root
};

inline MatchOrder bfs_order(const Adjacency& pattern, int root) {
  MatchOrder order;
  std::vector<bool> seen(pattern.size(), false);
  std::queue<std::pair<int, int>> queue;
  queue.emplace(root, -1);
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    auto [node, parent] = queue.front();
    queue.pop();
    order.nodes.push_back(node);
    order.parent.push_back(parent);
    for (int next : pattern[static_cast<std::size_t>(node)]) {
      if (seen[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = true;
      queue.emplace(next, node);
    }
  }
  return order;
}

/// Matcher state. `Semantic` supplies label compatibility:
///   bool push(int pattern_node, int target_node)  // extend, false = reject (and leave no trace)
///   void pop(int pattern_node, int target_node)   // undo the matching push
/// `visit(core)` receives pattern->target images and returns false to stop.
template <class Semantic, class Visit>
class Matcher {
 public:
  Matcher(const Adjacency& pattern, const Adjacency& target, const MatchOrder& order, Semantic& semantic,
          Visit& visit)
      : pattern_(pattern),
        target_(target),
        order_(order),
        semantic_(semantic),
        visit_(visit),
        core1_(pattern.size(), -1),
        core2_(target.size(), -1),
        term1_(pattern.size(), 0),
        term2_(target.size(), 0) {}

  /// Runs the search with the root restricted to `roots`. Returns false if
  /// the visitor stopped the enumeration.
  bool run(std::span<const int> roots) {
    if (order_.nodes.size() != pattern_.size() || pattern_.size() > target_.size()) return true;
    const int root = order_.nodes.front();
    for (int t : roots) {
      if (!try_pair(root, t, 0)) return false;
    }
    return true;
  }

 private:
  bool adjacent_in_target(int a, int b) const {
    const auto& n = target_[static_cast<std::size_t>(a)];
    return std::find(n.begin(), n.end(), b) != n.end();
  }

  bool syntactic_ok(int p, int t) const {
    if (pattern_[static_cast<std::size_t>(p)].size() > target_[static_cast<std::size_t>(t)].size()) return false;
    int p_term = 0, p_new = 0, t_term = 0, t_new = 0;
    for (int q : pattern_[static_cast<std::size_t>(p)]) {
      const int image = core1_[static_cast<std::size_t>(q)];
      if (image >= 0) {
        if (!adjacent_in_target(t, image)) return false;
      } else if (term1_[static_cast<std::size_t>(q)]) {
        ++p_term;
      } else {
        ++p_new;
      }
    }
    for (int u : target_[static_cast<std::size_t>(t)]) {
      if (core2_[static_cast<std::size_t>(u)] >= 0) continue;
      if (term2_[static_cast<std::size_t>(u)]) ++t_term;
      else ++t_new;
    }
    return p_term <= t_term && p_term + p_new <= t_term + t_new;
  }

  void mark(int p, int t, int depth) {
    core1_[static_cast<std::size_t>(p)] = t;
    core2_[static_cast<std::size_t>(t)] = p;
    if (!term1_[static_cast<std::size_t>(p)]) term1_[static_cast<std::size_t>(p)] = depth + 1;
    if (!term2_[static_cast<std::size_t>(t)]) term2_[static_cast<std::size_t>(t)] = depth + 1;
    for (int q : pattern_[static_cast<std::size_t>(p)])
      if (!term1_[static_cast<std::size_t>(q)]) term1_[static_cast<std::size_t>(q)] = depth + 1;
    for (int u : target_[static_cast<std::size_t>(t)])
      if (!term2_[static_cast<std::size_t>(u)]) term2_[static_cast<std::size_t>(u)] = depth + 1;
  }

  void unmark(int p, int t, int depth) {
    core1_[static_cast<std::size_t>(p)] = -1;
    core2_[static_cast<std::size_t>(t)] = -1;
    if (term1_[static_cast<std::size_t>(p)] == depth + 1) term1_[static_cast<std::size_t>(p)] = 0;
    if (term2_[static_cast<std::size_t>(t)] == depth + 1) term2_[static_cast<std::size_t>(t)] = 0;
    for (int q : pattern_[static_cast<std::size_t>(p)])
      if (term1_[static_cast<std::size_t>(q)] == depth + 1) term1_[static_cast<std::size_t>(q)] = 0;
    for (int u : target_[static_cast<std::size_t>(t)])
      if (term2_[static_cast<std::size_t>(u)] == depth + 1) term2_[static_cast<std::size_t>(u)] = 0;
  }

  bool try_pair(int p, int t, std::size_t depth) {
    if (core2_[static_cast<std::size_t>(t)] >= 0 || !syntactic_ok(p, t)) return true;
    if (!semantic_.push(p, t)) return true;
    mark(p, t, static_cast<int>(depth));
    const bool keep_going = extend(depth + 1);
    unmark(p, t, static_cast<int>(depth));
    semantic_.pop(p, t);
    return keep_going;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.nodes.size()) return visit_(std::as_const(core1_));
    const int p = order_.nodes[depth];
    const int parent_image = core1_[static_cast<std::size_t>(order_.parent[depth])];
    for (int t : target_[static_cast<std::size_t>(parent_image)]) {
      if (!try_pair(p, t, depth)) return false;
    }
    return true;
  }

  const Adjacency& pattern_;
  const Adjacency& target_;
  const MatchOrder& order_;
  Semantic& semantic_;
  Visit& visit_;
  std::vector<int> core1_;
  std::vector<int> core2_;
  std::vector<int> term1_;
  std::vector<int> term2_;
};

/// Convenience wrapper: all monomorphisms with the root drawn from `roots`.
template <class Semantic, class Visit>
bool enumerate(const Adjacency& pattern, const Adjacency& target, const MatchOrder& order,
               std::span<const int> roots, Semantic& semantic, Visit visit) {
  Matcher<Semantic, Visit> matcher(pattern, target, order, semantic, visit);
  return matcher.run(roots);
}

/// Semantic hook that accepts everything (plain graph monomorphisms).
struct AcceptAll {
  bool push(int, int) { return true; }
  void pop(int, int) {}
};

}  // namespace crossflip::vf2
