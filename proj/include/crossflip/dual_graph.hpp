#pragma once

#include <vector>

#include "crossflip/complex.hpp"

namespace crossflip {

/// Facet adjacency through shared ridges. Node i is complex.facets()[i].
struct DualGraph {
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  std::vector<std::pair<Face, std::vector<int>>> ridges;  // sorted by ridge
  bool every_ridge_twice = false;
  bool strongly_connected = false;

  std::size_t size() const { return adjacency.size(); }
  bool adjacent(int a, int b) const;
  bool is_pseudomanifold() const { return every_ridge_twice && strongly_connected; }
  /// Connected components of the facet graph, each a sorted node list.
  std::vector<std::vector<int>> components() const;
  /// Breadth-first distances from `source` (-1 when unreachable).
  std::vector<int> distances(int source) const;
};

/// Throws NotPure on non-pure input.
DualGraph dual_graph(const Complex& complex);

/// Pure, strongly connected, every ridge in exactly two facets.
bool is_pseudomanifold(const Complex& complex);

}  // namespace crossflip
