#include "crossflip/dual_graph.hpp"

#include <algorithm>
#include <queue>

#include "crossflip/error.hpp"

namespace crossflip {

bool DualGraph::adjacent(int a, int b) const {
  const auto& n = adjacency[static_cast<std::size_t>(a)];
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<int> DualGraph::distances(int source) const {
  std::vector<int> dist(adjacency.size(), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push(w);
    }
  }
  return dist;
}

std::vector<std::vector<int>> DualGraph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(adjacency.size(), false);
  for (std::size_t s = 0; s < adjacency.size(); ++s) {
    if (seen[s]) continue;
    auto dist = distances(static_cast<int>(s));
    std::vector<int> comp;
    for (std::size_t i = 0; i < dist.size(); ++i)
      if (dist[i] >= 0) {
        seen[i] = true;
        comp.push_back(static_cast<int>(i));
      }
    out.push_back(std::move(comp));
  }
  return out;
}

DualGraph dual_graph(const Complex& complex) {
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "dual graph needs a pure complex");
  DualGraph g;
  const auto& facets = complex.facets();
  g.adjacency.resize(facets.size());

  std::vector<std::pair<Face, int>> incidences;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const Face& f = facets[i];
    if (f.empty()) continue;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face ridge;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != skip) ridge.push_back(f[j]);
      incidences.emplace_back(std::move(ridge), static_cast<int>(i));
    }
  }
  std::sort(incidences.begin(), incidences.end());
  g.every_ridge_twice = true;
  for (std::size_t i = 0; i < incidences.size();) {
    std::size_t j = i;
    std::vector<int> owners;
    while (j < incidences.size() && incidences[j].first == incidences[i].first) owners.push_back(incidences[j++].second);
    if (owners.size() != 2) g.every_ridge_twice = false;
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        g.adjacency[static_cast<std::size_t>(owners[a])].push_back(owners[b]);
        g.adjacency[static_cast<std::size_t>(owners[b])].push_back(owners[a]);
      }
    g.ridges.emplace_back(incidences[i].first, std::move(owners));
    i = j;
  }
  for (auto& n : g.adjacency) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  g.strongly_connected = !facets.empty() && g.components().size() == 1;
  return g;
}

bool is_pseudomanifold(const Complex& complex) {
  if (complex.is_void() || !complex.is_pure()) return false;
  return dual_graph(complex).is_pseudomanifold();
}

}  // namespace crossflip
