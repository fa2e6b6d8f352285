#include "crossflip/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "crossflip/dual_graph.hpp"

namespace crossflip {

int Coloring::color(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return colors_[static_cast<std::size_t>(it - vertices_.begin())];
}

void Coloring::set(Vertex v, int color) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  auto pos = it - vertices_.begin();
  if (it != vertices_.end() && *it == v) {
    colors_[static_cast<std::size_t>(pos)] = color;
    return;
  }
  vertices_.insert(it, v);
  colors_.insert(colors_.begin() + pos, color);
}

void Coloring::erase(Vertex v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return;
  colors_.erase(colors_.begin() + (it - vertices_.begin()));
  vertices_.erase(it);
}

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(num_colors_), 0);
  for (int c : colors_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(num_colors_));
  for (std::size_t i = 0; i < vertices_.size(); ++i) out[static_cast<std::size_t>(colors_[i])].push_back(vertices_[i]);
  return out;
}

Coloring Coloring::canonical() const {
  auto cls = classes();
  std::vector<int> order(cls.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = cls[static_cast<std::size_t>(a)];
    const auto& y = cls[static_cast<std::size_t>(b)];
    if (x.empty() != y.empty()) return y.empty();
    if (x.size() != y.size()) return x.size() < y.size();
    if (x.empty()) return a < b;
    return x.front() < y.front();
  });
  std::vector<int> rename(cls.size());
  for (std::size_t i = 0; i < order.size(); ++i) rename[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  Coloring out = *this;
  for (auto& c : out.colors_) c = rename[static_cast<std::size_t>(c)];
  return out;
}

bool Coloring::same_partition(const Coloring& other) const {
  if (vertices_ != other.vertices_) return false;
  return canonical().colors_ == other.canonical().colors_;
}

bool is_proper(const Complex& complex, const Coloring& coloring) {
  for (Vertex v : complex.vertices())
    if (coloring.color(v) < 0) return false;
  for (const auto& f : complex.facets()) {
    auto colors = face_colors(f, coloring);
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) return false;
  }
  return true;
}

bool is_facet_rainbow(const Complex& complex, const Coloring& coloring) {
  for (const auto& f : complex.facets()) {
    auto colors = face_colors(f, coloring);
    std::vector<int> all(static_cast<std::size_t>(complex.dim() + 1));
    std::iota(all.begin(), all.end(), 0);
    if (colors != all) return false;
  }
  return true;
}

std::vector<int> face_colors(std::span<const Vertex> face, const Coloring& coloring) {
  std::vector<int> out;
  for (Vertex v : face) out.push_back(coloring.color(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Local coloring of one dual-graph component, colors forced by propagation.
std::optional<std::vector<std::pair<Vertex, int>>> propagate(const Complex& complex, const DualGraph& graph,
                                                             const std::vector<int>& component) {
  const int d = complex.dim();
  Coloring local(d + 1);
  const auto& facets = complex.facets();
  const Face& seed = facets[static_cast<std::size_t>(component.front())];
  for (std::size_t i = 0; i < seed.size(); ++i) local.set(seed[i], static_cast<int>(i));

  std::vector<bool> seen(facets.size(), false);
  std::queue<int> queue;
  seen[static_cast<std::size_t>(component.front())] = true;
  queue.push(component.front());
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : graph.adjacency[static_cast<std::size_t>(f)]) {
      if (seen[static_cast<std::size_t>(g)]) continue;
      seen[static_cast<std::size_t>(g)] = true;
      const Face& facet = facets[static_cast<std::size_t>(g)];
      std::vector<bool> used(static_cast<std::size_t>(d + 1), false);
      Vertex fresh = -1;
      for (Vertex v : facet) {
        int c = local.color(v);
        if (c < 0) {
          fresh = v;
          continue;
        }
        if (used[static_cast<std::size_t>(c)]) return std::nullopt;
        used[static_cast<std::size_t>(c)] = true;
      }
      if (fresh >= 0) {
        auto missing = std::find(used.begin(), used.end(), false) - used.begin();
        local.set(fresh, static_cast<int>(missing));
      }
      queue.push(g);
    }
  }
  std::vector<std::pair<Vertex, int>> out;
  for (Vertex v : local.vertices()) out.emplace_back(v, local.color(v));
  return out;
}

struct ComponentSolver {
  int colors;
  std::vector<std::vector<std::pair<Vertex, int>>> locals;
  Coloring current;
  std::optional<Coloring> first;
  int solutions = 0;
  int limit = 1;

  void solve(std::size_t index) {
    if (solutions >= limit) return;
    if (index == locals.size()) {
      if (!first) first = current;
      ++solutions;
      return;
    }
    // The first component fixes the global color names.
    std::vector<int> perm(static_cast<std::size_t>(colors));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (const auto& [v, c] : locals[index]) {
        int g = current.color(v);
        if (g >= 0 && g != perm[static_cast<std::size_t>(c)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Coloring saved = current;
      for (const auto& [v, c] : locals[index]) current.set(v, perm[static_cast<std::size_t>(c)]);
      solve(index + 1);
      current = std::move(saved);
      if (index == 0 || solutions >= limit) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

std::optional<ComponentSolver> solve_components(const Complex& complex, int limit) {
  if (complex.is_void() || !complex.is_pure()) return std::nullopt;
  ComponentSolver solver{complex.dim() + 1, {}, Coloring(complex.dim() + 1), std::nullopt, 0, limit};
  if (complex.dim() < 0) {
    solver.first = Coloring(0);
    solver.solutions = 1;
    return solver;
  }
  const DualGraph graph = dual_graph(complex);
  for (const auto& comp : graph.components()) {
    auto local = propagate(complex, graph, comp);
    if (!local) return std::nullopt;
    solver.locals.push_back(std::move(*local));
  }
  solver.solve(0);
  if (!solver.first) return std::nullopt;
  return solver;
}

}  // namespace

std::optional<Coloring> find_coloring(const Complex& complex) {
  auto solver = solve_components(complex, 1);
  if (!solver || !solver->first) return std::nullopt;
  if (!is_proper(complex, *solver->first)) return std::nullopt;
  return solver->first->canonical();
}

bool coloring_is_unique_up_to_permutation(const Complex& complex) {
  auto solver = solve_components(complex, 2);
  return solver && solver->solutions == 1;
}

std::vector<std::vector<int>> color_signature(const Complex& sub, const Coloring& coloring) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= sub.dim(); ++k) {
    std::vector<int> masks;
    for (const auto& f : sub.faces(k)) {
      int mask = 0;
      for (int c : face_colors(f, coloring)) mask |= 1 << c;
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    out.push_back(std::move(masks));
  }
  return out;
}

Coloring dimension_coloring(const Subdivision& subdivision) {
  int colors = 0;
  for (const auto& f : subdivision.face_of_vertex) colors = std::max(colors, static_cast<int>(f.size()));
  Coloring out(colors);
  for (std::size_t v = 0; v < subdivision.face_of_vertex.size(); ++v)
    out.set(static_cast<Vertex>(v), static_cast<int>(subdivision.face_of_vertex[v].size()) - 1);
  return out;
}

Coloring cross_polytope_coloring(int d) {
  Coloring out(d + 1);
  for (Vertex v = 0; v <= 2 * d + 1; ++v) out.set(v, v % (d + 1));
  return out;
}

}  // namespace crossflip
