#include "crossflip/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "crossflip/error.hpp"

namespace crossflip {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finalizer over a running combination
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Index-based view of a complex used by the matcher.
struct Indexed {
  std::vector<Vertex> labels;
  std::vector<std::vector<int>> facets;         // vertex indices
  std::vector<std::vector<int>> star;           // vertex -> facet indices
  std::vector<Bits> adjacent;                   // vertex -> vertex bitset
  std::vector<Bits> incident;                   // vertex -> facet bitset
  std::vector<std::uint64_t> color;

  explicit Indexed(const Complex& c) : labels(c.vertices()) {
    const std::size_t n = labels.size();
    const std::size_t m = c.num_facets();
    star.resize(n);
    adjacent.assign(n, Bits((n + 63) / 64, 0));
    incident.assign(n, Bits((m + 63) / 64, 0));
    for (std::size_t f = 0; f < m; ++f) {
      std::vector<int> idx;
      for (Vertex v : c.facets()[f])
        idx.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
      for (int a : idx) {
        star[static_cast<std::size_t>(a)].push_back(static_cast<int>(f));
        set(incident[static_cast<std::size_t>(a)], f);
        for (int b : idx)
          if (a != b) set(adjacent[static_cast<std::size_t>(a)], static_cast<std::size_t>(b));
      }
      facets.push_back(std::move(idx));
    }
  }

  std::size_t size() const { return labels.size(); }

  void initial_colors(const Complex& c) {
    color.resize(size());
    for (std::size_t v = 0; v < size(); ++v) {
      std::uint64_t h = mix(0, static_cast<std::uint64_t>(star[v].size()));
      Vertex label = labels[v];
      for (long long x : f_vector(link(c, std::span<const Vertex>(&label, 1))).entries)
        h = mix(h, static_cast<std::uint64_t>(x));
      color[v] = h;
    }
  }

  void refine_once() {
    std::vector<std::uint64_t> next(size());
    for (std::size_t v = 0; v < size(); ++v) {
      std::vector<std::uint64_t> around;
      for (int f : star[v]) {
        std::vector<std::uint64_t> cofacet;
        for (int w : facets[static_cast<std::size_t>(f)])
          if (static_cast<std::size_t>(w) != v) cofacet.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(cofacet.begin(), cofacet.end());
        std::uint64_t h = 17;
        for (auto x : cofacet) h = mix(h, x);
        around.push_back(h);
      }
      std::sort(around.begin(), around.end());
      std::uint64_t h = color[v];
      for (auto x : around) h = mix(h, x);
      next[v] = h;
    }
    color = std::move(next);
  }

  std::size_t classes() const {
    auto c = color;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }
};

void refine_jointly(Indexed& a, const Complex& ca, Indexed& b, const Complex& cb) {
  a.initial_colors(ca);
  b.initial_colors(cb);
  std::size_t ka = a.classes(), kb = b.classes();
  for (std::size_t round = 0; round < a.size() + 1; ++round) {
    a.refine_once();
    b.refine_once();
    std::size_t na = a.classes(), nb = b.classes();
    if (na == ka && nb == kb) break;
    ka = na;
    kb = nb;
  }
}

class Matcher {
 public:
  Matcher(const Indexed& a, const Indexed& b, const Complex& cb,
          const std::function<bool(const VertexMap&)>& visit)
      : a_(a), b_(b), cb_(cb), visit_(visit), map_(a.size(), -1), used_(b.size(), false) {
    build_order();
  }

  void run() {
    if (a_.size() == 0) {
      visit_({});
      return;
    }
    search(0);
  }

 private:
  void build_order() {
    const std::size_t n = a_.size();
    std::map<std::uint64_t, int> class_size;
    for (auto c : a_.color) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<int> links(n, 0);
    pos_.assign(n, -1);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0) {
          best = static_cast<int>(v);
          continue;
        }
        auto bv = static_cast<std::size_t>(best);
        if (links[v] != links[bv] ? links[v] > links[bv] : class_size[a_.color[v]] < class_size[a_.color[bv]])
          best = static_cast<int>(v);
      }
      auto bv = static_cast<std::size_t>(best);
      placed[bv] = true;
      pos_[bv] = static_cast<int>(step);
      order_.push_back(best);
      for (std::size_t w = 0; w < n; ++w)
        if (test(a_.adjacent[bv], w)) ++links[w];
    }
  }

  bool feasible(int u, int w, std::size_t depth) const {
    const auto uu = static_cast<std::size_t>(u);
    const auto ww = static_cast<std::size_t>(w);
    if (a_.color[uu] != b_.color[ww]) return false;
    for (std::size_t j = 0; j < depth; ++j) {
      const auto p = static_cast<std::size_t>(order_[j]);
      const auto q = static_cast<std::size_t>(map_[p]);
      if (test(a_.adjacent[uu], p) != test(b_.adjacent[ww], q)) return false;
    }
    // Mapped part of every facet around u must land on a face of b.
    for (int f : a_.star[uu]) {
      Bits common = b_.incident[ww];
      for (int x : a_.facets[static_cast<std::size_t>(f)]) {
        const auto xx = static_cast<std::size_t>(x);
        if (xx == uu || pos_[xx] >= static_cast<int>(depth)) continue;
        const auto& inc = b_.incident[static_cast<std::size_t>(map_[xx])];
        for (std::size_t k = 0; k < common.size(); ++k) common[k] &= inc[k];
      }
      if (std::all_of(common.begin(), common.end(), [](std::uint64_t x) { return x == 0; })) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return emit();
    const int u = order_[depth];
    for (std::size_t w = 0; w < b_.size(); ++w) {
      if (used_[w] || !feasible(u, static_cast<int>(w), depth)) continue;
      map_[static_cast<std::size_t>(u)] = static_cast<int>(w);
      used_[w] = true;
      const bool keep_going = search(depth + 1);
      used_[w] = false;
      map_[static_cast<std::size_t>(u)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  bool emit() {
    for (const auto& f : a_.facets) {
      Face image;
      for (int x : f) image.push_back(b_.labels[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])]);
      std::sort(image.begin(), image.end());
      if (!cb_.has_facet(image)) return true;
    }
    VertexMap out;
    for (std::size_t v = 0; v < a_.size(); ++v)
      out.emplace_back(a_.labels[v], b_.labels[static_cast<std::size_t>(map_[v])]);
    return visit_(out);
  }

  const Indexed& a_;
  const Indexed& b_;
  const Complex& cb_;
  const std::function<bool(const VertexMap&)>& visit_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_isomorphism(const Complex& a, const Complex& b,
                          const std::function<bool(const VertexMap&)>& visit) {
  if (a.num_vertices() > kIsomorphismVertexCap || b.num_vertices() > kIsomorphismVertexCap)
    throw Error(ErrorKind::SizeExceeded, "isomorphism test limited to " +
                                             std::to_string(kIsomorphismVertexCap) + " vertices");
  if (a.is_void() || b.is_void()) {
    if (a.is_void() && b.is_void()) visit({});
    return;
  }
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets() || a.dim() != b.dim() ||
      f_vector(a) != f_vector(b))
    return;
  Indexed ia(a), ib(b);
  refine_jointly(ia, a, ib, b);
  auto ca = ia.color, cb = ib.color;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return;
  Matcher(ia, ib, b, visit).run();
}

std::optional<VertexMap> is_isomorphic(const Complex& a, const Complex& b) {
  std::optional<VertexMap> found;
  for_each_isomorphism(a, b, [&](const VertexMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::uint64_t invariant_hash(const Complex& complex) {
  std::uint64_t h = 0x1234;
  for (long long x : f_vector(complex).entries) h = mix(h, static_cast<std::uint64_t>(x));
  if (complex.num_vertices() == 0) return h;
  Indexed ic(complex);
  ic.initial_colors(complex);
  for (int round = 0; round < 3; ++round) ic.refine_once();
  auto colors = ic.color;
  std::sort(colors.begin(), colors.end());
  for (auto c : colors) h = mix(h, c);
  return h;
}

Vertex apply(const VertexMap& map, Vertex v) {
  auto it = std::lower_bound(map.begin(), map.end(), std::pair<Vertex, Vertex>{v, 0},
                             [](const auto& x, const auto& y) { return x.first < y.first; });
  if (it == map.end() || it->first != v) throw Error(ErrorKind::FaceNotPresent, "vertex not in map domain");
  return it->second;
}

}  // namespace crossflip
