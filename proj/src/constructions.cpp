#include "crossflip/constructions.hpp"

#include <algorithm>
#include <map>

#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"

namespace crossflip {

namespace {

Face sorted(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

void check_bijection(const Gluing& g) {
  if (g.from.size() != g.to.size() || g.from.empty()) throw Error(ErrorKind::BadGluing, "gluing sizes differ");
  const Face f = sorted(g.from), t = sorted(g.to);
  if (std::adjacent_find(f.begin(), f.end()) != f.end() || std::adjacent_find(t.begin(), t.end()) != t.end())
    throw Error(ErrorKind::BadGluing, "gluing is not a bijection");
}

std::map<Vertex, Vertex> identification(const Gluing& g) {
  std::map<Vertex, Vertex> out;
  for (std::size_t i = 0; i < g.from.size(); ++i) out[g.to[i]] = g.from[i];
  return out;
}

Face renamed(const Face& f, const std::map<Vertex, Vertex>& map) {
  Face out;
  for (Vertex v : f) {
    auto it = map.find(v);
    out.push_back(it == map.end() ? v : it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Coloring merged(const Coloring& a, const Coloring& b, const std::map<Vertex, Vertex>& map) {
  Coloring out(std::max(a.num_colors(), b.num_colors()));
  for (Vertex v : a.vertices()) out.set(v, a.color(v));
  for (Vertex v : b.vertices())
    if (!map.contains(v)) out.set(v, b.color(v));
  return out;
}

}  // namespace

Complex connected_sum(const Complex& a, const Complex& b, const Gluing& gluing) {
  check_bijection(gluing);
  const Face f = sorted(gluing.from), g = sorted(gluing.to);
  if (!face_intersection(a.vertices(), b.vertices()).empty())
    throw Error(ErrorKind::LabelCollision, "connected sum needs disjoint vertex sets");
  if (!a.has_facet(f)) throw Error(ErrorKind::BadGluing, to_string(f) + " is not a facet of the first complex");
  if (!b.has_facet(g)) throw Error(ErrorKind::BadGluing, to_string(g) + " is not a facet of the second complex");

  const auto map = identification(gluing);
  std::vector<Face> facets;
  for (const auto& x : a.facets())
    if (x != f) facets.push_back(x);
  for (const auto& x : b.facets())
    if (x != g) facets.push_back(renamed(x, map));
  return Complex::from_facets(std::move(facets), std::max(a.next_label(), b.next_label()));
}

ColoredComplex connected_sum(const ColoredComplex& a, const ColoredComplex& b, const Gluing& gluing) {
  check_bijection(gluing);
  for (std::size_t i = 0; i < gluing.from.size(); ++i)
    if (a.coloring.color(gluing.from[i]) != b.coloring.color(gluing.to[i]))
      throw Error(ErrorKind::ColorMismatch, "vertices " + std::to_string(gluing.from[i]) + " and " +
                                                std::to_string(gluing.to[i]) + " have different colors");
  Complex sum = connected_sum(a.complex, b.complex, gluing);
  return {std::move(sum), merged(a.coloring, b.coloring, identification(gluing))};
}

std::string handle_violation(const Complex& complex, const Gluing& gluing, const HandleOptions& options) {
  if (gluing.from.size() != gluing.to.size() || gluing.from.empty()) return "gluing sizes differ";
  const Face f = sorted(gluing.from), g = sorted(gluing.to);
  const int fi = complex.facet_index(f), gi = complex.facet_index(g);
  if (fi < 0 || gi < 0) return "both sides must be facets";
  if (!face_intersection(f, g).empty()) return "facets intersect";
  for (std::size_t i = 0; i < gluing.from.size(); ++i) {
    const auto a = complex.neighbors(gluing.from[i]);
    const auto b = complex.neighbors(gluing.to[i]);
    if (!face_intersection(a, b).empty())
      return "links of " + std::to_string(gluing.from[i]) + " and " + std::to_string(gluing.to[i]) + " meet";
  }
  if (options.require_even_distance) {
    const auto dist = dual_graph(complex).distances(fi);
    if (dist[static_cast<std::size_t>(gi)] < 0 || dist[static_cast<std::size_t>(gi)] % 2 != 0)
      return "dual-graph distance is not even";
  }
  return {};
}

Complex handle_addition(const Complex& complex, const Gluing& gluing, const HandleOptions& options) {
  check_bijection(gluing);
  if (auto why = handle_violation(complex, gluing, options); !why.empty()) throw Error(ErrorKind::BadGluing, why);
  const Face f = sorted(gluing.from), g = sorted(gluing.to);
  const auto map = identification(gluing);
  std::vector<Face> facets;
  for (const auto& x : complex.facets())
    if (x != f && x != g) facets.push_back(renamed(x, map));
  return Complex::from_facets(std::move(facets), complex.next_label());
}

ColoredComplex handle_addition(const ColoredComplex& complex, const Gluing& gluing, const HandleOptions& options) {
  check_bijection(gluing);
  for (std::size_t i = 0; i < gluing.from.size(); ++i)
    if (complex.coloring.color(gluing.from[i]) != complex.coloring.color(gluing.to[i]))
      throw Error(ErrorKind::BadGluing, "vertices " + std::to_string(gluing.from[i]) + " and " +
                                            std::to_string(gluing.to[i]) + " have different colors");
  Complex result = handle_addition(complex.complex, gluing, options);
  Coloring coloring = complex.coloring;
  for (Vertex v : gluing.to) coloring.erase(v);
  return {std::move(result), std::move(coloring)};
}

namespace {

// Hands out labels for symbolic vertex names.
class Namer {
 public:
  Namer() = default;
  explicit Namer(std::map<std::string, Vertex> names) : names_(std::move(names)) {
    for (const auto& [name, label] : names_) next_ = std::max(next_, label + 1);
  }

  Vertex operator()(const std::string& name) {
    auto [it, fresh] = names_.emplace(name, next_);
    if (fresh) ++next_;
    return it->second;
  }
  Vertex at(const std::string& name) const { return names_.at(name); }

  // After `gone` has been identified with `kept`.
  void alias(const std::string& gone, const std::string& kept) { names_[gone] = names_.at(kept); }

  std::map<std::string, Vertex> table() const { return names_; }

 private:
  std::map<std::string, Vertex> names_;
  Vertex next_ = 0;
};

std::vector<std::string> indexed(const std::string& stem, int from = 1, int to = 4) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// ∂C_4(v_1..v_4, w_1..w_4): {v_i, w_i} are the non-edges, both colored i-1.
ColoredComplex named_cross_polytope(Namer& namer, const std::vector<std::string>& v,
                                    const std::vector<std::string>& w) {
  std::vector<Face> facets;
  const std::size_t n = v.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Face f;
    for (std::size_t i = 0; i < n; ++i) f.push_back(namer((mask >> i) & 1u ? w[i] : v[i]));
    facets.push_back(std::move(f));
  }
  Coloring coloring(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    coloring.set(namer.at(v[i]), static_cast<int>(i));
    coloring.set(namer.at(w[i]), static_cast<int>(i));
  }
  return {Complex::from_facets(std::move(facets)), std::move(coloring)};
}

Gluing by_names(const Namer& namer, const std::vector<std::string>& kept, const std::vector<std::string>& gone) {
  Gluing g;
  for (const auto& k : kept) g.from.push_back(namer.at(k));
  for (const auto& x : gone) g.to.push_back(namer.at(x));
  return g;
}

void alias_all(Namer& namer, const std::vector<std::string>& gone, const std::vector<std::string>& kept) {
  for (std::size_t i = 0; i < gone.size(); ++i) namer.alias(gone[i], kept[i]);
}

ColoredComplex sum_by_names(Namer& namer, const ColoredComplex& a, const ColoredComplex& b,
                            const std::vector<std::string>& kept, const std::vector<std::string>& gone) {
  auto out = connected_sum(a, b, by_names(namer, kept, gone));
  alias_all(namer, gone, kept);
  return out;
}

ColoredComplex handle_by_names(Namer& namer, const ColoredComplex& a, const std::vector<std::string>& kept,
                               const std::vector<std::string>& gone, const HandleOptions& options = {}) {
  auto out = handle_addition(a, by_names(namer, kept, gone), options);
  alias_all(namer, gone, kept);
  return out;
}

Construction twisted_12(Namer& namer) {
  const auto x = indexed("x"), y = indexed("y"), z = indexed("z");
  const auto xp = indexed("x'"), yp = indexed("y'"), zp = indexed("z'");
  auto p = named_cross_polytope(namer, x, yp);
  auto q = named_cross_polytope(namer, y, zp);
  auto r = named_cross_polytope(namer, z, xp);
  auto pq = sum_by_names(namer, p, q, yp, y);
  auto pqr = sum_by_names(namer, pq, r, zp, z);
  auto result = handle_by_names(namer, pqr, x, xp);
  return {std::move(result), namer.table()};
}

// Facet vertices listed by color.
std::vector<Vertex> by_color(const Face& f, const Coloring& coloring) {
  std::vector<Vertex> out(f.size(), -1);
  for (Vertex v : f) out[static_cast<std::size_t>(coloring.color(v))] = v;
  return out;
}

}  // namespace

Construction build_s2_twisted_s1_12() {
  Namer namer;
  return twisted_12(namer);
}

Construction build_s2_times_s1_16() {
  Namer namer;
  const auto x = indexed("x"), y = indexed("y"), z = indexed("z"), w = indexed("w");
  const auto yp = indexed("y'"), wp = indexed("w'");
  const std::vector<std::string> c_far{"x''1", "y''2", "y''3", "y''4"};
  const std::vector<std::string> d_far{"y''1", "z2#D", "z3#D", "z4#D"};
  auto a = named_cross_polytope(namer, x, yp);
  auto b = named_cross_polytope(namer, y, z);
  auto c = named_cross_polytope(namer, w, c_far);
  auto d = named_cross_polytope(namer, wp, d_far);
  auto ab = sum_by_names(namer, a, b, yp, y);
  auto cd = sum_by_names(namer, c, d, w, wp);
  // x''_1 ~ x_1 and y''_i ~ y_i (i = 2..4): {x1,y2,y3,y4} survives in A#B.
  const std::vector<std::string> ab_side{"x1", "y2", "y3", "y4"};
  auto abcd = sum_by_names(namer, ab, cd, ab_side, c_far);
  // The fourth copy's z_i are B's z_i, and y''_1 ~ y_1.
  const std::vector<std::string> b_side{"y1", "z2", "z3", "z4"};
  const std::vector<std::string> d_side{"y''1", "z2#D", "z3#D", "z4#D"};
  auto result = handle_by_names(namer, abcd, b_side, d_side);
  return {std::move(result), namer.table()};
}

Construction build_bundle_double(BundleKind kind) {
  Namer namer;
  if (kind == BundleKind::Orientable) {
    Construction base = build_s2_times_s1_16();
    Namer names(base.names);
    const auto x = indexed("x"), x3 = indexed("x'''");
    const std::vector<std::string> far{"w'''1", "z'''2", "z'''3", "z'''4"};
    auto e = named_cross_polytope(names, x3, far);
    auto summed = sum_by_names(names, base.result, e, x, x3);
    const std::vector<std::string> g{"w1", "z2", "z3", "z4"};
    auto result = handle_by_names(names, summed, g, far);
    return {std::move(result), names.table()};
  }

  Construction base = twisted_12(namer);
  const ColoredComplex& d12 = base.result;
  const DualGraph graph = dual_graph(d12.complex);

  // F: the first facet; G: the first facet disjoint from F at even dual
  // distance whose handle with the far copy is valid.
  const int fi = 0;
  const Face f = d12.complex.facets()[static_cast<std::size_t>(fi)];
  const auto r = by_color(f, d12.coloring);
  const auto s = indexed("s"), t = indexed("t"), rp = indexed("r'"), sp = indexed("s'");
  auto cs = named_cross_polytope(namer, s, rp);
  auto ct = named_cross_polytope(namer, t, sp);
  Gluing first;
  first.from = r;
  for (const auto& name : rp) first.to.push_back(namer.at(name));
  auto with_s = connected_sum(d12, cs, first);
  for (std::size_t i = 0; i < rp.size(); ++i) base.names[rp[i]] = r[i];
  auto with_t = sum_by_names(namer, with_s, ct, s, sp);

  const auto dist = graph.distances(fi);
  std::vector<Vertex> tv;
  for (const auto& name : t) tv.push_back(namer.at(name));
  for (std::size_t gi = 0; gi < d12.complex.num_facets(); ++gi) {
    const Face& g = d12.complex.facets()[gi];
    if (!face_intersection(f, g).empty() || dist[gi] % 2 != 0) continue;
    Gluing handle{by_color(g, d12.coloring), tv};
    if (!handle_violation(with_t.complex, handle).empty()) continue;
    auto result = handle_addition(with_t, handle);
    auto names = namer.table();
    for (const auto& [name, label] : base.names) names[name] = label;
    for (std::size_t i = 0; i < t.size(); ++i) names[t[i]] = handle.from[i];
    return {std::move(result), std::move(names)};
  }
  throw Error(ErrorKind::BadGluing, "no admissible second facet for the handle");
}

long long walkup_equality_gap(const Complex& complex, long long reduced_beta1) {
  const FVector f = f_vector(complex);
  const long long d = complex.dim();
  return 2 * f(1) - 3 * d * f(0) - 4 * ((d + 1) * d / 2) * (reduced_beta1 - 1);
}

ColoredComplex suspension_tower(const ColoredComplex& base, int k) {
  ColoredComplex out = base;
  for (int i = 0; i < k; ++i) {
    const Vertex north = out.complex.next_label();
    const Vertex south = north + 1;
    const int color = out.coloring.num_colors();
    Complex next = suspension(out.complex, north, south);
    Coloring coloring(color + 1);
    for (Vertex v : out.coloring.vertices()) coloring.set(v, out.coloring.color(v));
    coloring.set(north, color);
    coloring.set(south, color);
    out = {std::move(next), std::move(coloring)};
  }
  return out;
}

ColoredComplex colored_cross_polytope(int d) { return {cross_polytope_boundary(d), cross_polytope_coloring(d)}; }

ColoredComplex cross_polytopal_stacked_sphere(int d, int copies) {
  if (copies < 1) throw Error(ErrorKind::BadGluing, "need at least one copy");
  ColoredComplex out = colored_cross_polytope(d);
  for (int c = 1; c < copies; ++c) {
    const Vertex offset = out.complex.next_label();
    ColoredComplex next{shift_labels(cross_polytope_boundary(d), offset), Coloring(d + 1)};
    for (Vertex v = 0; v <= 2 * d + 1; ++v) next.coloring.set(v + offset, v % (d + 1));
    // Glue onto the newest facet so the copies form a chain.
    const Face& onto = out.complex.facets().back();
    Gluing g{by_color(onto, out.coloring), {}};
    for (Vertex v = 0; v <= d; ++v) g.to.push_back(v + offset);
    out = connected_sum(out, next, g);
  }
  return out;
}

}  // namespace crossflip
