#include "crossflip/topology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"

namespace crossflip {

long long BettiProfile::euler() const {
  long long sum = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) sum += (i % 2 ? -1 : 1) * betti[i];
  return sum;
}

std::string BettiProfile::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(betti[i]);
  }
  return out + ")";
}

namespace {

using Bits = std::vector<std::uint64_t>;

int lowest(const Bits& bits) {
  for (std::size_t w = 0; w < bits.size(); ++w)
    if (bits[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w])));
  return -1;
}

// Column reduction keyed by the lowest set row.
long long rank_f2(std::vector<Bits> columns) {
  std::unordered_map<int, std::size_t> pivot_of;
  long long rank = 0;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    Bits& col = columns[c];
    for (int low = lowest(col); low >= 0; low = lowest(col)) {
      auto it = pivot_of.find(low);
      if (it == pivot_of.end()) {
        pivot_of.emplace(low, c);
        ++rank;
        break;
      }
      const Bits& other = columns[it->second];
      for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= other[w];
    }
  }
  return rank;
}

}  // namespace

long long boundary_rank_f2(const Complex& complex, int k) {
  if (k <= 0 || k > complex.dim()) return 0;
  const auto& rows = complex.faces(k - 1);
  const auto& cols = complex.faces(k);
  const std::size_t words = (rows.size() + 63) / 64;
  std::vector<Bits> columns;
  columns.reserve(cols.size());
  Face sub;
  for (const auto& f : cols) {
    Bits bits(words, 0);
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      sub.clear();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != skip) sub.push_back(f[i]);
      const auto row = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
      bits[row / 64] |= std::uint64_t{1} << (row % 64);
    }
    columns.push_back(std::move(bits));
  }
  return rank_f2(std::move(columns));
}

BettiProfile betti_f2(const Complex& complex) {
  BettiProfile out;
  const int d = complex.dim();
  if (complex.is_void() || d < 0) return out;
  std::vector<long long> rank(static_cast<std::size_t>(d + 2), 0);
  for (int k = 1; k <= d; ++k) rank[static_cast<std::size_t>(k)] = boundary_rank_f2(complex, k);
  for (int k = 0; k <= d; ++k) {
    const long long faces = static_cast<long long>(complex.faces(k).size());
    out.betti.push_back(faces - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)]);
  }
  out.reduced = out.betti;
  out.reduced[0] -= 1;
  return out;
}

std::optional<std::vector<int>> coherent_orientation(const Complex& complex) {
  const DualGraph graph = dual_graph(complex);
  if (!graph.is_pseudomanifold()) throw Error(ErrorKind::NotPseudomanifold, "orientation needs a pseudomanifold");
  const auto& facets = complex.facets();

  // Sign a facet induces on one of its ridges: its own sign times (-1)^position
  // of the dropped vertex.
  auto dropped_position = [&](int f, const Face& ridge) {
    const Face& face = facets[static_cast<std::size_t>(f)];
    for (std::size_t i = 0; i < face.size(); ++i)
      if (!std::binary_search(ridge.begin(), ridge.end(), face[i])) return static_cast<int>(i);
    return -1;
  };

  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::queue<int> queue;
  queue.push(0);
  std::vector<std::vector<std::pair<int, std::size_t>>> ridges_of(facets.size());
  for (std::size_t r = 0; r < graph.ridges.size(); ++r)
    for (int f : graph.ridges[r].second) ridges_of[static_cast<std::size_t>(f)].emplace_back(f, r);

  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (const auto& [self, r] : ridges_of[static_cast<std::size_t>(f)]) {
      const auto& [ridge, owners] = graph.ridges[r];
      const int g = owners[0] == f ? owners[1] : owners[0];
      const int induced_f = sign[static_cast<std::size_t>(f)] * (dropped_position(f, ridge) % 2 ? -1 : 1);
      const int wanted = -induced_f * (dropped_position(g, ridge) % 2 ? -1 : 1);
      if (sign[static_cast<std::size_t>(g)] == 0) {
        sign[static_cast<std::size_t>(g)] = wanted;
        queue.push(g);
      } else if (sign[static_cast<std::size_t>(g)] != wanted) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

bool is_orientable(const Complex& complex) { return coherent_orientation(complex).has_value(); }

std::string SurfaceType::name() const {
  if (orientable) {
    if (euler == 2) return "S^2";
    const long long g = (2 - euler) / 2;
    return g == 1 ? "T^2" : "(T^2)^{#" + std::to_string(g) + "}";
  }
  const long long k = 2 - euler;
  return k == 1 ? "RP^2" : "(RP^2)^{#" + std::to_string(k) + "}";
}

namespace {

// Pure 1-dimensional, connected, every vertex in exactly two edges.
bool is_cycle(const Complex& c) {
  if (c.is_void() || c.dim() != 1 || !c.is_pure() || c.num_vertices() < 3) return false;
  for (Vertex v : c.vertices())
    if (c.facets_containing(v).size() != 2) return false;
  return dual_graph(c).strongly_connected;
}

// Connectivity of the complex through its vertex graph.
bool is_connected(const std::vector<Face>& facets) {
  std::vector<Vertex> vs;
  for (const auto& f : facets) vs.insert(vs.end(), f.begin(), f.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty()) return false;
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto index = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::size_t components = vs.size();
  for (const auto& f : facets)
    for (std::size_t i = 1; i < f.size(); ++i) {
      const int a = find(index(f[0])), b = find(index(f[i]));
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  return components == 1;
}

std::vector<Face> link_facets(const Complex& complex, const Face& face) {
  std::vector<Face> out;
  for (int fi : complex.facets_containing(face.front())) {
    const Face& f = complex.facets()[static_cast<std::size_t>(fi)];
    if (!is_subset(face, f)) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return out;
}

}  // namespace

SurfaceType classify_surface(const Complex& complex) {
  if (complex.is_void() || complex.dim() != 2 || !complex.is_pure())
    throw Error(ErrorKind::NotClosedSurface, "not a pure 2-dimensional complex");
  const DualGraph graph = dual_graph(complex);
  if (!graph.is_pseudomanifold()) throw Error(ErrorKind::NotClosedSurface, "not a connected closed pseudomanifold");
  for (Vertex v : complex.vertices())
    if (!is_cycle(link(complex, Face{v})))
      throw Error(ErrorKind::NotClosedSurface, "link of vertex " + std::to_string(v) + " is not a cycle");
  SurfaceType out;
  out.euler = f_vector(complex).euler();
  out.orientable = is_orientable(complex);
  return out;
}

bool is_normal_pseudomanifold(const Complex& complex) {
  if (complex.is_void() || !complex.is_pure() || !is_pseudomanifold(complex)) return false;
  for (int k = 0; k <= complex.dim() - 2; ++k)
    for (const auto& face : complex.faces(k))
      if (!is_connected(link_facets(complex, face))) return false;
  return true;
}

SingularityReport singular_faces(const Complex& complex) {
  if (complex.dim() != 2 || !complex.is_pure())
    throw Error(ErrorKind::DimMismatch, "singularity report needs a pure 2-dimensional complex");
  SingularityReport out;
  for (const auto& e : complex.faces(1))
    if (link_facets(complex, e).size() > 2) out.edges.push_back(e);
  for (Vertex v : complex.vertices())
    if (!is_cycle(link(complex, Face{v}))) out.vertices.push_back(v);
  std::vector<Vertex> all = out.vertices;
  for (const auto& e : out.edges) all.insert(all.end(), e.begin(), e.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.f0_sing = static_cast<long long>(all.size());
  return out;
}

bool dunce_relations(const FVector& f, long long f0_sing) {
  if (f.dim() != 2) return false;
  return f(0) - f(1) + f(2) == 1 && f0_sing + 2 * f(1) - 3 * f(2) == 0;
}

bool dunce_relations(const Complex& complex) {
  return dunce_relations(f_vector(complex), singular_faces(complex).f0_sing);
}

bool verify_shelling(const Complex& complex, const std::vector<Face>& order) {
  std::vector<Face> sorted = order;
  for (auto& f : sorted) std::sort(f.begin(), f.end());
  std::vector<Face> check = sorted;
  std::sort(check.begin(), check.end());
  if (check != complex.facets()) throw Error(ErrorKind::BadOrder, "order is not a permutation of the facets");

  const std::size_t d = static_cast<std::size_t>(complex.dim());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    std::vector<Face> ridges, meets;
    for (std::size_t j = 0; j < i; ++j) {
      Face common = face_intersection(sorted[i], sorted[j]);
      if (common.empty()) continue;
      (common.size() == d ? ridges : meets).push_back(std::move(common));
    }
    if (ridges.empty()) return false;
    for (const auto& m : meets) {
      bool covered = std::any_of(ridges.begin(), ridges.end(), [&](const Face& r) { return is_subset(m, r); });
      if (!covered) return false;
    }
  }
  return true;
}

bool all_vertex_links_isomorphic(const Complex& complex) {
  const auto& vs = complex.vertices();
  if (vs.size() < 2) return true;
  const Complex first = link(complex, Face{vs.front()});
  const FVector first_f = f_vector(first);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const Complex other = link(complex, Face{vs[i]});
    if (f_vector(other) != first_f || !is_isomorphic(first, other)) return false;
  }
  return true;
}

std::optional<VertexMap> find_free_involution(const Complex& complex) {
  std::optional<VertexMap> found;
  for_each_isomorphism(complex, complex, [&](const VertexMap& map) {
    for (const auto& [v, w] : map) {
      if (v == w || apply(map, w) != v) return true;
      if (complex.contains(Face{std::min(v, w), std::max(v, w)})) return true;
    }
    found = map;
    return false;
  });
  return found;
}

}  // namespace crossflip
