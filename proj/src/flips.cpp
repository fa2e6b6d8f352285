#include "crossflip/flips.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <set>

#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"

namespace crossflip {

std::string_view to_string(FlipKind kind) {
  switch (kind) {
    case FlipKind::Up: return "up";
    case FlipKind::Down: return "down";
    case FlipKind::Trivial: return "trivial";
  }
  return "?";
}

Complex phi_complex(std::span<const int> index_set, int d) {
  if (index_set.empty()) throw Error(ErrorKind::EmptyIndexSet, "phi needs a nonempty index set");
  std::vector<bool> wanted(static_cast<std::size_t>(d + 2), false);
  for (int i : index_set) {
    if (i < 0 || i > d + 1) throw Error(ErrorKind::DimMismatch, "index " + std::to_string(i) + " outside [0, d+1]");
    wanted[static_cast<std::size_t>(i)] = true;
  }
  // A facet of the cross-polytope belongs to Φ_i for the first i with v_i in it
  // (i = d+1 when it contains no v_i at all).
  const Complex cross = cross_polytope_boundary(d);
  std::vector<Face> facets;
  for (const auto& f : cross.facets()) {
    int first = d + 1;
    for (Vertex v : f)
      if (v > d) {
        first = v - d - 1;
        break;
      }
    if (wanted[static_cast<std::size_t>(first)]) facets.push_back(f);
  }
  return Complex::from_facets(std::move(facets));
}

namespace {

std::string index_set_name(const std::vector<int>& set) {
  std::string out = "[";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i]);
  }
  return out + "]";
}

std::vector<int> mask_to_set(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

// Nonempty proper subsets of {0..d+1}: those inside {0..d} first, each group
// by size then lexicographically.
std::vector<std::vector<int>> enumeration_order(int d) {
  std::vector<std::vector<int>> low, high;
  const unsigned full = (1u << (d + 2)) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    auto set = mask_to_set(mask);
    ((mask >> (d + 1)) & 1u ? high : low).push_back(std::move(set));
  }
  auto by_size = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::sort(low.begin(), low.end(), by_size);
  std::sort(high.begin(), high.end(), by_size);
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

std::vector<int> complement_set(const std::vector<int>& set, int d) {
  std::vector<int> out;
  for (int i = 0; i <= d + 1; ++i)
    if (!std::binary_search(set.begin(), set.end(), i)) out.push_back(i);
  return out;
}

Complex boundary_of_ball(const Complex& ball) {
  std::vector<Face> ridges;
  for (const auto& [ridge, owners] : dual_graph(ball).ridges)
    if (owners.size() == 1) ridges.push_back(ridge);
  return Complex::from_facets(std::move(ridges));
}

std::vector<int> degrees(const std::vector<Face>& edges, int labels) {
  std::vector<int> out(static_cast<std::size_t>(labels), 0);
  for (const auto& e : edges) {
    ++out[static_cast<std::size_t>(e[0])];
    ++out[static_cast<std::size_t>(e[1])];
  }
  return out;
}

FlipTemplate make_template(const std::vector<int>& index_set, int d) {
  FlipTemplate t;
  t.dim = d;
  t.index_set = index_set;
  t.name = index_set_name(index_set);
  t.phi = phi_complex(index_set, d);
  const auto rest = complement_set(index_set, d);
  t.complement = phi_complex(rest, d);
  t.boundary = boundary_of_ball(t.phi);
  t.delta_f = f_vector(t.complement) - f_vector(t.phi);

  const auto& pv = t.phi.vertices();
  const auto& cv = t.complement.vertices();
  std::set_difference(pv.begin(), pv.end(), cv.begin(), cv.end(), std::back_inserter(t.removed));
  std::set_difference(cv.begin(), cv.end(), pv.begin(), pv.end(), std::back_inserter(t.added));
  if (t.added.size() > t.removed.size()) t.kind = FlipKind::Up;
  else if (t.added.size() < t.removed.size()) t.kind = FlipKind::Down;

  const int labels = 2 * d + 2;
  if (d >= 1) {
    t.boundary_edges = t.boundary.dim() >= 1 ? t.boundary.faces(1) : std::vector<Face>{};
    const auto phi_deg = degrees(t.phi.faces(1), labels);
    t.complement_degree = degrees(t.complement.faces(1), labels);
    t.degree_change.resize(static_cast<std::size_t>(labels));
    for (int x = 0; x < labels; ++x)
      t.degree_change[static_cast<std::size_t>(x)] =
          t.complement_degree[static_cast<std::size_t>(x)] - phi_deg[static_cast<std::size_t>(x)];
  }

  DualGraph graph = dual_graph(t.phi);
  int root = 0;
  t.radius = static_cast<int>(graph.size());
  for (int r = 0; r < static_cast<int>(graph.size()); ++r) {
    const auto dist = graph.distances(r);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc < t.radius) {
      t.radius = ecc;
      root = r;
    }
  }
  t.phi_dual = std::move(graph.adjacency);
  t.order = vf2::bfs_order(t.phi_dual, root);
  return t;
}

}  // namespace

FlipCatalog::FlipCatalog(int d) : dim_(d) {
  if (d < 1) throw Error(ErrorKind::DimMismatch, "flip catalog needs d >= 1");

  // Group Φ_I by isomorphism type; the first index set of each type names it.
  std::vector<FlipTemplate> classes;
  for (const auto& set : enumeration_order(d)) {
    Complex phi = phi_complex(set, d);
    bool known = std::any_of(classes.begin(), classes.end(), [&](const FlipTemplate& c) {
      return c.phi.num_facets() == phi.num_facets() && f_vector(c.phi) == f_vector(phi) &&
             is_isomorphic(c.phi, phi).has_value();
    });
    if (!known) classes.push_back(make_template(set, d));
  }

  for (auto& c : classes) {
    if (c.kind == FlipKind::Up || c.kind == FlipKind::Down) continue;
    if (!is_isomorphic(c.phi, c.complement)) {
      // Same vertex count but different sides; treat it as a down-flip when
      // it shrinks the facet count. Not expected for cross-polytopes.
      c.kind = c.complement.num_facets() < c.phi.num_facets() ? FlipKind::Down : FlipKind::Up;
    }
  }

  std::stable_sort(classes.begin(), classes.end(), [](const FlipTemplate& a, const FlipTemplate& b) {
    if (a.phi.num_facets() != b.phi.num_facets()) return a.phi.num_facets() < b.phi.num_facets();
    return a.name < b.name;
  });

  bool have_trivial = false;
  for (auto& c : classes) {
    if (c.kind == FlipKind::Trivial && !have_trivial) {
      trivial_ = std::move(c);
      have_trivial = true;
    } else {
      templates_.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < templates_.size(); ++i) templates_[i].id = static_cast<int>(i);
  trivial_.id = static_cast<int>(templates_.size());

  auto link_inverse = [&](FlipTemplate& t) {
    for (const FlipTemplate* other : [&] {
           std::vector<const FlipTemplate*> all;
           for (const auto& u : templates_) all.push_back(&u);
           all.push_back(&trivial_);
           return all;
         }()) {
      if (other->phi.num_facets() != t.complement.num_facets()) continue;
      if (auto map = is_isomorphic(t.complement, other->phi)) {
        t.inverse_id = other->id;
        t.complement_to_inverse = *map;
        return;
      }
    }
    throw Error(ErrorKind::DimMismatch, "no inverse for template " + t.name);
  };
  for (auto& t : templates_) link_inverse(t);
  link_inverse(trivial_);

  // Sufficient flips: Φ_J with d ∈ J ⊆ {1..d}, together with their inverses.
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<int> set;
    for (int i = 1; i < d; ++i)
      if ((mask >> (i - 1)) & 1u) set.push_back(i);
    set.push_back(d);
    Complex phi = phi_complex(set, d);
    for (auto& t : templates_) {
      if (t.phi.num_facets() == phi.num_facets() && is_isomorphic(t.phi, phi)) {
        t.sufficient = true;
        templates_[static_cast<std::size_t>(t.inverse_id)].sufficient = true;
      }
    }
  }
}

const FlipTemplate& FlipCatalog::at(int id) const {
  if (id >= 0 && static_cast<std::size_t>(id) < templates_.size()) return templates_[static_cast<std::size_t>(id)];
  if (id == trivial_.id) return trivial_;
  throw Error(ErrorKind::StaleEmbedding, "unknown template id " + std::to_string(id));
}

std::vector<int> FlipCatalog::all_ids() const {
  std::vector<int> out;
  for (const auto& t : templates_) out.push_back(t.id);
  return out;
}

std::vector<int> FlipCatalog::sufficient_ids() const {
  std::vector<int> out;
  for (const auto& t : templates_)
    if (t.sufficient) out.push_back(t.id);
  return out;
}

std::vector<int> FlipCatalog::ids_of_kind(FlipKind kind) const {
  std::vector<int> out;
  for (const auto& t : templates_)
    if (t.kind == kind) out.push_back(t.id);
  return out;
}

const FlipCatalog& flip_catalog(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FlipCatalog>> built;
  std::lock_guard lock(mutex);
  auto& slot = built[d];
  if (!slot) slot = std::make_unique<FlipCatalog>(d);
  return *slot;
}

bool image_is_induced(const Complex& host, std::span<const Face> image, std::span<const Vertex> image_vertices) {
  Face shared;
  for (Vertex w : image_vertices) {
    for (int fi : host.facets_containing(w)) {
      const Face& g = host.facets()[static_cast<std::size_t>(fi)];
      if (std::binary_search(image.begin(), image.end(), g)) continue;
      shared.clear();
      std::set_intersection(g.begin(), g.end(), image_vertices.begin(), image_vertices.end(),
                            std::back_inserter(shared));
      bool covered = std::any_of(image.begin(), image.end(), [&](const Face& f) { return is_subset(shared, f); });
      if (!covered) return false;
    }
  }
  return true;
}

namespace {

// Lifts a facet-level match to a vertex map while VF2 runs. Two adjacent
// pattern facets differ in exactly one vertex on each side, and so do their
// images; that pair of vertices is forced. Colors must agree up to one global
// permutation.
class LiftHook {
 public:
  LiftHook(const FlipTemplate& tmpl, const Complex& host, const Coloring& coloring)
      : tmpl_(tmpl),
        host_(host),
        coloring_(coloring),
        colors_(tmpl.dim + 1),
        to_host_(static_cast<std::size_t>(2 * tmpl.dim + 2), -1),
        perm_(static_cast<std::size_t>(colors_), -1),
        perm_inv_(static_cast<std::size_t>(colors_), -1),
        facet_image_(tmpl.phi.num_facets(), -1),
        crossings_(tmpl.phi.num_facets()) {
    const auto& pf = tmpl.phi.facets();
    for (std::size_t p = 0; p < pf.size(); ++p)
      for (int q : tmpl.phi_dual[p]) {
        Vertex xp = -1, xq = -1;
        difference(pf[p], pf[static_cast<std::size_t>(q)], xp, xq);
        crossings_[p].push_back({q, xp, xq});
      }
  }

  bool push(int p, int t) {
    const std::size_t mark = trail_.size();
    if (!extend(p, t)) {
      rollback(mark);
      return false;
    }
    facet_image_[static_cast<std::size_t>(p)] = t;
    marks_.push_back(mark);
    return true;
  }

  void pop(int p, int) {
    facet_image_[static_cast<std::size_t>(p)] = -1;
    rollback(marks_.back());
    marks_.pop_back();
  }

  // Completes the map on cone points; nullopt if the match does not come
  // from a simplicial map onto the matched facets.
  std::optional<Embedding> finish(const std::vector<int>& core) const {
    std::vector<Vertex> to_host = to_host_;
    std::vector<int> perm = perm_, perm_inv = perm_inv_;
    std::vector<Vertex> used;
    for (Vertex h : to_host)
      if (h >= 0) used.push_back(h);
    const auto& pf = tmpl_.phi.facets();
    for (std::size_t p = 0; p < pf.size(); ++p) {
      const Face& g = host_.facets()[static_cast<std::size_t>(core[p])];
      for (Vertex x : pf[p]) {
        if (to_host[static_cast<std::size_t>(x)] >= 0) continue;
        const int c = tmpl_.color_of(x);
        Vertex pick = -1;
        for (Vertex h : g) {
          if (std::find(used.begin(), used.end(), h) != used.end()) continue;
          const int hc = coloring_.color(h);
          if (hc < 0) continue;
          if (perm[static_cast<std::size_t>(c)] >= 0 ? hc == perm[static_cast<std::size_t>(c)]
                                                     : perm_inv[static_cast<std::size_t>(hc)] < 0) {
            pick = h;
            break;
          }
        }
        if (pick < 0) return std::nullopt;
        to_host[static_cast<std::size_t>(x)] = pick;
        perm[static_cast<std::size_t>(c)] = coloring_.color(pick);
        perm_inv[static_cast<std::size_t>(coloring_.color(pick))] = c;
        used.push_back(pick);
      }
    }

    Embedding e;
    e.template_id = tmpl_.id;
    e.vertex_map = std::move(to_host);
    for (std::size_t p = 0; p < pf.size(); ++p) {
      Face mapped;
      for (Vertex x : pf[p]) mapped.push_back(e.vertex_map[static_cast<std::size_t>(x)]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != host_.facets()[static_cast<std::size_t>(core[p])]) return std::nullopt;
      e.image.push_back(std::move(mapped));
    }
    std::sort(e.image.begin(), e.image.end());
    for (Vertex h : e.vertex_map)
      if (h >= 0) e.image_vertices.push_back(h);
    std::sort(e.image_vertices.begin(), e.image_vertices.end());

    return e;
  }

 private:
  enum class Slot { Vertex, Color };

  bool extend(int p, int t) {
    const Face& fp = tmpl_.phi.facets()[static_cast<std::size_t>(p)];
    const Face& ht = host_.facets()[static_cast<std::size_t>(t)];
    for (const Crossing& c : crossings_[static_cast<std::size_t>(p)]) {
      const int hq = facet_image_[static_cast<std::size_t>(c.q)];
      if (hq < 0) continue;
      Vertex ht_only = -1, gq_only = -1;
      if (!difference(ht, host_.facets()[static_cast<std::size_t>(hq)], ht_only, gq_only)) return false;
      if (!assign(c.p_only, ht_only)) return false;
      if (!assign(c.q_only, gq_only)) return false;
    }
    for (Vertex x : fp) {
      const Vertex h = to_host_[static_cast<std::size_t>(x)];
      if (h >= 0 && std::find(ht.begin(), ht.end(), h) == ht.end()) return false;
    }
    return true;
  }

  // The single vertex of a not in b and of b not in a, for sorted faces
  // sharing a ridge; false otherwise.
  static bool difference(const Face& a, const Face& b, Vertex& a_only, Vertex& b_only) {
    a_only = b_only = -1;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        if (a_only >= 0) return false;
        a_only = a[i++];
      } else if (i == a.size() || b[j] < a[i]) {
        if (b_only >= 0) return false;
        b_only = b[j++];
      } else {
        ++i;
        ++j;
      }
    }
    return a_only >= 0 && b_only >= 0;
  }

  struct Crossing {
    int q;          // neighboring pattern facet
    Vertex p_only;  // vertex of this facet missing from q
    Vertex q_only;
  };

  bool assign(Vertex x, Vertex h) {
    if (x < 0 || h < 0) return false;
    const Vertex current = to_host_[static_cast<std::size_t>(x)];
    if (current >= 0) return current == h;
    if (std::find(to_host_.begin(), to_host_.end(), h) != to_host_.end()) return false;
    const int c = tmpl_.color_of(x);
    const int hc = coloring_.color(h);
    if (hc < 0 || hc >= colors_) return false;
    if (perm_[static_cast<std::size_t>(c)] < 0) {
      if (perm_inv_[static_cast<std::size_t>(hc)] >= 0) return false;
      perm_[static_cast<std::size_t>(c)] = hc;
      perm_inv_[static_cast<std::size_t>(hc)] = c;
      trail_.emplace_back(Slot::Color, c);
    } else if (perm_[static_cast<std::size_t>(c)] != hc) {
      return false;
    }
    to_host_[static_cast<std::size_t>(x)] = h;
    trail_.emplace_back(Slot::Vertex, x);
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [slot, key] = trail_.back();
      trail_.pop_back();
      if (slot == Slot::Vertex) {
        to_host_[static_cast<std::size_t>(key)] = -1;
      } else {
        perm_inv_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(key)])] = -1;
        perm_[static_cast<std::size_t>(key)] = -1;
      }
    }
  }

  const FlipTemplate& tmpl_;
  const Complex& host_;
  const Coloring& coloring_;
  int colors_;
  std::vector<Vertex> to_host_;
  std::vector<int> perm_;
  std::vector<int> perm_inv_;
  std::vector<int> facet_image_;
  std::vector<std::vector<Crossing>> crossings_;
  std::vector<std::pair<Slot, int>> trail_;
  std::vector<std::size_t> marks_;
};

bool valid_image(const Complex& host, const FlipTemplate& tmpl, const Embedding& e) {
  // Interior vertices must not see anything outside the copy.
  for (Vertex x : tmpl.removed) {
    const Vertex h = e.vertex_map[static_cast<std::size_t>(x)];
    if (host.facets_containing(h).size() != tmpl.phi.facets_containing(x).size()) return false;
  }
  return image_is_induced(host, e.image, e.image_vertices);
}

void scan(const Complex& host, const vf2::Adjacency& host_dual, const Coloring& coloring, const FlipTemplate& tmpl,
          std::span<const int> host_roots, const std::function<bool(const Embedding&)>& keep,
          std::vector<Embedding>& out) {
  LiftHook hook(tmpl, host, coloring);
  // Automorphisms of phi reach the same host facets repeatedly. The facet set
  // fixes the image, so once one match of it has lifted the rest are skipped.
  // A match that fails to lift does not settle the set.
  std::set<std::vector<int>> lifted;
  std::vector<int> key;
  vf2::enumerate(tmpl.phi_dual, host_dual, tmpl.order, host_roots, hook, [&](const std::vector<int>& core) {
    key.assign(core.begin(), core.end());
    std::sort(key.begin(), key.end());
    if (lifted.contains(key)) return true;
    auto e = hook.finish(core);
    if (!e) return true;
    lifted.insert(key);
    if (valid_image(host, tmpl, *e) && keep(*e)) out.push_back(std::move(*e));
    return true;
  });
}

bool keep_all(const Embedding&) { return true; }

vf2::Adjacency checked_host_graph(const Complex& host, int d) {
  if (host.is_void() || host.dim() != d)
    throw Error(ErrorKind::DimMismatch, "host has dimension " + std::to_string(host.dim()) + ", template " +
                                            std::to_string(d));
  DualGraph graph = dual_graph(host);
  if (!graph.is_pseudomanifold()) throw Error(ErrorKind::NotPseudomanifold, "host is not a pseudomanifold");
  return std::move(graph.adjacency);
}

std::vector<int> all_nodes(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
  return out;
}

}  // namespace

std::vector<Embedding> find_embeddings(const Complex& host, const Coloring& coloring, const FlipTemplate& tmpl) {
  const auto host_dual = checked_host_graph(host, tmpl.dim);
  const auto roots = all_nodes(host_dual.size());
  std::vector<Embedding> out;
  scan(host, host_dual, coloring, tmpl, roots, keep_all, out);
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddingCache find_all_embeddings(const Complex& host, const Coloring& coloring, const FlipCatalog& catalog,
                                   std::span<const int> template_ids) {
  const auto host_dual = checked_host_graph(host, catalog.dim());
  const auto roots = all_nodes(host_dual.size());
  EmbeddingCache out;
  for (int id : template_ids) scan(host, host_dual, coloring, catalog.at(id), roots, keep_all, out);
  std::sort(out.begin(), out.end());
  return out;
}

FlipResult apply_flip(const Complex& host, const Coloring& coloring, const Embedding& embedding,
                      const FlipCatalog& catalog) {
  const FlipTemplate& t = catalog.at(embedding.template_id);
  const int d = t.dim;
  if (host.dim() != d) throw Error(ErrorKind::DimMismatch, "embedding dimension differs from host");
  if (embedding.vertex_map.size() != static_cast<std::size_t>(2 * d + 2))
    throw Error(ErrorKind::StaleEmbedding, "malformed vertex map");

  // The recorded image must still be exactly the mapped phi, induced in host.
  std::vector<Face> mapped;
  for (const auto& f : t.phi.facets()) {
    Face g;
    for (Vertex x : f) g.push_back(embedding.vertex_map[static_cast<std::size_t>(x)]);
    std::sort(g.begin(), g.end());
    if (g.front() < 0 || !host.has_facet(g))
      throw Error(ErrorKind::StaleEmbedding, "facet " + to_string(g) + " is not in the host");
    mapped.push_back(std::move(g));
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != embedding.image) throw Error(ErrorKind::StaleEmbedding, "image does not match the vertex map");
  if (!image_is_induced(host, embedding.image, embedding.image_vertices))
    throw Error(ErrorKind::StaleEmbedding, "image is no longer induced");

  std::vector<int> perm(static_cast<std::size_t>(d + 1), -1);
  for (Vertex x : t.phi.vertices())
    perm[static_cast<std::size_t>(t.color_of(x))] = coloring.color(embedding.vertex_map[static_cast<std::size_t>(x)]);

  FlipResult result;
  std::vector<Vertex> full_map = embedding.vertex_map;
  Vertex next = host.next_label();
  for (Vertex x : t.added) {
    full_map[static_cast<std::size_t>(x)] = next;
    result.new_vertices.push_back(next);
    ++next;
  }
  for (Vertex x : t.removed) result.removed_vertices.push_back(embedding.vertex_map[static_cast<std::size_t>(x)]);
  std::sort(result.removed_vertices.begin(), result.removed_vertices.end());

  std::vector<Face> complement_image;
  for (const auto& f : t.complement.facets()) {
    Face g;
    for (Vertex x : f) g.push_back(full_map[static_cast<std::size_t>(x)]);
    std::sort(g.begin(), g.end());
    complement_image.push_back(std::move(g));
  }

  std::vector<Face> facets;
  facets.reserve(host.num_facets() - mapped.size() + complement_image.size());
  for (const auto& f : host.facets())
    if (!std::binary_search(mapped.begin(), mapped.end(), f)) facets.push_back(f);
  facets.insert(facets.end(), complement_image.begin(), complement_image.end());
  result.complex = Complex::from_facets(std::move(facets), next);

  result.coloring = coloring;
  for (Vertex v : result.removed_vertices) result.coloring.erase(v);
  for (Vertex x : t.added)
    result.coloring.set(full_map[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(t.color_of(x))]);

  Embedding& inv = result.inverse;
  inv.template_id = t.inverse_id;
  inv.vertex_map.assign(static_cast<std::size_t>(2 * d + 2), -1);
  for (const auto& [c, s] : t.complement_to_inverse)
    inv.vertex_map[static_cast<std::size_t>(s)] = full_map[static_cast<std::size_t>(c)];
  std::sort(complement_image.begin(), complement_image.end());
  inv.image = std::move(complement_image);
  for (Vertex h : inv.vertex_map)
    if (h >= 0) inv.image_vertices.push_back(h);
  std::sort(inv.image_vertices.begin(), inv.image_vertices.end());
  return result;
}

std::vector<Vertex> changed_vertices(const Complex& before, const Complex& after) {
  std::vector<Face> diff;
  std::set_symmetric_difference(before.facets().begin(), before.facets().end(), after.facets().begin(),
                                after.facets().end(), std::back_inserter(diff));
  std::vector<Vertex> out;
  for (const auto& f : diff) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EmbeddingCache refresh_cache(const Complex& before, const Complex& after, const Coloring& after_coloring,
                             const EmbeddingCache& cache, const FlipCatalog& catalog,
                             std::span<const int> template_ids) {
  const auto touched = changed_vertices(before, after);
  auto touches = [&](const std::vector<Vertex>& vs) {
    auto a = vs.begin();
    auto b = touched.begin();
    while (a != vs.end() && b != touched.end()) {
      if (*a == *b) return true;
      *a < *b ? ++a : ++b;
    }
    return false;
  };

  // Facets of `after` made only of untouched vertices existed before, and an
  // embedding avoiding every touched vertex sees the same neighborhood.
  EmbeddingCache out;
  for (const auto& e : cache)
    if (!touches(e.image_vertices)) out.push_back(e);
  if (touched.empty()) return out;

  const auto host_dual = checked_host_graph(after, catalog.dim());

  // Dual-graph distance from the facets on touched vertices. A new embedding
  // has an image facet there, so its root image lies within the template's
  // radius.
  std::vector<int> dist(host_dual.size(), -1);
  std::queue<int> queue;
  for (Vertex v : touched)
    for (int fi : after.facets_containing(v))
      if (dist[static_cast<std::size_t>(fi)] < 0) {
        dist[static_cast<std::size_t>(fi)] = 0;
        queue.push(fi);
      }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop();
    for (int g : host_dual[static_cast<std::size_t>(f)])
      if (dist[static_cast<std::size_t>(g)] < 0) {
        dist[static_cast<std::size_t>(g)] = dist[static_cast<std::size_t>(f)] + 1;
        queue.push(g);
      }
  }

  auto is_new = [&](const Embedding& e) { return touches(e.image_vertices); };
  for (int id : template_ids) {
    const FlipTemplate& t = catalog.at(id);
    std::vector<int> roots;
    for (std::size_t f = 0; f < dist.size(); ++f)
      if (dist[f] >= 0 && dist[f] <= t.radius) roots.push_back(static_cast<int>(f));
    scan(after, host_dual, after_coloring, t, roots, is_new, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace crossflip
