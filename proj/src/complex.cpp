#include "crossflip/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "crossflip/error.hpp"

namespace crossflip {

namespace detail {
struct FaceCache {
  std::once_flag once;
  std::vector<std::vector<Face>> by_dim;  // index k+1
};
}  // namespace detail

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  Face out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(std::span<const Vertex> face) {
  std::string out = "[";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(face[i]);
  }
  return out + "]";
}

long long FVector::euler() const {
  long long chi = 0;
  for (std::size_t i = 1; i < entries.size(); ++i) chi += (i % 2 == 1) ? entries[i] : -entries[i];
  return chi;
}

std::string FVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

FVector operator-(const FVector& a, const FVector& b) {
  FVector out;
  out.entries.resize(std::max(a.entries.size(), b.entries.size()), 0);
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    long long x = i < a.entries.size() ? a.entries[i] : 0;
    long long y = i < b.entries.size() ? b.entries[i] : 0;
    out.entries[i] = x - y;
  }
  return out;
}

Complex::Complex() : cache_(std::make_shared<detail::FaceCache>()) {}

Complex Complex::from_facets(std::vector<Face> facets, Vertex min_next_label) {
  if (facets.empty()) throw Error(ErrorKind::VoidComplex, "empty facet list");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!f.empty() && f.front() < 0) throw Error(ErrorKind::ParseError, "negative vertex label");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  std::size_t min_size = facets.front().size(), max_size = min_size;
  for (const auto& f : facets) {
    min_size = std::min(min_size, f.size());
    max_size = std::max(max_size, f.size());
  }
  if (min_size != max_size) {
    // Antichain reduction: drop every set contained in a larger one.
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
    std::vector<Face> kept;
    for (std::size_t idx : order) {
      const Face& f = facets[idx];
      bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& g) {
        return g.size() > f.size() && is_subset(f, g);
      });
      if (!covered) kept.push_back(f);
    }
    facets = std::move(kept);
    std::sort(facets.begin(), facets.end());
  }

  Complex c;
  c.facets_ = std::move(facets);
  c.dim_ = -1;
  c.pure_ = true;
  const std::size_t first = c.facets_.front().size();
  for (const auto& f : c.facets_) {
    c.dim_ = std::max(c.dim_, static_cast<int>(f.size()) - 1);
    if (f.size() != first) c.pure_ = false;
    c.vertices_.insert(c.vertices_.end(), f.begin(), f.end());
  }
  std::sort(c.vertices_.begin(), c.vertices_.end());
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());
  c.star_.resize(c.vertices_.size());
  for (std::size_t i = 0; i < c.facets_.size(); ++i) {
    for (Vertex v : c.facets_[i]) {
      auto pos = std::lower_bound(c.vertices_.begin(), c.vertices_.end(), v) - c.vertices_.begin();
      c.star_[static_cast<std::size_t>(pos)].push_back(static_cast<int>(i));
    }
  }
  c.next_label_ = std::max(min_next_label, c.vertices_.empty() ? 0 : c.vertices_.back() + 1);
  return c;
}

bool Complex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::span<const int> Complex::facets_containing(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return {};
  return star_[static_cast<std::size_t>(it - vertices_.begin())];
}

bool Complex::contains(std::span<const Vertex> face) const {
  if (facets_.empty()) return false;
  if (face.empty()) return true;
  std::span<const int> best;
  bool first = true;
  for (Vertex v : face) {
    auto s = facets_containing(v);
    if (s.empty()) return false;
    if (first || s.size() < best.size()) best = s;
    first = false;
  }
  return std::any_of(best.begin(), best.end(),
                     [&](int idx) { return is_subset(face, facets_[static_cast<std::size_t>(idx)]); });
}

int Complex::facet_index(std::span<const Vertex> face) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), face,
                             [](const Face& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  if (it == facets_.end() || !std::equal(it->begin(), it->end(), face.begin(), face.end())) return -1;
  return static_cast<int>(it - facets_.begin());
}

bool Complex::has_facet(std::span<const Vertex> face) const { return facet_index(face) >= 0; }

std::vector<Vertex> Complex::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (int idx : facets_containing(v))
    for (Vertex w : facets_[static_cast<std::size_t>(idx)])
      if (w != v) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Complex::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<Face>& Complex::faces(int k) const {
  std::call_once(cache_->once, [this] {
    auto& by_dim = cache_->by_dim;
    by_dim.assign(static_cast<std::size_t>(std::max(dim_, -1) + 2), {});
    if (facets_.empty()) return;
    by_dim[0].push_back({});
    for (int size = 1; size <= dim_ + 1; ++size) {
      auto& out = by_dim[static_cast<std::size_t>(size)];
      for (const auto& f : facets_) {
        const int n = static_cast<int>(f.size());
        if (n < size) continue;
        // Enumerate all `size`-subsets of f via a selection mask.
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
          Face g;
          g.reserve(static_cast<std::size_t>(size));
          for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) g.push_back(f[static_cast<std::size_t>(i)]);
          out.push_back(std::move(g));
        } while (std::prev_permutation(pick.begin(), pick.end()));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  });
  static const std::vector<Face> kEmpty;
  const auto idx = static_cast<std::size_t>(k + 1);
  if (k < -1 || idx >= cache_->by_dim.size()) return kEmpty;
  return cache_->by_dim[idx];
}

Complex make_complex(std::vector<Face> facets) { return Complex::from_facets(std::move(facets)); }

FVector f_vector(const Complex& complex) {
  FVector f;
  if (complex.is_void()) return f;
  for (int k = -1; k <= complex.dim(); ++k)
    f.entries.push_back(static_cast<long long>(complex.faces(k).size()));
  return f;
}

Complex link(const Complex& complex, std::span<const Vertex> face) {
  if (!complex.contains(face)) throw Error(ErrorKind::FaceNotPresent, to_string(face));
  if (face.empty()) return complex;
  std::vector<Face> out;
  for (int idx : complex.facets_containing(face.front())) {
    const Face& g = complex.facets()[static_cast<std::size_t>(idx)];
    if (!is_subset(face, g)) continue;
    Face rest;
    std::set_difference(g.begin(), g.end(), face.begin(), face.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return Complex::from_facets(std::move(out));
}

Complex star(const Complex& complex, std::span<const Vertex> face) {
  return join(simplex(Face(face.begin(), face.end())), link(complex, face));
}

Complex join(const Complex& a, const Complex& b) {
  if (!face_intersection(a.vertices(), b.vertices()).empty())
    throw Error(ErrorKind::LabelCollision, "join of complexes with shared vertices");
  std::vector<Face> out;
  out.reserve(a.num_facets() * b.num_facets());
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) out.push_back(face_union(f, g));
  return Complex::from_facets(std::move(out));
}

Complex simplex(Face vertices) { return Complex::from_facets({std::move(vertices)}); }

Complex cone(const Complex& base, Vertex apex) { return join(base, simplex({apex})); }

Complex suspension(const Complex& base, Vertex north, Vertex south) {
  return join(base, Complex::from_facets({{north}, {south}}));
}

Complex induced_subcomplex(const Complex& complex, std::span<const Vertex> subset) {
  Face sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Face> out;
  for (const auto& f : complex.facets()) out.push_back(face_intersection(f, sorted));
  return Complex::from_facets(std::move(out));
}

bool is_subcomplex(const Complex& sub, const Complex& complex) {
  return std::all_of(sub.facets().begin(), sub.facets().end(),
                     [&](const Face& f) { return complex.contains(f); });
}

bool is_induced(const Complex& complex, const Complex& sub) {
  if (!is_subcomplex(sub, complex)) return false;
  return induced_subcomplex(complex, sub.vertices()) == sub;
}

Subdivision barycentric_subdivision_with_faces(const Complex& complex) {
  Subdivision out;
  std::map<Face, Vertex> label;
  for (int k = 0; k <= complex.dim(); ++k) {
    for (const auto& f : complex.faces(k)) {
      label.emplace(f, static_cast<Vertex>(out.face_of_vertex.size()));
      out.face_of_vertex.push_back(f);
    }
  }
  std::vector<Face> chains;
  for (const auto& facet : complex.facets()) {
    if (facet.empty()) continue;
    Face order = facet;
    do {
      Face chain;
      Face prefix;
      for (Vertex v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        chain.push_back(label.at(prefix));
      }
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.complex = Complex::from_facets(std::move(chains));
  return out;
}

Complex barycentric_subdivision(const Complex& complex) {
  return barycentric_subdivision_with_faces(complex).complex;
}

Complex standard_sphere(int d) {
  std::vector<Face> facets;
  for (Vertex skip = 0; skip <= d + 1; ++skip) {
    Face f;
    for (Vertex v = 0; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(facets));
}

Complex cross_polytope_boundary(int d) {
  std::vector<Face> facets;
  const unsigned n = static_cast<unsigned>(d + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Face f;
    for (unsigned i = 0; i < n; ++i) f.push_back((mask >> i) & 1u ? static_cast<Vertex>(i + n) : static_cast<Vertex>(i));
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(facets));
}

Complex relabel(const Complex& complex, std::span<const std::pair<Vertex, Vertex>> map) {
  std::map<Vertex, Vertex> lookup(map.begin(), map.end());
  std::vector<Face> out;
  for (const auto& f : complex.facets()) {
    Face g;
    for (Vertex v : f) {
      auto it = lookup.find(v);
      g.push_back(it == lookup.end() ? v : it->second);
    }
    out.push_back(std::move(g));
  }
  return Complex::from_facets(std::move(out));
}

Complex shift_labels(const Complex& complex, Vertex offset) {
  std::vector<Face> out = complex.facets();
  for (auto& f : out)
    for (auto& v : f) v += offset;
  return Complex::from_facets(std::move(out), complex.next_label() + offset);
}

}  // namespace crossflip
