#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "crossflip/complex.hpp"
#include "crossflip/io.hpp"

namespace testing {

using crossflip::Complex;
using crossflip::Face;

inline Complex fixture_complex(const std::string& file) { return crossflip::load_complex(crossflip::fixture_path(file)); }

// Face counts by explicit subset expansion, independent of Complex::faces.
inline std::vector<long long> brute_f(const std::vector<Face>& facets) {
  std::set<Face> faces;
  for (const auto& f : facets) {
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face sub;
      for (unsigned i = 0; i < n; ++i)
        if (mask >> i & 1u) sub.push_back(f[i]);
      faces.insert(sub);
    }
  }
  std::size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  std::vector<long long> out(top + 1, 0);
  out[0] = 1;
  for (const auto& f : faces) ++out[f.size()];
  return out;
}

inline std::vector<long long> fv(const Complex& c) { return crossflip::f_vector(c).entries; }

// Relabels through an arbitrary injective map.
inline Complex relabeled(const Complex& c, const std::map<crossflip::Vertex, crossflip::Vertex>& map) {
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    Face g;
    for (auto v : f) g.push_back(map.at(v));
    std::sort(g.begin(), g.end());
    facets.push_back(g);
  }
  return crossflip::make_complex(facets);
}

}  // namespace testing
