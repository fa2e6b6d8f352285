#pragma once

#include <map>
#include <string>
#include <vector>

#include "crossflip/coloring.hpp"
#include "crossflip/complex.hpp"

namespace crossflip {

struct ColoredComplex {
  Complex complex;
  Coloring coloring;
};

/// Bijection from[i] -> to[i] between the vertices of two facets.
struct Gluing {
  std::vector<Vertex> from;
  std::vector<Vertex> to;
};

/// Removes F = from (a facet of a) and G = to (a facet of b), then identifies
/// to[i] with from[i]; labels of `a` are kept. Throws LabelCollision on
/// shared labels, BadGluing when F or G is not a facet or the map is not a
/// bijection.
Complex connected_sum(const Complex& a, const Complex& b, const Gluing& gluing);
/// As above; additionally throws ColorMismatch unless κ_a(v) = κ_b(φ(v)).
ColoredComplex connected_sum(const ColoredComplex& a, const ColoredComplex& b, const Gluing& gluing);

struct HandleOptions {
  bool require_even_distance = false;  // dual-graph distance between F and G
};

/// Removes the disjoint facets F = from and G = to and identifies to[i] with
/// from[i]. Throws BadGluing unless every pair has disjoint vertex links (and,
/// with colors, equal colors).
Complex handle_addition(const Complex& complex, const Gluing& gluing, const HandleOptions& options = {});
ColoredComplex handle_addition(const ColoredComplex& complex, const Gluing& gluing,
                               const HandleOptions& options = {});

/// Explains why `gluing` is not a valid handle; empty when it is.
std::string handle_violation(const Complex& complex, const Gluing& gluing, const HandleOptions& options = {});

/// A construction with the symbolic vertex names used to describe it.
/// Identified names share a label.
struct Construction {
  ColoredComplex result;
  std::map<std::string, Vertex> names;
};

/// Three copies of ∂C_4 joined by two connected sums and one handle:
/// a 12-vertex balanced S^2-bundle over S^1 (the twisted one).
Construction build_s2_twisted_s1_12();

/// Four copies of ∂C_4 joined by three connected sums and one handle:
/// a 16-vertex balanced S^2 x S^1.
Construction build_s2_times_s1_16();

enum class BundleKind { Twisted, Orientable };

/// Connected sum of two copies of the S^2-bundle over S^1 of the given kind,
/// built inside the balanced Walkup class.
Construction build_bundle_double(BundleKind kind);

/// 2 f_1 - 3 d f_0 - 4 C(d+1,2) (β̃_1 - 1); zero exactly at equality.
long long walkup_equality_gap(const Complex& complex, long long reduced_beta1);

/// k-fold suspension with fresh vertex pairs; each pair gets a new color.
ColoredComplex suspension_tower(const ColoredComplex& base, int k);

/// Iterated connected sum of `copies` copies of ∂C_{d+1}; (d+1)(copies+1)
/// vertices.
ColoredComplex cross_polytopal_stacked_sphere(int d, int copies);

/// ∂C_{d+1} with its canonical coloring.
ColoredComplex colored_cross_polytope(int d);

}  // namespace crossflip
