#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "crossflip/complex.hpp"

namespace crossflip {

/// Vertex bijection as (source, target) pairs sorted by source.
using VertexMap = std::vector<std::pair<Vertex, Vertex>>;

/// Complexes above this many vertices are rejected with SizeExceeded.
inline constexpr std::size_t kIsomorphismVertexCap = 256;

/// Face-preserving bijection from `a` onto `b`, if one exists.
///
/// Vertices are first split by an invariant refinement (degree, link
/// f-vector, then iterated facet-neighborhood signatures); the search then
/// backtracks over the refined classes, pruning on edges and partial faces.
/// Deterministic.
std::optional<VertexMap> is_isomorphic(const Complex& a, const Complex& b);

/// Visits every isomorphism a -> b until `visit` returns false.
void for_each_isomorphism(const Complex& a, const Complex& b,
                          const std::function<bool(const VertexMap&)>& visit);

/// Isomorphism-invariant 64-bit fingerprint; equal for isomorphic complexes.
std::uint64_t invariant_hash(const Complex& complex);

Vertex apply(const VertexMap& map, Vertex v);

}  // namespace crossflip
