#pragma once

#include <cstdint>
#include <string>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Canonical key: lexicographically minimal serialization of
/// (n, sorted edge list) over vertex permutations. Equal keys iff
/// isomorphic. Brute-force minimization, restricted to permutations that
/// respect vertex-invariant classes (degree profile per edge size).
using CanonicalKey = std::string;

constexpr int kCanonicalCap = 10;

CanonicalKey canonicalKey(const Hypergraph& h, int cap = kCanonicalCap);

/// Number of vertex permutations mapping the edge set onto itself.
std::uint64_t countAutomorphisms(const Hypergraph& h, int cap = kCanonicalCap);

bool isIsomorphic(const Hypergraph& a, const Hypergraph& b,
                  int cap = kCanonicalCap);

}  // namespace hgc
