#pragma once

#include <functional>
#include <vector>

#include "hgc/basis.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/rational.hpp"

namespace hgc {

/// An unknown linear combination over a declared support of pairwise
/// non-isomorphic hypergraphs, accessible only through evaluation.
struct MotifOracle {
    std::vector<Hypergraph> support;
    std::function<Rational(const Hypergraph&)> eval;
};

struct InterpolationResult {
    std::vector<Rational> coefficients;  // aligned with the support
    std::vector<Hypergraph> probes;      // chosen independently of eval
};

/// Recovers the coefficients of the combination. Probes are drawn, in a
/// fixed order depending only on the support, from the support itself,
/// then pairwise tensor products, then all small hypergraphs by
/// increasing (vertices, edges), each rank-truncated to the support's
/// maximum rank; rows enter the linear system only when they raise its
/// rank, and the final square system is solved exactly.
InterpolationResult dedekindInterpolate(const MotifOracle& oracle,
                                        int probeVertexCap = 4);

/// Recovers Hom(F, G) for F in the support of expansion(kind, H) from an
/// oracle answering pattern counts of H, via interpolation of the
/// combination F' -> oracle(truncate(G) tensor F'). Supported kinds:
/// Sub and IndSub.
std::uint64_t homsFromPatternOracle(
    ExpansionKind kind, const Hypergraph& h, const Hypergraph& f,
    const std::function<std::uint64_t(const Hypergraph&)>& patternOracle,
    const Hypergraph& g);

}  // namespace hgc
