#pragma once

#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"
#include "hgc/lp.hpp"
#include "hgc/rational.hpp"

namespace hgc {

enum class FractionalKind { RhoStar, AlphaStar };
enum class IntegralKind { Rho, Alpha };

/// Sentinel for "cover all vertices" in rho_star.
inline constexpr VertexSet kAllVertices = ~VertexSet{0};

/// Exact fractional edge-cover number rho*(H, X) (minimum edge-weight
/// total covering every vertex of X) or fractional independence number
/// alpha*(H) (X ignored). Isolated vertices receive a singleton edge for
/// the duration of the computation only.
Rational fractionalInvariant(FractionalKind kind, const Hypergraph& h,
                             VertexSet x = kAllVertices);

/// Exact integral edge-cover number rho(H) / independence number
/// alpha(H) by exhaustive subset search, with the same isolated-vertex
/// convention for rho.
std::uint64_t integralInvariant(IntegralKind kind, const Hypergraph& h,
                                std::uint64_t budget = 1u << 26);

/// Sets X whose complement is independent (meets every edge in at most
/// one vertex). With minimalOnly, restricts to inclusion-minimal X,
/// enumerated as complements of maximal independent sets.
std::vector<VertexSet> coindependentSets(const Hypergraph& h,
                                         bool minimalOnly);

/// Fractional co-independent edge-cover number: min of rho*(H, X) over
/// co-independent X; the minimum is attained on a minimal X.
Rational sigmaStar(const Hypergraph& h);
/// Also reports a minimal co-independent set attaining the minimum.
Rational sigmaStar(const Hypergraph& h, VertexSet& argmin);

/// Exact treewidth via dynamic programming over elimination prefixes.
/// Accepts any hypergraph by first taking its Gaifman graph; |H| <= 15.
int treewidthExact(const Hypergraph& h);

struct TreeDecomposition {
    std::vector<VertexSet> bags;                   // one per node
    std::vector<std::pair<int, int>> treeEdges;    // node pairs
};

/// Empty string when valid; otherwise names the violated condition.
std::string validateDecomposition(const TreeDecomposition& d,
                                  const Hypergraph& h);

enum class WidthFunction { CardinalityMinusOne, RhoStarOfBag };

/// Max of f over the bags of a valid decomposition. RhoStarOfBag
/// evaluates rho*_H(bag) against all edges of H.
Rational decompositionWidth(const TreeDecomposition& d, const Hypergraph& h,
                            WidthFunction f);

/// Path decomposition with bags X union {v} for v outside a minimal
/// co-independent X attaining sigma*; its rho* width is at most
/// sigma*(H) + 1.
TreeDecomposition coindependentDecomposition(const Hypergraph& h);

std::string serializeDecomposition(const TreeDecomposition& d);
TreeDecomposition parseDecomposition(const std::string& text);

}  // namespace hgc
