#pragma once

#include "hgc/counting.hpp"
#include "hgc/hypergraph.hpp"

namespace hgc {

/// Row-major bijection between vertex pairs of two factors and the
/// vertices of their tensor product: (g, h) <-> g*|H| + h.
struct VertexPairIndex {
    int hSize = 0;
    int pairToVertex(int g, int h) const { return g * hSize + h; }
    int firstOf(int v) const { return v / hSize; }
    int secondOf(int v) const { return v % hSize; }
};

constexpr int kDefaultRankBudget = 5;

/// Tensor product: vertices are the pairs V(G) x V(H); for every edge
/// pair (eG, eH) the edges are exactly the subsets of eG x eH projecting
/// onto eG in the first coordinate and onto eH in the second. Edge count
/// is bounded by 2^(r*r) * |E(G)| * |E(H)| for r = max rank. Throws
/// BudgetError when the rank exceeds the budget.
Hypergraph tensorProduct(const Hypergraph& g, const Hypergraph& h,
                         int rankBudget = kDefaultRankBudget);

/// Drops every edge larger than r; Hom(H, .) is unchanged for patterns
/// of rank at most r.
Hypergraph rankTruncate(const Hypergraph& g, int r);

/// Coloured host (F, c) with F = rank_truncate(G, rank(H)) tensor H and
/// c the second-coordinate projection; cpHom(H, (F, c)) = Hom(H, G).
ColoredHost colorHostViaTensor(const Hypergraph& h, const Hypergraph& g,
                               int rankBudget = kDefaultRankBudget);

}  // namespace hgc
