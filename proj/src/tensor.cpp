#include "hgc/tensor.hpp"

#include <algorithm>

namespace hgc {

namespace {

std::vector<int> setToVertices(VertexSet s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

}  // namespace

Hypergraph tensorProduct(const Hypergraph& g, const Hypergraph& h,
                         int rankBudget) {
    int r = std::max(g.rank(), h.rank());
    if (r > rankBudget)
        throw BudgetError("tensor: rank budget " +
                          std::to_string(rankBudget) + " exceeded (rank " +
                          std::to_string(r) + ")");
    if (g.numVertices() * h.numVertices() > kMaxVertices)
        throw DomainError("tensor: product exceeds the vertex capacity");

    VertexPairIndex index{h.numVertices()};
    std::vector<VertexSet> edges;
    for (VertexSet eG : g.edges()) {
        std::vector<int> gs = setToVertices(eG);
        for (VertexSet eH : h.edges()) {
            std::vector<int> hs = setToVertices(eH);
            VertexSet fullCover = fullSet(static_cast<int>(hs.size()));
            // pick a non-empty row of eH-partners for every vertex of eG;
            // the rows must jointly cover eH
            std::vector<VertexSet> rows(gs.size());
            std::function<void(std::size_t, VertexSet)> rec =
                [&](std::size_t i, VertexSet covered) {
                    if (i == gs.size()) {
                        if (covered != fullCover) return;
                        VertexSet e = 0;
                        for (std::size_t a = 0; a < gs.size(); ++a)
                            for (std::size_t b = 0; b < hs.size(); ++b)
                                if (contains(rows[a], static_cast<int>(b)))
                                    e |= VertexSet{1} << index.pairToVertex(
                                             gs[a], hs[b]);
                        edges.push_back(e);
                        return;
                    }
                    for (VertexSet row = 1; row <= fullCover; ++row) {
                        rows[i] = row;
                        rec(i + 1, covered | row);
                    }
                };
            rec(0, 0);
        }
    }
    return Hypergraph(g.numVertices() * h.numVertices(), std::move(edges));
}

Hypergraph rankTruncate(const Hypergraph& g, int r) {
    if (r < 1) throw DomainError("rank_truncate: rank bound must be >= 1");
    std::vector<VertexSet> edges;
    for (VertexSet e : g.edges())
        if (setSize(e) <= r) edges.push_back(e);
    return Hypergraph(g.numVertices(), std::move(edges));
}

ColoredHost colorHostViaTensor(const Hypergraph& h, const Hypergraph& g,
                               int rankBudget) {
    Hypergraph truncated = rankTruncate(g, std::max(1, h.rank()));
    Hypergraph f = tensorProduct(truncated, h, rankBudget);
    VertexPairIndex index{h.numVertices()};
    std::vector<int> colour(f.numVertices());
    for (int v = 0; v < f.numVertices(); ++v) colour[v] = index.secondOf(v);
    return makeColoredHost(std::move(f), std::move(colour), h, true);
}

}  // namespace hgc
