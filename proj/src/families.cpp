#include "hgc/families.hpp"

namespace hgc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

void requireParams(const FamilySpec& spec, std::size_t count,
                   const char* usage) {
    require(spec.params.size() == count,
            std::string("generate: expected parameters ") + usage);
}

}  // namespace

Hypergraph singleVertex() { return Hypergraph(1, {}); }

Hypergraph bK(int k) {
    require(k >= 1, "b_k: k must be >= 1");
    return Hypergraph(k, {fullSet(k)});
}

Hypergraph sunflower(int uniformity, int core, int petals) {
    require(core >= 0, "sunflower: core size must be >= 0");
    require(uniformity >= core + 1,
            "sunflower: uniformity must exceed the core size");
    require(petals >= 1, "sunflower: need at least one petal");
    int petalSize = uniformity - core;
    int n = core + petals * petalSize;
    require(n <= kMaxVertices, "sunflower: too many vertices");
    VertexSet coreMask = fullSet(core);
    std::vector<VertexSet> edges;
    for (int p = 0; p < petals; ++p) {
        VertexSet e = coreMask;
        for (int j = 0; j < petalSize; ++j)
            e |= VertexSet{1} << (core + p * petalSize + j);
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph hNK(int n, int k) {
    require(k >= 1 && n >= k, "h_nk: need n >= k >= 1");
    require(n <= kMaxVertices, "h_nk: too many vertices");
    std::vector<VertexSet> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            edges.push_back((VertexSet{1} << u) | (VertexSet{1} << v));
    edges.push_back(fullSet(n));
    return Hypergraph(n, std::move(edges));
}

Hypergraph groheMarx(int n) {
    require(n >= 1, "grohe_marx: n must be >= 1");
    // vertices are the n-subsets of [2n], in lexicographic bitmask order;
    // edge e_i collects every subset containing i
    int ground = 2 * n;
    std::vector<VertexSet> subsets;
    for (VertexSet s = 0; s < (VertexSet{1} << ground); ++s)
        if (setSize(s) == n) subsets.push_back(s);
    require(static_cast<int>(subsets.size()) <= kMaxVertices,
            "grohe_marx: too many vertices");
    std::vector<VertexSet> edges(ground, 0);
    for (std::size_t v = 0; v < subsets.size(); ++v)
        for (int i = 0; i < ground; ++i)
            if (contains(subsets[v], i)) edges[i] |= VertexSet{1} << v;
    return Hypergraph(static_cast<int>(subsets.size()), std::move(edges));
}

Hypergraph disjointEdges(int m, int r) {
    require(m >= 1 && r >= 1, "disjoint_edges: need m, r >= 1");
    require(m * r <= kMaxVertices, "disjoint_edges: too many vertices");
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i) {
        VertexSet e = 0;
        for (int j = 0; j < r; ++j) e |= VertexSet{1} << (i * r + j);
        edges.push_back(e);
    }
    return Hypergraph(m * r, std::move(edges));
}

Hypergraph hatOfGraph(const Hypergraph& g) {
    require(g.rank() <= 2, "hat_of_graph: input must be a graph (rank <= 2)");
    require(g.numVertices() >= 1, "hat_of_graph: graph must be non-empty");
    std::vector<VertexSet> edges = g.edges();
    edges.push_back(g.vertexMask());
    return Hypergraph(g.numVertices(), std::move(edges));
}

Hypergraph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::SingleVertex:
            requireParams(spec, 0, "(none)");
            return singleVertex();
        case Family::Bk:
            requireParams(spec, 1, "k");
            return bK(spec.params[0]);
        case Family::Sunflower:
            requireParams(spec, 3, "uniformity, core, petals");
            return sunflower(spec.params[0], spec.params[1], spec.params[2]);
        case Family::Hnk:
            requireParams(spec, 2, "n, k");
            return hNK(spec.params[0], spec.params[1]);
        case Family::GroheMarx:
            requireParams(spec, 1, "n");
            return groheMarx(spec.params[0]);
        case Family::DisjointEdges:
            requireParams(spec, 2, "m, r");
            return disjointEdges(spec.params[0], spec.params[1]);
        case Family::HatOfGraph:
            requireParams(spec, 0, "(graph input)");
            return hatOfGraph(spec.base);
    }
    throw DomainError("generate: unknown family");
}

Family parseFamily(const std::string& name) {
    if (name == "single_vertex") return Family::SingleVertex;
    if (name == "b_k") return Family::Bk;
    if (name == "sunflower") return Family::Sunflower;
    if (name == "h_nk") return Family::Hnk;
    if (name == "grohe_marx") return Family::GroheMarx;
    if (name == "disjoint_edges") return Family::DisjointEdges;
    if (name == "hat_of_graph") return Family::HatOfGraph;
    throw DomainError("generate: unknown family '" + name + "'");
}

}  // namespace hgc
