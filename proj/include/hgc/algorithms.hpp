#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/counting.hpp"
#include "hgc/hypergraph.hpp"

namespace hgc {

/// Classic greedy set cover over the edges (isolated vertices receive a
/// temporary singleton edge): repeatedly picks the edge covering the
/// most uncovered vertices.
std::vector<VertexSet> greedyEdgeCover(const Hypergraph& h);

/// Counts induced sub-hypergraphs of G isomorphic to H by enumerating
/// assignments from a small edge cover of H to the edges of G (plus
/// singletons), collecting candidate vertex sets, and testing each for
/// isomorphism. Agrees with countPatterns(IndSub, ...).
std::uint64_t indsubQuasipoly(const Hypergraph& h, const Hypergraph& g,
                              std::uint64_t budget = kDefaultMapBudget);

/// Per-vertex bitmask of incident edge indices under the canonical edge
/// order; requires at most 64 edges.
std::vector<std::uint64_t> vertexTypes(const Hypergraph& g);

/// Counts induced trimmed sub-hypergraphs of G isomorphic to B_k in
/// polynomial time: any k vertices of one common non-empty type trim to
/// B_k, so the answer is the sum of C(n_t, k) over the types.
std::uint64_t indtrimsubBk(int k, const Hypergraph& g);

/// Re-introduces the vertices of H0 outside X into a host coloured by
/// trim(H0, X), one fresh host vertex per trimmed pattern vertex,
/// doubling at most the edge count per step. Preserves the
/// colour-prescribed homomorphism count exactly.
ColoredHost untrimColoredHost(const Hypergraph& h0, VertexSet x,
                              const ColoredHost& host);

/// Pattern H_{n,k} and host G plus a full edge; counting copies of the
/// pattern in the host counts the k-cliques of G. Requires k >= 2 (the
/// pattern degenerates for k = 1).
struct CliqueGadget {
    Hypergraph pattern;
    Hypergraph host;
};
CliqueGadget cliqueGadget(const Hypergraph& g, int k);

/// Graph isomorphism through hypergraph isomorphism: F and G are
/// isomorphic iff their full-edge extensions are.
bool giGadget(const Hypergraph& f, const Hypergraph& g);

/// Bipartite graph over Y and X with X partitioned into k parts.
struct BipartiteCNInstance {
    int ySize = 0;
    int xSize = 0;
    int k = 0;
    std::vector<int> part;                      // per X vertex
    std::vector<std::pair<int, int>> edges;     // (y, x)
};

/// "p cn |Y| |X| k" header, part lines "x <vertex> <part>", edge lines
/// "a <y> <x>".
BipartiteCNInstance parseCNInstance(const std::string& text);

/// Host over X with one hyperedge per neighbourhood N(y) and the part
/// index as colour (deliberately not a homomorphism into B_k). The
/// colour-prescribed trimmed homomorphism count of B_k equals the number
/// of colourful k-neighbourhoods; both are computed and compared.
struct CNGadget {
    Hypergraph pattern;
    ColoredHost host;
    std::uint64_t count = 0;
};
CNGadget cnGadget(const BipartiteCNInstance& inst);

/// Witness separating the trimmed counts from the homomorphism basis:
/// every edge of H is inflated with n fresh vertices, so H survives as a
/// trimmed sub-hypergraph while no hypergraph with an edge and at most
/// n vertices maps homomorphically into the witness.
struct RefutationReport {
    Hypergraph witness;
    std::uint64_t trimHomCount = 0;
    std::uint64_t indTrimSubCount = 0;
    bool homVanishes = false;  // verified over all edged F, |F| <= n
    int checkedVertexCap = 0;
};
RefutationReport refuteHomBasisWitness(const Hypergraph& h, int n);

}  // namespace hgc
