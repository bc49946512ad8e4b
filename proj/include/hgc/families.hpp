#pragma once

#include <string>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// Named hypergraph families used by the generators and test corpora.
enum class Family {
    SingleVertex,   // one vertex, no edges
    Bk,             // k vertices, one edge covering all of them
    Sunflower,      // m edges of size u sharing a fixed core of size c
    Hnk,            // [n] with all 2-subsets of [k] plus the full edge
    GroheMarx,      // vertices = n-subsets of [2n]; edge per i in [2n]
    DisjointEdges,  // m pairwise-disjoint edges of size r
    HatOfGraph,     // a given graph plus the full edge V(G)
};

struct FamilySpec {
    Family family = Family::SingleVertex;
    std::vector<int> params;  // family-specific, see generate()
    Hypergraph base;          // hat_of_graph only
};

/// Builds a member of a named family.
///   b_k(k), sunflower(u, c, m) with u >= c+1, h_nk(n, k) with n >= k,
///   grohe_marx(n), disjoint_edges(m, r), hat_of_graph(G).
Hypergraph generate(const FamilySpec& spec);

Hypergraph singleVertex();
Hypergraph bK(int k);
Hypergraph sunflower(int uniformity, int core, int petals);
Hypergraph hNK(int n, int k);
Hypergraph groheMarx(int n);
Hypergraph disjointEdges(int m, int r);
Hypergraph hatOfGraph(const Hypergraph& g);

/// Parses a family by name ("b_k", "sunflower", ...).
Family parseFamily(const std::string& name);

}  // namespace hgc
