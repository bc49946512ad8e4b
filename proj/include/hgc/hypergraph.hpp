#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hgc/errors.hpp"

namespace hgc {

using VertexSet = std::uint64_t;  // bitmask over vertices 0..63

constexpr int kMaxVertices = 64;

inline int setSize(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet fullSet(int n) {
    return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

/// A finite hypergraph: vertices 0..n-1 and a set of distinct non-empty
/// edges, each stored as a bitmask. Edges are kept sorted by (size, mask)
/// and deduplicated, so equal objects serialize identically.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<VertexSet> edges);

    int numVertices() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int numEdges() const { return static_cast<int>(edges_.size()); }

    VertexSet vertexMask() const { return fullSet(n_); }
    bool hasEdge(VertexSet e) const;

    /// max edge cardinality; 0 if edgeless
    int rank() const;
    /// |H| + sum of edge sizes
    int encodingSize() const;

    bool operator==(const Hypergraph& other) const = default;

    /// Vertices adjacent to v (sharing an edge), excluding v itself.
    VertexSet neighbours(int v) const;
    /// Rank-<=2 hypergraph with an edge {u,v} for each adjacent pair.
    Hypergraph gaifmanGraph() const;

    bool isEdgeless() const { return edges_.empty(); }

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

enum class DeriveMode { Induced, Trim, DeleteKeep, DeleteTrim };

/// Sub-hypergraph derivations with respect to a vertex set X:
///   Induced    -> H[X], keeps edges fully inside X
///   Trim       -> H|X, intersects every edge with X, drops empties
///   DeleteKeep -> removes X and every edge meeting X
///   DeleteTrim -> removes X, trims the remaining edges
/// Induced and Trim relabel X to 0..|X|-1 in increasing vertex order;
/// the delete modes relabel the complement likewise.
Hypergraph derive(const Hypergraph& h, VertexSet x, DeriveMode mode);

/// Streams (V, E ∪ A) for every subset A of the non-edges of h.
void forEachEdgeSupergraph(const Hypergraph& h,
                           const std::function<void(const Hypergraph&)>& fn,
                           int vertexCap = 10);
std::vector<VertexSet> nonEdges(const Hypergraph& h);

struct ParseResult {
    Hypergraph hypergraph;
    std::vector<std::string> warnings;  // e.g. duplicate edge lines
};

/// Text format: "p hg <n> <m>" header, then m lines "e v1 v2 ...".
/// Comment lines start with '#'. Throws DomainError with a line number
/// on malformed input.
ParseResult parseHypergraph(const std::string& text);
std::string serializeHypergraph(const Hypergraph& h);

/// Single-line variant of the text format ("p hg n m e ... e ..."),
/// used inside motif-parameter files.
std::string serializeInline(const Hypergraph& h);
Hypergraph parseInline(const std::string& line);

std::string toJson(const Hypergraph& h);
Hypergraph fromJson(const std::string& text);

}  // namespace hgc
