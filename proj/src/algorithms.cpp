#include "hgc/algorithms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hgc/canonical.hpp"
#include "hgc/families.hpp"

namespace hgc {

namespace {

std::vector<VertexSet> withIsolatedSingletons(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.edges();
    VertexSet covered = 0;
    for (VertexSet e : edges) covered |= e;
    for (int v = 0; v < h.numVertices(); ++v)
        if (!contains(covered, v)) edges.push_back(VertexSet{1} << v);
    return edges;
}

}  // namespace

std::vector<VertexSet> greedyEdgeCover(const Hypergraph& h) {
    std::vector<VertexSet> edges = withIsolatedSingletons(h);
    std::vector<VertexSet> cover;
    VertexSet uncovered = h.vertexMask();
    while (uncovered != 0) {
        VertexSet best = 0;
        for (VertexSet e : edges)
            if (setSize(e & uncovered) > setSize(best & uncovered)) best = e;
        cover.push_back(best);
        uncovered &= ~best;
    }
    return cover;
}

std::uint64_t indsubQuasipoly(const Hypergraph& h, const Hypergraph& g,
                              std::uint64_t budget) {
    if (h.numVertices() == 0) return 1;
    std::vector<VertexSet> cover = greedyEdgeCover(h);

    // host edges plus a singleton per host vertex, so isolated pattern
    // vertices can land anywhere
    std::vector<VertexSet> hostEdges = g.edges();
    for (int v = 0; v < g.numVertices(); ++v)
        hostEdges.push_back(VertexSet{1} << v);
    std::sort(hostEdges.begin(), hostEdges.end());
    hostEdges.erase(std::unique(hostEdges.begin(), hostEdges.end()),
                    hostEdges.end());

    std::uint64_t assignments = 1;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (hostEdges.empty()) return 0;
        if (assignments > budget / hostEdges.size())
            throw BudgetError("indsub_quasipoly: assignment budget exceeded");
        assignments *= hostEdges.size();
    }

    std::set<VertexSet> candidates;
    std::vector<std::size_t> pick(cover.size(), 0);
    while (true) {
        VertexSet x = 0;
        for (std::size_t i = 0; i < cover.size(); ++i)
            x |= hostEdges[pick[i]];
        if (setSize(x) == h.numVertices()) candidates.insert(x);
        std::size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == hostEdges.size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
        ++pick[i];
    }

    std::uint64_t count = 0;
    for (VertexSet x : candidates)
        if (isIsomorphic(derive(g, x, DeriveMode::Induced), h)) ++count;
    return count;
}

std::vector<std::uint64_t> vertexTypes(const Hypergraph& g) {
    if (g.numEdges() > 64)
        throw BudgetError("vertex_types: more than 64 edges");
    std::vector<std::uint64_t> types(g.numVertices(), 0);
    for (int i = 0; i < g.numEdges(); ++i)
        for (int v = 0; v < g.numVertices(); ++v)
            if (contains(g.edges()[i], v))
                types[v] |= std::uint64_t{1} << i;
    return types;
}

std::uint64_t indtrimsubBk(int k, const Hypergraph& g) {
    if (k < 1) throw DomainError("indtrimsub_bk: k must be >= 1");
    std::vector<std::uint64_t> types = vertexTypes(g);
    std::map<std::uint64_t, int> bucket;
    for (std::uint64_t t : types)
        if (t != 0) ++bucket[t];  // untouched vertices trim to nothing
    std::uint64_t total = 0;
    for (const auto& [type, n] : bucket) {
        // C(n, k)
        if (n < k) continue;
        std::uint64_t binom = 1;
        for (int i = 0; i < k; ++i)
            binom = binom * static_cast<std::uint64_t>(n - i) /
                    static_cast<std::uint64_t>(i + 1);
        total += binom;
    }
    return total;
}

ColoredHost untrimColoredHost(const Hypergraph& h0, VertexSet x,
                              const ColoredHost& host) {
    if (x == 0 || (x & ~h0.vertexMask()) != 0)
        throw DomainError("untrim: X must be a non-empty subset of V(H0)");
    Hypergraph h = derive(h0, x, DeriveMode::Trim);
    // validate the input colouring against the trimmed pattern
    makeColoredHost(host.host, host.colour, h, true);

    // translate colours into H0's labelling (X in increasing order)
    std::vector<int> xVerts;
    for (int v = 0; v < h0.numVertices(); ++v)
        if (contains(x, v)) xVerts.push_back(v);
    std::vector<int> colour(host.colour.size());
    for (std::size_t w = 0; w < host.colour.size(); ++w)
        colour[w] = xVerts[host.colour[w]];

    std::vector<int> outside;
    for (int v = 0; v < h0.numVertices(); ++v)
        if (!contains(x, v)) outside.push_back(v);

    // pattern edge sets over H0 labels when only v_1..v_i are trimmed
    auto patternEdges = [&](int trimmedCount) {
        VertexSet keep = h0.vertexMask();
        for (int i = 0; i < trimmedCount; ++i)
            keep &= ~(VertexSet{1} << outside[i]);
        std::set<VertexSet> out;
        for (VertexSet e : h0.edges())
            if ((e & keep) != 0) out.insert(e & keep);
        return out;
    };

    Hypergraph g = host.host;
    std::vector<VertexSet> gEdges = g.edges();
    int ell = static_cast<int>(outside.size());
    for (int i = ell - 1; i >= 0; --i) {
        int vBack = outside[i];  // v_{i+1} in the proof's numbering
        std::set<VertexSet> ei = patternEdges(i);  // E(H_i)
        std::set<VertexSet> reducedEdges;          // E_{i+1}
        for (VertexSet e : ei)
            if (contains(e, vBack))
                reducedEdges.insert(e & ~(VertexSet{1} << vBack));

        int w = static_cast<int>(colour.size());  // fresh host vertex
        std::vector<VertexSet> next;
        for (VertexSet e : gEdges) {
            VertexSet image = 0;
            for (int u = 0; u < w; ++u)
                if (contains(e, u)) image |= VertexSet{1} << colour[u];
            if (ei.count(image)) next.push_back(e);
            if (reducedEdges.count(image))
                next.push_back(e | (VertexSet{1} << w));
        }
        // an edge of H_i that loses everything but the returning vertex
        // reappears as the bare fresh-vertex edge
        if (reducedEdges.count(0)) next.push_back(VertexSet{1} << w);
        if (w + 1 > kMaxVertices)
            throw DomainError("untrim: host exceeds the vertex capacity");
        gEdges = std::move(next);
        colour.push_back(vBack);
    }

    Hypergraph result(static_cast<int>(colour.size()), std::move(gEdges));
    return makeColoredHost(std::move(result), std::move(colour), h0, true);
}

CliqueGadget cliqueGadget(const Hypergraph& g, int k) {
    if (g.rank() > 2) throw DomainError("clique_gadget: host must be a graph");
    if (k < 2) throw DomainError("clique_gadget: k must be >= 2");
    if (k > g.numVertices())
        throw DomainError("clique_gadget: k exceeds the vertex count");
    // on two vertices the pattern's clique edge merges with the full
    // edge, so the hat would be counted as a clique
    if (g.numVertices() == 2)
        throw DomainError("clique_gadget: host needs at least 3 vertices");
    for (VertexSet e : g.edges())
        if (setSize(e) != 2)
            throw DomainError("clique_gadget: host must be a simple graph");
    return {hNK(g.numVertices(), k), hatOfGraph(g)};
}

bool giGadget(const Hypergraph& f, const Hypergraph& g) {
    if (f.rank() > 2 || g.rank() > 2)
        throw DomainError("gi_gadget: inputs must be graphs");
    // below 3 vertices the full edge would merge with a graph edge, and
    // isomorphism reduces to comparing vertex and edge counts anyway
    if (f.numVertices() <= 2 || g.numVertices() <= 2)
        return f.numVertices() == g.numVertices() &&
               f.numEdges() == g.numEdges();
    return canonicalKey(hatOfGraph(f)) == canonicalKey(hatOfGraph(g));
}

BipartiteCNInstance parseCNInstance(const std::string& text) {
    BipartiteCNInstance inst;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool seenHeader = false;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (!seenHeader) {
            std::string cn;
            if (tag != "p" || !(ls >> cn >> inst.ySize >> inst.xSize >>
                                inst.k) ||
                cn != "cn")
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": expected header 'p cn |Y| |X| k'");
            if (inst.ySize < 0 || inst.xSize < 0 || inst.k < 1)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": invalid instance sizes");
            inst.part.assign(inst.xSize, -1);
            seenHeader = true;
            continue;
        }
        if (tag == "x") {
            int v = 0, p = 0;
            if (!(ls >> v >> p) || v < 0 || v >= inst.xSize || p < 0 ||
                p >= inst.k)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": malformed part line");
            inst.part[v] = p;
        } else if (tag == "a") {
            int y = 0, xv = 0;
            if (!(ls >> y >> xv) || y < 0 || y >= inst.ySize || xv < 0 ||
                xv >= inst.xSize)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": malformed edge line");
            inst.edges.emplace_back(y, xv);
        } else {
            throw DomainError("line " + std::to_string(lineNo) +
                              ": expected 'x' or 'a' line");
        }
    }
    if (!seenHeader) throw DomainError("missing 'p cn' header");
    for (int v = 0; v < inst.xSize; ++v)
        if (inst.part[v] < 0)
            throw DomainError("vertex " + std::to_string(v) +
                              " is assigned to no part");
    return inst;
}

CNGadget cnGadget(const BipartiteCNInstance& inst) {
    std::vector<int> partSize(inst.k, 0);
    for (int p : inst.part) ++partSize[p];
    for (int p = 0; p < inst.k; ++p)
        if (partSize[p] == 0)
            throw DomainError("cn_gadget: part " + std::to_string(p) +
                              " is empty");
    if (inst.xSize > kMaxVertices)
        throw DomainError("cn_gadget: too many X vertices");

    std::vector<VertexSet> neighbourhoods(inst.ySize, 0);
    for (const auto& [y, xv] : inst.edges)
        neighbourhoods[y] |= VertexSet{1} << xv;
    std::vector<VertexSet> edges;
    for (VertexSet nb : neighbourhoods)
        if (nb != 0) edges.push_back(nb);

    CNGadget out;
    out.pattern = bK(inst.k);
    out.host = makeColoredHost(Hypergraph(inst.xSize, std::move(edges)),
                               inst.part, out.pattern, false);
    out.count = countColored(ColorMode::Prescribed, true, out.pattern,
                             out.host);

    // cross-check by enumerating the colourful neighbourhood subsets
    std::set<VertexSet> seen;
    std::function<void(VertexSet, int, VertexSet)> pickPart =
        [&](VertexSet nb, int p, VertexSet chosen) {
            if (p == inst.k) {
                seen.insert(chosen);
                return;
            }
            for (int v = 0; v < inst.xSize; ++v)
                if (inst.part[v] == p && contains(nb, v))
                    pickPart(nb, p + 1, chosen | (VertexSet{1} << v));
        };
    for (VertexSet nb : out.host.host.edges()) pickPart(nb, 0, 0);
    if (seen.size() != out.count)
        throw std::logic_error(
            "cn_gadget: trimmed count disagrees with direct enumeration");
    return out;
}

RefutationReport refuteHomBasisWitness(const Hypergraph& h, int n) {
    if (h.numEdges() == 0)
        throw DomainError("refute_hom_basis_witness: pattern is edgeless");
    if (n < 1) throw DomainError("refute_hom_basis_witness: n must be >= 1");
    int total = h.numVertices() + n * h.numEdges();
    if (total > kMaxVertices)
        throw DomainError("refute_hom_basis_witness: witness exceeds the "
                          "vertex capacity");

    std::vector<VertexSet> edges;
    int fresh = h.numVertices();
    for (VertexSet e : h.edges()) {
        VertexSet inflated = e;
        for (int j = 0; j < n; ++j)
            inflated |= VertexSet{1} << (fresh + j);
        fresh += n;
        edges.push_back(inflated);
    }

    RefutationReport report;
    report.witness = Hypergraph(total, std::move(edges));
    report.checkedVertexCap = std::min(n, 4);
    report.trimHomCount =
        countMorphisms(MorphismKind::TrimHom, h, report.witness);
    report.indTrimSubCount =
        countPatterns(PatternKind::IndTrimSub, h, report.witness);

    // every witness edge has more than n vertices, so no pattern with an
    // edge and at most n vertices can map into it; verified exhaustively
    report.homVanishes = true;
    int cap = report.checkedVertexCap;
    for (int nf = 1; nf <= cap && report.homVanishes; ++nf)
        forEachEdgeSupergraph(Hypergraph(nf, {}), [&](const Hypergraph& f) {
            if (f.numEdges() == 0) return;
            if (countMorphisms(MorphismKind::Hom, f, report.witness) != 0)
                report.homVanishes = false;
        });
    return report;
}

}  // namespace hgc
