#include "hgc/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace hgc {

namespace {

/// Edge list with singleton edges appended for isolated vertices; the
/// convention applies only while computing invariants.
std::vector<VertexSet> conventionEdges(const Hypergraph& h) {
    std::vector<VertexSet> edges = h.edges();
    VertexSet covered = 0;
    for (VertexSet e : edges) covered |= e;
    for (int v = 0; v < h.numVertices(); ++v)
        if (!contains(covered, v)) edges.push_back(VertexSet{1} << v);
    return edges;
}

Rational rhoStarLP(const std::vector<VertexSet>& edges, int n, VertexSet x) {
    LPInstance lp;
    lp.maximize = false;
    lp.objective.assign(edges.size(), Rational(1));
    for (int v = 0; v < n; ++v) {
        if (!contains(x, v)) continue;
        LPConstraint con;
        con.coeffs.assign(edges.size(), Rational(0));
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (contains(edges[i], v)) con.coeffs[i] = 1;
        con.relation = Relation::GreaterEq;
        con.rhs = 1;
        lp.constraints.push_back(std::move(con));
    }
    return solveLP(lp).value;
}

bool isIndependent(const Hypergraph& h, VertexSet s) {
    for (VertexSet e : h.edges())
        if (setSize(e & s) > 1) return false;
    return true;
}

/// Bron-Kerbosch with pivoting over the complement of the Gaifman graph:
/// maximal independent sets of H are maximal cliques there.
void maximalIndependentSets(const Hypergraph& h,
                            std::vector<VertexSet>& out) {
    int n = h.numVertices();
    std::vector<VertexSet> adj(n, 0);  // non-neighbours in the Gaifman graph
    for (int v = 0; v < n; ++v)
        adj[v] = fullSet(n) & ~h.neighbours(v) & ~(VertexSet{1} << v);

    std::function<void(VertexSet, VertexSet, VertexSet)> bk =
        [&](VertexSet r, VertexSet p, VertexSet excluded) {
            if (p == 0 && excluded == 0) {
                out.push_back(r);
                return;
            }
            VertexSet both = p | excluded;
            int pivot = std::countr_zero(both);
            VertexSet bestExt = p & ~adj[pivot];
            for (int u = pivot + 1; u < n; ++u)
                if (contains(both, u) &&
                    setSize(p & ~adj[u]) < setSize(bestExt))
                    bestExt = p & ~adj[u];
            VertexSet candidates = bestExt;
            while (candidates != 0) {
                int v = std::countr_zero(candidates);
                candidates &= candidates - 1;
                VertexSet bit = VertexSet{1} << v;
                bk(r | bit, p & adj[v], excluded & adj[v]);
                p &= ~bit;
                excluded |= bit;
            }
        };
    if (n == 0)
        out.push_back(0);
    else
        bk(0, fullSet(n), 0);
}

}  // namespace

Rational fractionalInvariant(FractionalKind kind, const Hypergraph& h,
                             VertexSet x) {
    std::vector<VertexSet> edges = conventionEdges(h);
    int n = h.numVertices();
    if (kind == FractionalKind::RhoStar)
        return rhoStarLP(edges, n, x & fullSet(n));

    // alpha*: max vertex weights, each edge's total at most 1
    LPInstance lp;
    lp.maximize = true;
    lp.objective.assign(n, Rational(1));
    for (VertexSet e : edges) {
        LPConstraint con;
        con.coeffs.assign(n, Rational(0));
        for (int v = 0; v < n; ++v)
            if (contains(e, v)) con.coeffs[v] = 1;
        con.relation = Relation::LessEq;
        con.rhs = 1;
        lp.constraints.push_back(std::move(con));
    }
    return solveLP(lp).value;
}

std::uint64_t integralInvariant(IntegralKind kind, const Hypergraph& h,
                                std::uint64_t budget) {
    int n = h.numVertices();
    if (kind == IntegralKind::Alpha) {
        if ((std::uint64_t{1} << n) > budget)
            throw BudgetError("integral_invariant: subset budget exceeded");
        std::uint64_t best = 0;
        VertexSet limit = fullSet(n);
        for (VertexSet s = 0;; ++s) {
            if (isIndependent(h, s))
                best = std::max<std::uint64_t>(best, setSize(s));
            if (s == limit) break;
        }
        return best;
    }

    // rho: smallest number of edges covering all vertices
    std::vector<VertexSet> edges = conventionEdges(h);
    int m = static_cast<int>(edges.size());
    if (m >= 63 || (std::uint64_t{1} << m) > budget)
        throw BudgetError("integral_invariant: edge-subset budget exceeded");
    VertexSet all = fullSet(n);
    std::uint64_t best = m + 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        if (static_cast<std::uint64_t>(std::popcount(pick)) >= best) continue;
        VertexSet covered = 0;
        for (int i = 0; i < m; ++i)
            if ((pick >> i) & 1u) covered |= edges[i];
        if (covered == all)
            best = static_cast<std::uint64_t>(std::popcount(pick));
    }
    if (best > static_cast<std::uint64_t>(m))
        throw DomainError("integral_invariant: no edge cover exists");
    return best;
}

std::vector<VertexSet> coindependentSets(const Hypergraph& h,
                                         bool minimalOnly) {
    int n = h.numVertices();
    VertexSet all = fullSet(n);
    std::vector<VertexSet> out;
    if (minimalOnly) {
        std::vector<VertexSet> mis;
        maximalIndependentSets(h, mis);
        out.reserve(mis.size());
        for (VertexSet s : mis) out.push_back(all & ~s);
    } else {
        if (n > 20)
            throw BudgetError("coindependent_sets: subset budget exceeded");
        for (VertexSet x = 0;; ++x) {
            if (isIndependent(h, all & ~x)) out.push_back(x);
            if (x == all) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational sigmaStar(const Hypergraph& h, VertexSet& argmin) {
    std::vector<VertexSet> edges = conventionEdges(h);
    bool first = true;
    Rational best(0);
    argmin = 0;
    for (VertexSet x : coindependentSets(h, true)) {
        Rational value = rhoStarLP(edges, h.numVertices(), x);
        if (first || value < best) {
            best = value;
            argmin = x;
            first = false;
        }
    }
    return best;
}

Rational sigmaStar(const Hypergraph& h) {
    VertexSet ignored;
    return sigmaStar(h, ignored);
}

int treewidthExact(const Hypergraph& h) {
    Hypergraph g = h.gaifmanGraph();
    int n = g.numVertices();
    if (n > 15) throw BudgetError("treewidth_exact: more than 15 vertices");
    if (n == 0) return 0;

    std::vector<VertexSet> adj(n, 0);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbours(v);

    // degree of v when eliminated after the set S: vertices outside S
    // reachable from v through S
    auto elimDegree = [&](VertexSet s, int v) {
        VertexSet seen = VertexSet{1} << v;
        VertexSet frontier = seen;
        VertexSet reached = 0;
        while (frontier != 0) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexSet nb = adj[u] & ~seen;
            seen |= nb;
            reached |= nb & ~s;
            frontier |= nb & s;
        }
        return setSize(reached & ~(VertexSet{1} << v));
    };

    std::vector<int> dp(std::size_t{1} << n, 0);
    dp[0] = -1;
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
        int best = n;
        VertexSet rest = s;
        while (rest != 0) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            VertexSet prev = s & ~(VertexSet{1} << v);
            best = std::min(best, std::max(dp[prev], elimDegree(prev, v)));
        }
        dp[s] = best;
    }
    return dp[(std::size_t{1} << n) - 1];
}

std::string validateDecomposition(const TreeDecomposition& d,
                                  const Hypergraph& h) {
    int k = static_cast<int>(d.bags.size());
    if (k == 0) return h.numVertices() == 0 ? "" : "no bags";
    for (const auto& [a, b] : d.treeEdges)
        if (a < 0 || a >= k || b < 0 || b >= k || a == b)
            return "tree edge out of range";
    if (static_cast<int>(d.treeEdges.size()) != k - 1)
        return "tree must have exactly one edge fewer than nodes";
    // connectivity of the tree
    std::vector<std::vector<int>> nb(k);
    for (const auto& [a, b] : d.treeEdges) {
        nb[a].push_back(b);
        nb[b].push_back(a);
    }
    std::vector<bool> seen(k, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : nb[u])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return "tree is disconnected";

    VertexSet covered = 0;
    for (VertexSet b : d.bags) covered |= b;
    if (covered != h.vertexMask()) return "bags do not cover every vertex";
    for (VertexSet e : h.edges()) {
        bool inside = false;
        for (VertexSet b : d.bags) inside |= (e & ~b) == 0;
        if (!inside) return "some edge is in no bag";
    }
    // occurrence sets must induce subtrees: count of nodes containing v
    // minus count of tree edges whose both ends contain v must be 1
    for (int v = 0; v < h.numVertices(); ++v) {
        int nodes = 0, links = 0;
        for (VertexSet b : d.bags) nodes += contains(b, v);
        for (const auto& [a, b] : d.treeEdges)
            links += contains(d.bags[a], v) && contains(d.bags[b], v);
        if (nodes == 0) return "bags do not cover every vertex";
        if (nodes - links != 1) return "occurrence set is disconnected";
    }
    return "";
}

Rational decompositionWidth(const TreeDecomposition& d, const Hypergraph& h,
                            WidthFunction f) {
    std::string fault = validateDecomposition(d, h);
    if (!fault.empty()) throw DomainError("invalid decomposition: " + fault);
    Rational width(f == WidthFunction::CardinalityMinusOne ? -1 : 0);
    bool first = true;
    for (VertexSet b : d.bags) {
        Rational value = f == WidthFunction::CardinalityMinusOne
                             ? Rational(setSize(b) - 1)
                             : fractionalInvariant(FractionalKind::RhoStar, h,
                                                   b);
        if (first || value > width) width = value;
        first = false;
    }
    return width;
}

TreeDecomposition coindependentDecomposition(const Hypergraph& h) {
    VertexSet x = 0;
    sigmaStar(h, x);
    TreeDecomposition d;
    VertexSet outside = h.vertexMask() & ~x;
    if (outside == 0) {
        if (h.numVertices() > 0) d.bags.push_back(x);
        return d;
    }
    for (int v = 0; v < h.numVertices(); ++v)
        if (contains(outside, v)) d.bags.push_back(x | (VertexSet{1} << v));
    for (std::size_t i = 0; i + 1 < d.bags.size(); ++i)
        d.treeEdges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return d;
}

std::string serializeDecomposition(const TreeDecomposition& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i;
        for (int v = 0; v < kMaxVertices; ++v)
            if (contains(d.bags[i], v)) out << ' ' << v;
        out << '\n';
    }
    for (const auto& [a, b] : d.treeEdges) out << "t " << a << ' ' << b << '\n';
    return out.str();
}

TreeDecomposition parseDecomposition(const std::string& text) {
    TreeDecomposition d;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "b") {
            int node = 0;
            if (!(ls >> node) || node < 0)
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": malformed bag line");
            if (node >= static_cast<int>(d.bags.size()))
                d.bags.resize(node + 1, 0);
            int v = 0;
            while (ls >> v) {
                if (v < 0 || v >= kMaxVertices)
                    throw DomainError("line " + std::to_string(lineNo) +
                                      ": vertex index out of range");
                d.bags[node] |= VertexSet{1} << v;
            }
            if (!ls.eof())
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": expected a vertex index");
        } else if (tag == "t") {
            int a = 0, b = 0;
            if (!(ls >> a >> b))
                throw DomainError("line " + std::to_string(lineNo) +
                                  ": malformed tree edge line");
            d.treeEdges.emplace_back(a, b);
        } else {
            throw DomainError("line " + std::to_string(lineNo) +
                              ": expected 'b' or 't' line");
        }
    }
    return d;
}

}  // namespace hgc
