#include "hgc/canonical.hpp"

#include <algorithm>
#include <vector>

namespace hgc {

namespace {

/// Per-vertex invariant preserved by isomorphism: the sorted multiset of
/// incident edge sizes plus the neighbourhood size. Used to restrict
/// permutation search to class-respecting relabellings.
std::vector<int> vertexInvariant(const Hypergraph& h, int v) {
    std::vector<int> inv;
    for (VertexSet e : h.edges())
        if (contains(e, v)) inv.push_back(setSize(e));
    std::sort(inv.begin(), inv.end());
    inv.push_back(setSize(h.neighbours(v)));
    return inv;
}

struct ClassStructure {
    // vertices grouped by invariant; classes sorted by invariant value,
    // so the grouping is identical across isomorphic hypergraphs
    std::vector<std::vector<int>> classes;
    std::vector<int> classBase;  // first target label of each class
};

ClassStructure classify(const Hypergraph& h) {
    int n = h.numVertices();
    std::vector<std::pair<std::vector<int>, int>> tagged;
    tagged.reserve(n);
    for (int v = 0; v < n; ++v) tagged.emplace_back(vertexInvariant(h, v), v);
    std::sort(tagged.begin(), tagged.end());

    ClassStructure cs;
    int base = 0;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && tagged[j].first == tagged[i].first) ++j;
        std::vector<int> cls;
        for (int k = i; k < j; ++k) cls.push_back(tagged[k].second);
        cs.classBase.push_back(base);
        base += static_cast<int>(cls.size());
        cs.classes.push_back(std::move(cls));
        i = j;
    }
    return cs;
}

std::vector<VertexSet> relabelEdges(const Hypergraph& h,
                                    const std::vector<int>& label) {
    std::vector<VertexSet> out;
    out.reserve(h.numEdges());
    for (VertexSet e : h.edges()) {
        VertexSet mapped = 0;
        for (int v = 0; v < h.numVertices(); ++v)
            if (contains(e, v)) mapped |= VertexSet{1} << label[v];
        out.push_back(mapped);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        int sa = setSize(a), sb = setSize(b);
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

/// Calls fn with each class-respecting labelling V -> {0..n-1}.
void forEachLabelling(const Hypergraph& h,
                      const std::function<void(const std::vector<int>&)>& fn) {
    ClassStructure cs = classify(h);
    int n = h.numVertices();
    std::vector<std::vector<int>> perm = cs.classes;  // within-class orders
    for (auto& p : perm) std::sort(p.begin(), p.end());

    std::vector<int> label(n, 0);
    auto emit = [&] {
        for (std::size_t c = 0; c < perm.size(); ++c)
            for (std::size_t i = 0; i < perm[c].size(); ++i)
                label[perm[c][i]] = cs.classBase[c] + static_cast<int>(i);
        fn(label);
    };
    // odometer over per-class permutations
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == perm.size()) {
            emit();
            return;
        }
        std::sort(perm[c].begin(), perm[c].end());
        do {
            rec(c + 1);
        } while (std::next_permutation(perm[c].begin(), perm[c].end()));
    };
    rec(0);
}

std::string serializeKey(int n, const std::vector<VertexSet>& edges) {
    std::string key;
    key.push_back(static_cast<char>(n));
    for (VertexSet e : edges)
        for (int b = 7; b >= 0; --b)
            key.push_back(static_cast<char>((e >> (8 * b)) & 0xff));
    return key;
}

void checkCap(const Hypergraph& h, int cap, const char* what) {
    if (h.numVertices() > cap)
        throw BudgetError(std::string(what) + ": vertex cap " +
                          std::to_string(cap) + " exceeded");
}

}  // namespace

CanonicalKey canonicalKey(const Hypergraph& h, int cap) {
    checkCap(h, cap, "canonical_key");
    std::string best;
    forEachLabelling(h, [&](const std::vector<int>& label) {
        std::string key = serializeKey(h.numVertices(), relabelEdges(h, label));
        if (best.empty() || key < best) best = std::move(key);
    });
    if (best.empty()) best = serializeKey(0, {});
    return best;
}

std::uint64_t countAutomorphisms(const Hypergraph& h, int cap) {
    checkCap(h, cap, "count_automorphisms");
    // automorphisms fix each invariant class setwise, so enumerate only
    // permutations mapping every class onto itself
    ClassStructure cs = classify(h);
    std::vector<std::vector<int>> target = cs.classes;
    std::vector<int> label(h.numVertices(), 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == target.size()) {
            if (relabelEdges(h, label) == h.edges()) ++count;
            return;
        }
        std::sort(target[c].begin(), target[c].end());
        do {
            for (std::size_t i = 0; i < target[c].size(); ++i)
                label[cs.classes[c][i]] = target[c][i];
            rec(c + 1);
        } while (std::next_permutation(target[c].begin(), target[c].end()));
    };
    rec(0);
    return count;
}

bool isIsomorphic(const Hypergraph& a, const Hypergraph& b, int cap) {
    if (a.numVertices() != b.numVertices() || a.numEdges() != b.numEdges())
        return false;
    return canonicalKey(a, cap) == canonicalKey(b, cap);
}

}  // namespace hgc
