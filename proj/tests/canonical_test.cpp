#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hgc/canonical.hpp"
#include "hgc/families.hpp"

using namespace hgc;

namespace {

bool isoOracle(const Hypergraph& a, const Hypergraph& b) {
    if (a.numVertices() != b.numVertices() || a.numEdges() != b.numEdges())
        return false;
    int n = a.numVertices();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (VertexSet e : a.edges()) {
            VertexSet mapped = 0;
            for (int v = 0; v < n; ++v)
                if (contains(e, v)) mapped |= VertexSet{1} << perm[v];
            if (!b.hasEdge(mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::uint64_t autOracle(const Hypergraph& h) {
    int n = h.numVertices();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (VertexSet e : h.edges()) {
            VertexSet mapped = 0;
            for (int v = 0; v < n; ++v)
                if (contains(e, v)) mapped |= VertexSet{1} << perm[v];
            if (!h.hasEdge(mapped)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("keys coincide exactly on isomorphic pairs, 3-vertex sweep") {
    std::vector<Hypergraph> all;
    forEachEdgeSupergraph(Hypergraph(3, {}),
                          [&](const Hypergraph& h) { all.push_back(h); });
    REQUIRE(all.size() == 128);
    std::vector<CanonicalKey> keys;
    for (const auto& h : all) keys.push_back(canonicalKey(h));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK((keys[i] == keys[j]) == isoOracle(all[i], all[j]));
}

TEST_CASE("keys separate vertex counts") {
    CHECK(canonicalKey(Hypergraph(2, {})) != canonicalKey(Hypergraph(3, {})));
    CHECK(isIsomorphic(Hypergraph(3, {0b011}), Hypergraph(3, {0b110})));
    CHECK(!isIsomorphic(Hypergraph(3, {0b011}), Hypergraph(3, {0b111})));
}

TEST_CASE("automorphism counts match the permutation oracle") {
    forEachEdgeSupergraph(Hypergraph(3, {}), [&](const Hypergraph& h) {
        CHECK(countAutomorphisms(h) == autOracle(h));
    });

    std::uint64_t factorial = 1;
    for (int k = 1; k <= 5; ++k) {
        factorial *= k;
        CHECK(countAutomorphisms(bK(k)) == factorial);
    }

    // the 4-path has only the flip
    CHECK(countAutomorphisms(Hypergraph(4, {0b0011, 0b0110, 0b1100})) == 2);
    // the triangle has the full symmetric group
    CHECK(countAutomorphisms(Hypergraph(3, {0b011, 0b101, 0b110})) == 6);
    // edgeless vertices are interchangeable
    CHECK(countAutomorphisms(Hypergraph(4, {})) == 24);
}

TEST_CASE("vertex cap is enforced") {
    CHECK_THROWS_AS(canonicalKey(Hypergraph(11, {})), BudgetError);
}
