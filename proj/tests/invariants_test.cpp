#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/families.hpp"
#include "hgc/invariants.hpp"

using namespace hgc;

namespace {

const Hypergraph kTriangle(3, {0b011, 0b101, 0b110});
const Hypergraph kPath4(4, {0b0011, 0b0110, 0b1100});

}  // namespace

TEST_CASE("fractional covers and independence on anchors") {
    CHECK(fractionalInvariant(FractionalKind::RhoStar, kTriangle) ==
          Rational(3, 2));
    CHECK(fractionalInvariant(FractionalKind::AlphaStar, kTriangle) ==
          Rational(3, 2));
    CHECK(fractionalInvariant(FractionalKind::RhoStar, bK(4)) == 1);
    CHECK(fractionalInvariant(FractionalKind::RhoStar, kPath4) == 2);
    for (int m = 1; m <= 4; ++m)
        CHECK(fractionalInvariant(FractionalKind::RhoStar,
                                  disjointEdges(m, 3)) == m);
    // isolated vertices are covered by their implicit singleton
    CHECK(fractionalInvariant(FractionalKind::RhoStar, Hypergraph(3, {})) ==
          3);
    // restricting to X covers less
    CHECK(fractionalInvariant(FractionalKind::RhoStar, kTriangle, 0b011) ==
          1);
    CHECK(fractionalInvariant(FractionalKind::RhoStar, kPath4, 0b1001) == 2);
}

TEST_CASE("integral invariants sandwich the fractional ones") {
    CHECK(integralInvariant(IntegralKind::Rho, kTriangle) == 2);
    CHECK(integralInvariant(IntegralKind::Alpha, kTriangle) == 1);
    CHECK(integralInvariant(IntegralKind::Alpha, kPath4) == 2);
    CHECK(integralInvariant(IntegralKind::Rho, kPath4) == 2);
    // one petal vertex per edge; the core blocks nothing extra
    CHECK(integralInvariant(IntegralKind::Alpha, sunflower(4, 1, 3)) == 3);
}

TEST_CASE("co-independent sets and sigma*") {
    // in b_k any two vertices share the edge, so the complement of a
    // co-independent set has at most one vertex
    std::vector<VertexSet> minimal = coindependentSets(bK(3), true);
    for (VertexSet x : minimal) CHECK(setSize(x) == 2);
    CHECK(minimal.size() == 3);

    CHECK(sigmaStar(bK(3)) == 1);
    CHECK(sigmaStar(kTriangle) == 1);
    for (int m = 1; m <= 4; ++m) {
        CHECK(sigmaStar(sunflower(4, 3, m)) == 1);
        CHECK(sigmaStar(sunflower(4, 1, m)) == m);
    }
    CHECK(sigmaStar(hNK(4, 2)) == 1);
    CHECK(sigmaStar(hNK(5, 3)) == 1);

    VertexSet argmin = 0;
    Rational value = sigmaStar(kTriangle, argmin);
    CHECK(value == 1);
    // the complement of the argmin is independent
    for (VertexSet e : kTriangle.edges())
        CHECK(setSize(e & ~argmin) <= 1);
}

TEST_CASE("exact treewidth") {
    CHECK(treewidthExact(kPath4) == 1);
    CHECK(treewidthExact(kTriangle) == 2);
    std::vector<VertexSet> k5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            k5.push_back((VertexSet{1} << u) | (VertexSet{1} << v));
    CHECK(treewidthExact(Hypergraph(5, k5)) == 4);
    // a single hyperedge turns into a clique of its size
    CHECK(treewidthExact(bK(4)) == 3);
    CHECK(treewidthExact(Hypergraph(1, {})) == 0);
    CHECK_THROWS_AS(treewidthExact(Hypergraph(16, {})), BudgetError);
}

TEST_CASE("decomposition validation catches every defect") {
    TreeDecomposition good;
    good.bags = {0b0111, 0b1110};
    good.treeEdges = {{0, 1}};
    CHECK(validateDecomposition(good, kPath4).empty());

    TreeDecomposition uncovered = good;
    uncovered.bags[1] = 0b0110;
    CHECK(!validateDecomposition(uncovered, kPath4).empty());

    TreeDecomposition disconnected;
    disconnected.bags = {0b0011, 0b0110, 0b1100};
    disconnected.treeEdges = {{0, 1}};  // node 2 unattached
    CHECK(!validateDecomposition(disconnected, kPath4).empty());

    // occurrence sets must be connected in the tree
    TreeDecomposition scattered;
    scattered.bags = {0b0011, 0b0110, 0b1011};
    scattered.treeEdges = {{0, 1}, {1, 2}};
    CHECK(!validateDecomposition(scattered, kPath4).empty());
}

TEST_CASE("co-independent decomposition reaches the promised width") {
    for (const Hypergraph& h :
         {bK(3), kTriangle, kPath4, sunflower(4, 1, 2), hNK(4, 2),
          groheMarx(2), disjointEdges(2, 3)}) {
        TreeDecomposition d = coindependentDecomposition(h);
        CHECK(validateDecomposition(d, h).empty());
        CHECK(decompositionWidth(d, h, WidthFunction::RhoStarOfBag) <=
              sigmaStar(h) + 1);
    }
}

TEST_CASE("decomposition serialization round trip") {
    TreeDecomposition d;
    d.bags = {0b0111, 0b1110};
    d.treeEdges = {{0, 1}};
    TreeDecomposition back = parseDecomposition(serializeDecomposition(d));
    CHECK(back.bags == d.bags);
    CHECK(back.treeEdges == d.treeEdges);
    CHECK_THROWS_AS(parseDecomposition("b 0 zero\n"), DomainError);
}
