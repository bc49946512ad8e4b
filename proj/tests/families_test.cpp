#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/families.hpp"

using namespace hgc;

TEST_CASE("single vertex and b_k") {
    CHECK(singleVertex() == Hypergraph(1, {}));
    CHECK(bK(1) == Hypergraph(1, {0b1}));
    CHECK(bK(3) == Hypergraph(3, {0b111}));
    CHECK_THROWS_AS(bK(0), DomainError);
}

TEST_CASE("sunflowers share exactly the core") {
    Hypergraph s = sunflower(4, 1, 3);
    CHECK(s.numVertices() == 1 + 3 * 3);
    CHECK(s.numEdges() == 3);
    VertexSet common = s.vertexMask();
    for (VertexSet e : s.edges()) {
        CHECK(setSize(e) == 4);
        common &= e;
    }
    CHECK(setSize(common) == 1);

    // petals are disjoint outside the core
    Hypergraph wide = sunflower(4, 3, 2);
    CHECK(wide.numVertices() == 3 + 2 * 1);
    CHECK(setSize(wide.edges()[0] & wide.edges()[1]) == 3);

    CHECK_THROWS_AS(sunflower(2, 2, 1), DomainError);  // u must exceed c
}

TEST_CASE("h_nk is the k-clique plus the full edge") {
    Hypergraph h = hNK(4, 3);
    CHECK(h.numVertices() == 4);
    CHECK(h.numEdges() == 3 + 1);  // C(3,2) pairs and the full edge
    CHECK(h.hasEdge(0b1111));
    CHECK(h.hasEdge(0b011));
    CHECK(!h.hasEdge(0b1001));
    CHECK_THROWS_AS(hNK(2, 3), DomainError);
}

TEST_CASE("the projective family") {
    Hypergraph g = groheMarx(2);
    CHECK(g.numVertices() == 6);  // 2-subsets of a 4-element ground set
    CHECK(g.numEdges() == 4);
    for (VertexSet e : g.edges())
        CHECK(setSize(e) == 3);  // subsets through a fixed element
    // every vertex lies in exactly two edges
    for (int v = 0; v < 6; ++v) {
        int deg = 0;
        for (VertexSet e : g.edges()) deg += contains(e, v) ? 1 : 0;
        CHECK(deg == 2);
    }
}

TEST_CASE("disjoint edges and hats") {
    Hypergraph d = disjointEdges(3, 2);
    CHECK(d.numVertices() == 6);
    CHECK(d.numEdges() == 3);
    CHECK(setSize(d.edges()[0] & d.edges()[1]) == 0);

    Hypergraph path(3, {0b011, 0b110});
    Hypergraph hat = hatOfGraph(path);
    CHECK(hat.numEdges() == 3);
    CHECK(hat.hasEdge(0b111));
    CHECK_THROWS_AS(hatOfGraph(Hypergraph(3, {0b111})), DomainError);
}

TEST_CASE("generation by spec and name parsing") {
    FamilySpec spec;
    spec.family = parseFamily("b_k");
    spec.params = {2};
    CHECK(generate(spec) == bK(2));

    spec.family = parseFamily("sunflower");
    spec.params = {4, 1, 3};
    CHECK(generate(spec) == sunflower(4, 1, 3));

    CHECK(parseFamily("grohe_marx") == Family::GroheMarx);
    CHECK(parseFamily("hat_of_graph") == Family::HatOfGraph);
    CHECK_THROWS_AS(parseFamily("no_such_family"), DomainError);

    spec.family = Family::Bk;
    spec.params = {};
    CHECK_THROWS_AS(generate(spec), DomainError);
}
