#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/canonical.hpp"
#include "hgc/counting.hpp"
#include "hgc/families.hpp"
#include "hgc/tensor.hpp"

using namespace hgc;

namespace {

const Hypergraph kTriangle(3, {0b011, 0b101, 0b110});
const Hypergraph kPath3(3, {0b011, 0b110});

}  // namespace

TEST_CASE("pair indexing is row-major") {
    VertexPairIndex idx{3};
    CHECK(idx.pairToVertex(2, 1) == 7);
    CHECK(idx.firstOf(7) == 2);
    CHECK(idx.secondOf(7) == 1);
}

TEST_CASE("the product of two single edges") {
    Hypergraph t = tensorProduct(bK(2), bK(2));
    CHECK(t.numVertices() == 4);
    // subsets of the 2x2 grid covering both rows and both columns
    CHECK(t.numEdges() == 7);
}

TEST_CASE("hom counts are multiplicative") {
    std::vector<Hypergraph> patterns = {bK(1), bK(2), kPath3, kTriangle,
                                        bK(3)};
    std::vector<std::pair<Hypergraph, Hypergraph>> factorPairs = {
        {kTriangle, kPath3},
        {bK(2), kTriangle},
        {bK(3), bK(3)},
        {Hypergraph(2, {0b01, 0b11}), kPath3},
    };
    for (const auto& [g, h] : factorPairs) {
        Hypergraph product = tensorProduct(g, h);
        for (const auto& f : patterns)
            CHECK(countMorphisms(MorphismKind::Hom, f, product) ==
                  countMorphisms(MorphismKind::Hom, f, g) *
                      countMorphisms(MorphismKind::Hom, f, h));
    }
}

TEST_CASE("associativity up to isomorphism") {
    Hypergraph loop(1, {0b1});
    Hypergraph edge = bK(2);
    for (const auto& a : {loop, edge})
        for (const auto& b : {loop, edge})
            CHECK(canonicalKey(tensorProduct(tensorProduct(a, b), edge)) ==
                  canonicalKey(tensorProduct(a, tensorProduct(b, edge))));
}

TEST_CASE("edge count bound") {
    for (const auto& g : {kTriangle, bK(3), kPath3}) {
        Hypergraph t = tensorProduct(g, g);
        int r = g.rank();
        CHECK(static_cast<std::uint64_t>(t.numEdges()) <=
              (std::uint64_t{1} << (r * r)) * g.numEdges() * g.numEdges());
    }
}

TEST_CASE("rank budget and vertex cap") {
    CHECK_THROWS_AS(tensorProduct(bK(3), bK(3), 2), BudgetError);
    CHECK_THROWS_AS(tensorProduct(Hypergraph(9, {}), Hypergraph(9, {})),
                    DomainError);
}

TEST_CASE("rank truncation preserves low-rank hom counts") {
    Hypergraph mixed(4, {0b0011, 0b0111, 0b1111});
    Hypergraph truncated = rankTruncate(mixed, 2);
    CHECK(truncated.numEdges() == 1);
    for (const auto& f : {bK(1), bK(2), kPath3})
        CHECK(countMorphisms(MorphismKind::Hom, f, truncated) ==
              countMorphisms(MorphismKind::Hom, f, mixed));
    CHECK_THROWS_AS(rankTruncate(mixed, 0), DomainError);
}

TEST_CASE("coloured host via the tensor construction") {
    for (const auto& h : {bK(2), kPath3})
        for (const auto& g : {kTriangle, kPath3, bK(3)}) {
            ColoredHost host = colorHostViaTensor(h, g);
            CHECK(host.colouringIsHom);
            for (std::size_t v = 0; v < host.colour.size(); ++v)
                CHECK(host.colour[v] ==
                      static_cast<int>(v) % h.numVertices());
            CHECK(countColored(ColorMode::Prescribed, false, h, host) ==
                  countMorphisms(MorphismKind::Hom, h, g));
        }
}
