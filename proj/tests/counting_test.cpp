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

TEST_CASE("morphism counts on anchored pairs") {
    // the only edge of b_3 has size 3, so no plain hom from b_2 exists,
    // while every map satisfies the trimmed condition
    CHECK(countMorphisms(MorphismKind::Hom, bK(2), bK(3)) == 0);
    CHECK(countMorphisms(MorphismKind::TrimHom, bK(2), bK(3)) == 9);
    CHECK(countMorphisms(MorphismKind::TrimEmb, bK(2), bK(3)) == 6);

    CHECK(countMorphisms(MorphismKind::Hom, bK(2), kTriangle) == 6);
    CHECK(countMorphisms(MorphismKind::Emb, bK(2), kTriangle) == 6);
    CHECK(countMorphisms(MorphismKind::Hom, kTriangle, kTriangle) == 6);
    CHECK(countMorphisms(MorphismKind::Hom, bK(2), kPath3) == 4);
    CHECK(countMorphisms(MorphismKind::Emb, bK(2), kPath3) == 4);
    // centre to 0/1/2 leaves 1/4/1 choices for the endpoints
    CHECK(countMorphisms(MorphismKind::Hom, kPath3, kPath3) == 6);
    CHECK(countMorphisms(MorphismKind::Emb, kPath3, kPath3) == 2);

    // strong embeddings reflect edges
    CHECK(countMorphisms(MorphismKind::StrEmb, kPath3, kTriangle) == 0);
    CHECK(countMorphisms(MorphismKind::Emb, kPath3, kTriangle) == 6);
}

TEST_CASE("pattern counts on anchored pairs") {
    CHECK(countPatterns(PatternKind::Sub, bK(2), kPath3) == 2);
    CHECK(countPatterns(PatternKind::Sub, bK(2), kTriangle) == 3);
    CHECK(countPatterns(PatternKind::IndSub, bK(2), kTriangle) == 3);
    CHECK(countPatterns(PatternKind::Sub, kPath3, kTriangle) == 3);
    CHECK(countPatterns(PatternKind::IndSub, kPath3, kTriangle) == 0);
    // any two vertices of b_3 trim to b_2
    CHECK(countPatterns(PatternKind::TrimSub, bK(2), bK(3)) == 3);
    CHECK(countPatterns(PatternKind::IndTrimSub, bK(2), bK(3)) == 3);
    CHECK(countPatterns(PatternKind::IndTrimSub, bK(2), kTriangle) == 0);
}

TEST_CASE("identities tie morphisms to patterns") {
    std::vector<Hypergraph> patterns = {bK(2), kPath3, kTriangle, bK(3),
                                        Hypergraph(2, {0b01, 0b11})};
    std::vector<Hypergraph> hosts = {kTriangle, kPath3, bK(3),
                                     Hypergraph(4, {0b0011, 0b1100}),
                                     Hypergraph(3, {0b001, 0b011, 0b111})};
    for (const auto& h : patterns) {
        std::uint64_t aut = countAutomorphisms(h);
        for (const auto& g : hosts) {
            CHECK(countMorphisms(MorphismKind::Emb, h, g) ==
                  aut * countPatterns(PatternKind::Sub, h, g));
            CHECK(countMorphisms(MorphismKind::StrEmb, h, g) ==
                  aut * countPatterns(PatternKind::IndSub, h, g));
            CHECK(countMorphisms(MorphismKind::TrimEmb, h, g) ==
                  aut * countPatterns(PatternKind::TrimSub, h, g));
            CHECK(countMorphisms(MorphismKind::StrTrimEmb, h, g) ==
                  aut * countPatterns(PatternKind::IndTrimSub, h, g));
        }
    }
}

TEST_CASE("colour-prescribed counting through the tensor host") {
    std::vector<Hypergraph> patterns = {bK(2), kPath3, bK(3)};
    std::vector<Hypergraph> hosts = {kTriangle, kPath3, bK(3),
                                     Hypergraph(3, {0b001, 0b011, 0b111})};
    for (const auto& h : patterns)
        for (const auto& g : hosts) {
            ColoredHost host = colorHostViaTensor(h, g);
            CHECK(host.colouringIsHom);
            std::uint64_t cp =
                countColored(ColorMode::Prescribed, false, h, host);
            CHECK(cp == countMorphisms(MorphismKind::Hom, h, g));
            // colourful counts carry one automorphism factor
            std::uint64_t cf =
                countColored(ColorMode::Colorful, false, h, host);
            CHECK(cf == countAutomorphisms(h) * cp);
            CHECK(cfViaInclusionExclusion(h, host) == cf);
        }
}

TEST_CASE("colour validation") {
    CHECK_THROWS_AS(makeColoredHost(kPath3, {0, 1}, bK(2), false),
                    DomainError);
    CHECK_THROWS_AS(makeColoredHost(kPath3, {0, 1, 5}, bK(2), false),
                    DomainError);
    // the identity colouring of the path into the triangle-free path is
    // a homomorphism; into b_2 a 3-vertex host cannot even be coloured
    ColoredHost ok = makeColoredHost(kPath3, {0, 1, 2}, kPath3, true);
    CHECK(ok.colouringIsHom);
    CHECK_THROWS_AS(makeColoredHost(kTriangle, {0, 1, 2}, kPath3, true),
                    DomainError);
}

TEST_CASE("surjective counts split plain homs by image") {
    std::vector<Hypergraph> patterns = {bK(2), kPath3, kTriangle};
    std::vector<Hypergraph> hosts = {kPath3, kTriangle, bK(3),
                                     Hypergraph(2, {0b01, 0b11})};
    for (const auto& h : patterns)
        for (const auto& g : hosts) {
            std::uint64_t total = 0;
            for (VertexSet w = 1; w <= g.vertexMask(); ++w)
                total += countSurjective(MorphismKind::Hom, h,
                                         derive(g, w, DeriveMode::Induced));
            CHECK(total == countMorphisms(MorphismKind::Hom, h, g));
        }
    // trimmed surjective counting is cross-checked internally
    CHECK(countSurjective(MorphismKind::TrimHom, bK(2), bK(3)) == 0);
    CHECK(countSurjective(MorphismKind::TrimHom, bK(3), bK(3)) == 6);
    CHECK_THROWS_AS(countSurjective(MorphismKind::Emb, bK(2), bK(3)),
                    DomainError);
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(countMorphisms(MorphismKind::Hom, bK(3), kTriangle, 10),
                    BudgetError);
}
