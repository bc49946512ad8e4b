#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/canonical.hpp"
#include "hgc/counting.hpp"
#include "hgc/families.hpp"
#include "hgc/interpolate.hpp"

using namespace hgc;

namespace {

const Hypergraph kPath3(3, {0b011, 0b110});
const Hypergraph kTriangle(3, {0b011, 0b101, 0b110});

}  // namespace

TEST_CASE("recovers hidden coefficients of a hom combination") {
    MotifOracle oracle;
    oracle.support = {bK(1), bK(2), kPath3};
    oracle.eval = [&](const Hypergraph& g) {
        return Rational(3) * countMorphisms(MorphismKind::Hom, bK(1), g) +
               Rational(-5, 2) * countMorphisms(MorphismKind::Hom, bK(2), g) +
               Rational(7) * countMorphisms(MorphismKind::Hom, kPath3, g);
    };
    InterpolationResult fit = dedekindInterpolate(oracle);
    REQUIRE(fit.coefficients.size() == 3);
    CHECK(fit.coefficients[0] == 3);
    CHECK(fit.coefficients[1] == Rational(-5, 2));
    CHECK(fit.coefficients[2] == 7);
    CHECK(fit.probes.size() == 3);
}

TEST_CASE("probe choice is a function of the support alone") {
    MotifOracle first;
    first.support = {bK(1), bK(2)};
    first.eval = [&](const Hypergraph& g) {
        return Rational(countMorphisms(MorphismKind::Hom, bK(2), g));
    };
    MotifOracle second = first;
    second.eval = [&](const Hypergraph& g) {
        return Rational(42) * countMorphisms(MorphismKind::Hom, bK(1), g);
    };
    InterpolationResult a = dedekindInterpolate(first);
    InterpolationResult b = dedekindInterpolate(second);
    REQUIRE(a.probes.size() == b.probes.size());
    for (std::size_t i = 0; i < a.probes.size(); ++i)
        CHECK(canonicalKey(a.probes[i]) == canonicalKey(b.probes[i]));
    CHECK(a.coefficients == std::vector<Rational>{0, 1});
    CHECK(b.coefficients == std::vector<Rational>{42, 0});
}

TEST_CASE("an empty support is a no-op") {
    MotifOracle oracle;
    InterpolationResult fit = dedekindInterpolate(oracle);
    CHECK(fit.coefficients.empty());
    CHECK(fit.probes.empty());
}

TEST_CASE("hom counts from a subgraph-count oracle") {
    for (const auto& h : {bK(2), kPath3}) {
        MotifParameter gamma = expansion(ExpansionKind::Sub, h);
        for (const auto& g : {kTriangle, kPath3, bK(3)})
            for (const auto& term : gamma.terms())
                CHECK(homsFromPatternOracle(
                          ExpansionKind::Sub, h, term.representative,
                          [&](const Hypergraph& host) {
                              return countPatterns(PatternKind::Sub, h, host);
                          },
                          g) ==
                      countMorphisms(MorphismKind::Hom, term.representative,
                                     g));
    }
}

TEST_CASE("hom counts from an induced-count oracle") {
    Hypergraph h = bK(2);
    Hypergraph g = kTriangle;
    MotifParameter gamma = expansion(ExpansionKind::IndSub, h);
    for (const auto& term : gamma.terms())
        CHECK(homsFromPatternOracle(
                  ExpansionKind::IndSub, h, term.representative,
                  [&](const Hypergraph& host) {
                      return countPatterns(PatternKind::IndSub, h, host);
                  },
                  g) ==
              countMorphisms(MorphismKind::Hom, term.representative, g));
}

TEST_CASE("targets outside the support are rejected") {
    CHECK_THROWS_AS(homsFromPatternOracle(
                        ExpansionKind::Sub, bK(2), kTriangle,
                        [](const Hypergraph&) { return std::uint64_t{0}; },
                        kTriangle),
                    DomainError);
    CHECK_THROWS_AS(homsFromPatternOracle(
                        ExpansionKind::TrimSub, bK(2), bK(2),
                        [](const Hypergraph&) { return std::uint64_t{0}; },
                        kTriangle),
                    DomainError);
}
