#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/basis.hpp"
#include "hgc/families.hpp"

using namespace hgc;

namespace {

const Hypergraph kPath3(3, {0b011, 0b110});
const Hypergraph kLoop(1, {0b1});

std::vector<Hypergraph> smallHosts() {
    std::vector<Hypergraph> hosts;
    for (int n = 1; n <= 3; ++n)
        forEachEdgeSupergraph(Hypergraph(n, {}),
                              [&](const Hypergraph& g) { hosts.push_back(g); });
    return hosts;
}

}  // namespace

TEST_CASE("the embedding expansion of a single edge") {
    MotifParameter gamma = expansion(ExpansionKind::Emb, bK(2));
    CHECK(gamma.supportSize() == 2);
    CHECK(gamma.coefficient(bK(2)) == 1);
    // the merged quotient is a looped single vertex, Moebius value -1
    CHECK(gamma.coefficient(kLoop) == -1);
}

TEST_CASE("sub expansions divide by the automorphism count") {
    MotifParameter gamma = expansion(ExpansionKind::Sub, bK(2));
    CHECK(gamma.coefficient(bK(2)) == Rational(1, 2));
    CHECK(gamma.coefficient(kLoop) == Rational(-1, 2));

    MotifParameter path = expansion(ExpansionKind::Sub, kPath3);
    CHECK(path.coefficient(kPath3) == Rational(1, 2));
}

TEST_CASE("every expansion evaluates to the direct count") {
    const ExpansionKind kinds[] = {
        ExpansionKind::Emb,     ExpansionKind::StrEmb,
        ExpansionKind::Sub,     ExpansionKind::IndSub,
        ExpansionKind::TrimEmb, ExpansionKind::TrimStrEmb,
        ExpansionKind::TrimSub, ExpansionKind::TrimIndSub,
    };
    std::vector<Hypergraph> hosts = smallHosts();
    for (const Hypergraph& h : {bK(2), kPath3, bK(3),
                                Hypergraph(2, {0b01, 0b11})}) {
        for (ExpansionKind kind : kinds) {
            MotifParameter gamma = expansion(kind, h);
            MorphismKind basis = expansionBasis(kind);
            for (const auto& g : hosts)
                CHECK(evaluate(gamma, g, basis) ==
                      directExpansionValue(kind, h, g));
        }
    }
}

TEST_CASE("fitting recovers the closed form") {
    for (const Hypergraph& h : {bK(2), kPath3}) {
        for (ExpansionKind kind :
             {ExpansionKind::Emb, ExpansionKind::Sub, ExpansionKind::IndSub}) {
            MotifParameter closed = expansion(kind, h);
            std::vector<Hypergraph> candidates;
            for (const auto& term : closed.terms())
                candidates.push_back(term.representative);
            MotifParameter fitted = fitExpansion(kind, h, candidates);
            CHECK(serializeMotifParameter(fitted) ==
                  serializeMotifParameter(closed));
        }
    }
}

TEST_CASE("fitting rejects an inconsistent support") {
    // sub counts of a path cannot be written over the path alone
    CHECK_THROWS_AS(fitExpansion(ExpansionKind::Sub, kPath3, {kPath3}),
                    DomainError);
}

TEST_CASE("parameter arithmetic and serialization") {
    MotifParameter gamma;
    gamma.add(bK(2), Rational(1, 2));
    gamma.add(bK(2), Rational(1, 2));
    gamma.add(kLoop, Rational(1));
    gamma.add(kLoop, Rational(-1));  // cancels to zero and is dropped
    CHECK(gamma.supportSize() == 1);
    CHECK(gamma.coefficient(bK(2)) == 1);
    CHECK(gamma.coefficient(kLoop) == 0);

    gamma.add(kPath3, Rational(-3, 4));
    MotifParameter back = parseMotifParameter(serializeMotifParameter(gamma));
    CHECK(back.coefficient(bK(2)) == 1);
    CHECK(back.coefficient(kPath3) == Rational(-3, 4));
    CHECK_THROWS_AS(parseMotifParameter("g notanumber p hg 1 0\n"),
                    DomainError);
}
