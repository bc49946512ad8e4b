#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hgc/lp.hpp"

using namespace hgc;

namespace {

LPConstraint le(std::vector<Rational> c, Rational rhs) {
    return {std::move(c), Relation::LessEq, std::move(rhs)};
}
LPConstraint ge(std::vector<Rational> c, Rational rhs) {
    return {std::move(c), Relation::GreaterEq, std::move(rhs)};
}
LPConstraint eq(std::vector<Rational> c, Rational rhs) {
    return {std::move(c), Relation::Equal, std::move(rhs)};
}

}  // namespace

TEST_CASE("box maximum") {
    LPInstance p;
    p.maximize = true;
    p.objective = {1, 1};
    p.constraints = {le({1, 0}, 2), le({0, 1}, 3)};
    LPSolution s = solveLP(p);
    CHECK(s.value == 5);
    CHECK(s.witness == std::vector<Rational>{2, 3});
}

TEST_CASE("fractional vertex optimum") {
    // max x+y subject to 2x+y <= 2, x+2y <= 2; optimum at (2/3, 2/3)
    LPInstance p;
    p.maximize = true;
    p.objective = {1, 1};
    p.constraints = {le({2, 1}, 2), le({1, 2}, 2)};
    LPSolution s = solveLP(p);
    CHECK(s.value == Rational(4, 3));
    CHECK(s.witness[0] == Rational(2, 3));
    CHECK(s.witness[1] == Rational(2, 3));
}

TEST_CASE("minimization with covering constraints") {
    // min x+y subject to x+y >= 3, x >= 1
    LPInstance p;
    p.maximize = false;
    p.objective = {1, 1};
    p.constraints = {ge({1, 1}, 3), ge({1, 0}, 1)};
    LPSolution s = solveLP(p);
    CHECK(s.value == 3);
    CHECK(s.witness[0] + s.witness[1] == 3);
    CHECK(s.witness[0] >= 1);
}

TEST_CASE("equality constraints") {
    // max 2x+3y subject to x+y = 4, x-y = 2 -> x=3, y=1
    LPInstance p;
    p.maximize = true;
    p.objective = {2, 3};
    p.constraints = {eq({1, 1}, 4), eq({1, -1}, 2)};
    LPSolution s = solveLP(p);
    CHECK(s.value == 9);
    CHECK(s.witness == std::vector<Rational>{3, 1});
}

TEST_CASE("negative right-hand sides are normalized") {
    // x - y <= -1 with x, y >= 0: min y is 1 at x = 0
    LPInstance p;
    p.maximize = false;
    p.objective = {0, 1};
    p.constraints = {le({1, -1}, -1)};
    CHECK(solveLP(p).value == 1);
}

TEST_CASE("infeasible and unbounded programs are reported") {
    LPInstance infeasible;
    infeasible.maximize = true;
    infeasible.objective = {1};
    infeasible.constraints = {le({1}, 1), ge({1}, 2)};
    CHECK_THROWS_WITH_AS(solveLP(infeasible), doctest::Contains("infeasible"),
                         DomainError);

    LPInstance unbounded;
    unbounded.maximize = true;
    unbounded.objective = {1, 1};
    unbounded.constraints = {le({1, -1}, 1)};
    CHECK_THROWS_WITH_AS(solveLP(unbounded), doctest::Contains("unbounded"),
                         DomainError);
}

TEST_CASE("degenerate and redundant rows terminate") {
    LPInstance p;
    p.maximize = true;
    p.objective = {1, 1, 1};
    p.constraints = {le({1, 1, 1}, 1), le({1, 1, 1}, 1), eq({1, 0, 0}, 0),
                     le({0, 1, 0}, 1)};
    LPSolution s = solveLP(p);
    CHECK(s.value == 1);
    CHECK(s.witness[0] == 0);
}

TEST_CASE("redundant equalities stay consistent") {
    LPInstance p;
    p.maximize = false;
    p.objective = {1, 2};
    p.constraints = {eq({1, 1}, 2), eq({2, 2}, 4), ge({0, 1}, 0)};
    LPSolution s = solveLP(p);
    CHECK(s.value == 2);  // x = 2, y = 0
}
