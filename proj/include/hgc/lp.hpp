#pragma once

#include <vector>

#include "hgc/errors.hpp"
#include "hgc/rational.hpp"

namespace hgc {

enum class Relation { LessEq, GreaterEq, Equal };

struct LPConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::LessEq;
    Rational rhs;
};

/// Linear program over non-negative variables, exact rational data.
struct LPInstance {
    bool maximize = false;
    std::vector<Rational> objective;
    std::vector<LPConstraint> constraints;
};

struct LPSolution {
    Rational value;
    std::vector<Rational> witness;  // one value per variable
};

/// Two-phase simplex with Bland's pivoting rule; terminates on every
/// input and returns an exact optimum with an exact feasible witness.
/// Throws DomainError("infeasible") / DomainError("unbounded").
LPSolution solveLP(const LPInstance& p);

}  // namespace hgc
