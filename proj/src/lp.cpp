#include "hgc/lp.hpp"

namespace hgc {

namespace {

/// Dense simplex tableau. Rows 0..m-1 are constraints (all equalities
/// after slack introduction, rhs >= 0); the last column is the rhs.
struct Tableau {
    int rows = 0;
    int cols = 0;  // structural + slack + artificial columns
    std::vector<std::vector<Rational>> a;  // rows x (cols + 1)
    std::vector<int> basis;                // basic column per row

    Rational& at(int r, int c) { return a[r][c]; }
    Rational& rhs(int r) { return a[r][cols]; }

    void pivot(int pr, int pc) {
        Rational p = a[pr][pc];
        for (int c = 0; c <= cols; ++c) a[pr][c] /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || a[r][pc] == 0) continue;
            Rational f = a[r][pc];
            for (int c = 0; c <= cols; ++c) a[r][c] -= f * a[pr][c];
        }
        basis[pr] = pc;
    }
};

/// Maximizes obj over the tableau with Bland's rule, allowing only
/// columns below colLimit to enter the basis (phase 2 locks out the
/// artificials this way). Returns false on unboundedness.
bool simplexMax(Tableau& t, const std::vector<Rational>& obj, int colLimit) {
    while (true) {
        int enter = -1;
        for (int c = 0; c < colLimit && enter < 0; ++c) {
            // reduced cost c_j - c_B . B^-1 A_j
            Rational rc = obj[c];
            for (int r = 0; r < t.rows; ++r) rc -= obj[t.basis[r]] * t.a[r][c];
            if (rc > 0) enter = c;  // Bland: smallest improving index
        }
        if (enter < 0) return true;

        int leave = -1;
        Rational bestRatio;
        for (int r = 0; r < t.rows; ++r) {
            if (t.a[r][enter] <= 0) continue;
            Rational ratio = t.rhs(r) / t.a[r][enter];
            if (leave < 0 || ratio < bestRatio ||
                (ratio == bestRatio && t.basis[r] < t.basis[leave])) {
                leave = r;
                bestRatio = ratio;
            }
        }
        if (leave < 0) return false;
        t.pivot(leave, enter);
    }
}

}  // namespace

LPSolution solveLP(const LPInstance& p) {
    int n = static_cast<int>(p.objective.size());
    int m = static_cast<int>(p.constraints.size());
    for (const auto& c : p.constraints)
        if (static_cast<int>(c.coeffs.size()) != n)
            throw DomainError("lp: constraint width mismatch");

    // count slack columns
    int slacks = 0;
    for (const auto& c : p.constraints)
        if (c.relation != Relation::Equal) ++slacks;

    Tableau t;
    t.rows = m;
    t.cols = n + slacks + m;  // one artificial per row, unused ones ignored
    t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
    t.basis.assign(m, -1);

    int slackCol = n;
    int artBase = n + slacks;
    std::vector<bool> isArtificial(t.cols, false);
    for (int r = 0; r < m; ++r) {
        const auto& con = p.constraints[r];
        Rational sign(1);
        if (con.rhs < 0) sign = -1;  // normalize to rhs >= 0
        for (int c = 0; c < n; ++c) t.at(r, c) = sign * con.coeffs[c];
        t.rhs(r) = sign * con.rhs;
        Relation rel = con.relation;
        if (sign < 0 && rel != Relation::Equal)
            rel = rel == Relation::LessEq ? Relation::GreaterEq
                                          : Relation::LessEq;
        if (rel != Relation::Equal) {
            t.at(r, slackCol) = rel == Relation::LessEq ? 1 : -1;
            if (rel == Relation::LessEq) t.basis[r] = slackCol;
            ++slackCol;
        }
        if (t.basis[r] < 0) {
            int art = artBase + r;
            t.at(r, art) = 1;
            t.basis[r] = art;
            isArtificial[art] = true;
        }
    }

    // phase 1: drive the artificials to zero
    bool anyArtificial = false;
    for (int r = 0; r < m; ++r) anyArtificial |= isArtificial[t.basis[r]];
    if (anyArtificial) {
        std::vector<Rational> phase1(t.cols, Rational(0));
        for (int c = 0; c < t.cols; ++c)
            if (isArtificial[c]) phase1[c] = -1;
        if (!simplexMax(t, phase1, t.cols))
            throw DomainError("lp: infeasible");
        Rational artSum(0);
        for (int r = 0; r < t.rows; ++r)
            if (isArtificial[t.basis[r]]) artSum += t.rhs(r);
        if (artSum != 0) throw DomainError("lp: infeasible");
        // pivot remaining degenerate artificials out of the basis
        for (int r = 0; r < t.rows; ++r) {
            if (!isArtificial[t.basis[r]]) continue;
            int pc = -1;
            for (int c = 0; c < artBase; ++c)
                if (t.a[r][c] != 0) {
                    pc = c;
                    break;
                }
            if (pc >= 0) t.pivot(r, pc);
            // a fully zero row is redundant; its artificial stays basic
            // at value zero and never re-enters (phase-2 cost zero)
        }
    }

    // phase 2
    std::vector<Rational> obj(t.cols, Rational(0));
    for (int c = 0; c < n; ++c)
        obj[c] = p.maximize ? p.objective[c] : -p.objective[c];
    if (!simplexMax(t, obj, artBase)) throw DomainError("lp: unbounded");

    LPSolution sol;
    sol.witness.assign(n, Rational(0));
    for (int r = 0; r < t.rows; ++r)
        if (t.basis[r] < n) sol.witness[t.basis[r]] = t.rhs(r);
    Rational value(0);
    for (int c = 0; c < n; ++c) value += p.objective[c] * sol.witness[c];
    sol.value = value;
    return sol;
}

}  // namespace hgc
