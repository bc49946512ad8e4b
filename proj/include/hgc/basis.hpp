#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgc/canonical.hpp"
#include "hgc/counting.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/rational.hpp"

namespace hgc {

/// A finitely supported rational combination of hypergraph isomorphism
/// types. Zero coefficients are never stored; support iteration order is
/// the canonical-key order, so serialization is deterministic.
class MotifParameter {
public:
    void add(const Hypergraph& h, const Rational& coeff);
    Rational coefficient(const Hypergraph& h) const;

    struct Term {
        Hypergraph representative;
        Rational coeff;
    };
    std::vector<Term> terms() const;
    std::size_t supportSize() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

private:
    std::map<CanonicalKey, Term> terms_;
};

enum class ExpansionKind {
    Emb,
    StrEmb,
    Sub,
    IndSub,
    TrimEmb,
    TrimStrEmb,
    TrimSub,
    TrimIndSub,
};

/// The basis a kind expands over: Hom for the plain kinds, TrimHom for
/// the trimmed ones.
MorphismKind expansionBasis(ExpansionKind kind);

struct ExpansionOptions {
    int vertexCap = 5;
    int nonEdgeCap = 20;       // strong kinds sum over non-edge subsets
    bool validateTrimmed = true;
    std::string* log = nullptr;  // receives a note when a fit overrides
};

/// Expands a counting function into the basis: a parameter gamma with
/// f_kind(H, G) = sum over F of gamma(F) * count(basis, F, G) for all G.
/// Emb sums the partition-lattice Moebius values over quotients; the
/// strong kinds add inclusion-exclusion over non-edge subsets; sub-style
/// kinds divide by Aut(H). The trimmed kinds reuse the same formulas over
/// the TrimHom basis and are cross-validated against fitted coefficients
/// on small probe hosts; on mismatch the fitted coefficients win.
MotifParameter expansion(ExpansionKind kind, const Hypergraph& h,
                         const ExpansionOptions& opts = {});

/// Evaluates the combination against a host with exact arithmetic.
Rational evaluate(const MotifParameter& gamma, const Hypergraph& g,
                  MorphismKind basis,
                  std::uint64_t budget = kDefaultMapBudget);

/// Recovers the unique coefficients over the candidate support from the
/// exact linear system against a probe family (all hypergraphs on up to
/// 3 vertices). Throws DomainError when the system is underdetermined
/// after probe exhaustion or inconsistent.
MotifParameter fitExpansion(ExpansionKind kind, const Hypergraph& h,
                            const std::vector<Hypergraph>& candidates);

/// Direct count of the expanded function, used as ground truth by the
/// fit and the validation pass.
Rational directExpansionValue(ExpansionKind kind, const Hypergraph& h,
                              const Hypergraph& g);

/// Lines "g <rational> <inline hypergraph>".
std::string serializeMotifParameter(const MotifParameter& gamma);
MotifParameter parseMotifParameter(const std::string& text);

}  // namespace hgc
