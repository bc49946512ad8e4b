#include "hgc/basis.hpp"

#include <sstream>

#include "hgc/partition.hpp"

namespace hgc {

void MotifParameter::add(const Hypergraph& h, const Rational& coeff) {
    if (coeff == 0) return;
    CanonicalKey key = canonicalKey(h);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{h, coeff});
        return;
    }
    it->second.coeff += coeff;
    if (it->second.coeff == 0) terms_.erase(it);
}

Rational MotifParameter::coefficient(const Hypergraph& h) const {
    auto it = terms_.find(canonicalKey(h));
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

std::vector<MotifParameter::Term> MotifParameter::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, term] : terms_) out.push_back(term);
    return out;
}

MorphismKind expansionBasis(ExpansionKind kind) {
    switch (kind) {
        case ExpansionKind::Emb:
        case ExpansionKind::StrEmb:
        case ExpansionKind::Sub:
        case ExpansionKind::IndSub:
            return MorphismKind::Hom;
        default:
            return MorphismKind::TrimHom;
    }
}

namespace {

bool isStrongKind(ExpansionKind kind) {
    return kind == ExpansionKind::StrEmb || kind == ExpansionKind::IndSub ||
           kind == ExpansionKind::TrimStrEmb ||
           kind == ExpansionKind::TrimIndSub;
}

bool isSubKind(ExpansionKind kind) {
    return kind == ExpansionKind::Sub || kind == ExpansionKind::IndSub ||
           kind == ExpansionKind::TrimSub || kind == ExpansionKind::TrimIndSub;
}

bool isTrimmedKind(ExpansionKind kind) {
    return expansionBasis(kind) == MorphismKind::TrimHom;
}

/// Moebius-weighted quotients of h, scaled by `scale`, accumulated
/// into gamma.
void addQuotientExpansion(MotifParameter& gamma, const Hypergraph& h,
                          const Rational& scale) {
    forEachPartition(h.numVertices(), [&](const Partition& tau) {
        gamma.add(quotient(h, tau), scale * mobiusOfPartition(tau));
    });
}

MotifParameter closedFormExpansion(ExpansionKind kind, const Hypergraph& h,
                                   const ExpansionOptions& opts) {
    if (h.numVertices() > opts.vertexCap)
        throw BudgetError("expansion: vertex cap " +
                          std::to_string(opts.vertexCap) + " exceeded");
    Rational scale(1);
    if (isSubKind(kind)) scale /= Rational(countAutomorphisms(h));

    MotifParameter gamma;
    if (!isStrongKind(kind)) {
        addQuotientExpansion(gamma, h, scale);
        return gamma;
    }
    if (static_cast<int>(nonEdges(h).size()) > opts.nonEdgeCap)
        throw BudgetError("expansion: non-edge cap exceeded");
    forEachEdgeSupergraph(h, [&](const Hypergraph& super) {
        int added = super.numEdges() - h.numEdges();
        Rational sign = added % 2 == 0 ? scale : -scale;
        addQuotientExpansion(gamma, super, sign);
    });
    return gamma;
}

std::vector<Hypergraph> probeHosts(int vertexCap) {
    std::vector<Hypergraph> out;
    out.emplace_back(0, std::vector<VertexSet>{});
    for (int n = 1; n <= vertexCap; ++n)
        forEachEdgeSupergraph(Hypergraph(n, {}), [&](const Hypergraph& g) {
            out.push_back(g);
        });
    return out;
}

}  // namespace

Rational directExpansionValue(ExpansionKind kind, const Hypergraph& h,
                              const Hypergraph& g) {
    switch (kind) {
        case ExpansionKind::Emb:
            return Rational(countMorphisms(MorphismKind::Emb, h, g));
        case ExpansionKind::StrEmb:
            return Rational(countMorphisms(MorphismKind::StrEmb, h, g));
        case ExpansionKind::Sub:
            return Rational(countPatterns(PatternKind::Sub, h, g));
        case ExpansionKind::IndSub:
            return Rational(countPatterns(PatternKind::IndSub, h, g));
        case ExpansionKind::TrimEmb:
            return Rational(countMorphisms(MorphismKind::TrimEmb, h, g));
        case ExpansionKind::TrimStrEmb:
            return Rational(countMorphisms(MorphismKind::StrTrimEmb, h, g));
        case ExpansionKind::TrimSub:
            return Rational(countPatterns(PatternKind::TrimSub, h, g));
        case ExpansionKind::TrimIndSub:
            return Rational(countPatterns(PatternKind::IndTrimSub, h, g));
    }
    throw DomainError("unknown expansion kind");
}

Rational evaluate(const MotifParameter& gamma, const Hypergraph& g,
                  MorphismKind basis, std::uint64_t budget) {
    Rational total(0);
    for (const auto& term : gamma.terms())
        total += term.coeff *
                 Rational(countMorphisms(basis, term.representative, g,
                                         budget));
    return total;
}

MotifParameter fitExpansion(ExpansionKind kind, const Hypergraph& h,
                            const std::vector<Hypergraph>& candidates) {
    // group candidates to isomorphism types
    MotifParameter dedup;
    for (const auto& f : candidates) dedup.add(f, Rational(1));
    std::vector<Hypergraph> support;
    for (const auto& term : dedup.terms())
        support.push_back(term.representative);
    std::size_t k = support.size();
    if (k == 0) throw DomainError("fit_expansion: empty candidate support");

    MorphismKind basis = expansionBasis(kind);
    std::vector<Hypergraph> probes = probeHosts(3);

    // augmented matrix rows [counts | direct value]
    std::vector<std::vector<Rational>> rows;
    rows.reserve(probes.size());
    for (const auto& g : probes) {
        std::vector<Rational> row(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i)
            row[i] = Rational(countMorphisms(basis, support[i], g));
        row[k] = directExpansionValue(kind, h, g);
        rows.push_back(std::move(row));
    }

    // exact Gaussian elimination
    std::size_t rank = 0;
    std::vector<std::size_t> pivotCol;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        pivotCol.push_back(col);
        std::swap(rows[rank], rows[pivot]);
        Rational p = rows[rank][col];
        for (auto& x : rows[rank]) x /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = 0; c <= k; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][k] != 0)
            throw DomainError(
                "fit_expansion: inconsistent system; the candidate support "
                "cannot express the counting function");
    if (rank < k)
        throw DomainError(
            "fit_expansion: underdetermined after probe exhaustion (rank " +
            std::to_string(rank) + " of " + std::to_string(k) + ")");

    // after full reduction, row r solves the variable of its pivot column
    MotifParameter gamma;
    for (std::size_t r = 0; r < rank; ++r)
        gamma.add(support[pivotCol[r]], rows[r][k]);
    return gamma;
}

MotifParameter expansion(ExpansionKind kind, const Hypergraph& h,
                         const ExpansionOptions& opts) {
    MotifParameter gamma = closedFormExpansion(kind, h, opts);
    if (!isTrimmedKind(kind) || !opts.validateTrimmed) return gamma;

    // the trimmed formulas are validated against direct counts on all
    // hosts with up to 3 vertices; if they ever disagree, the fitted
    // coefficients replace the closed form
    bool ok = true;
    for (const auto& g : probeHosts(3))
        if (evaluate(gamma, g, MorphismKind::TrimHom) !=
            directExpansionValue(kind, h, g)) {
            ok = false;
            break;
        }
    if (ok) return gamma;

    std::vector<Hypergraph> candidates;
    for (const auto& term : gamma.terms())
        candidates.push_back(term.representative);
    MotifParameter fitted = fitExpansion(kind, h, candidates);
    if (opts.log)
        *opts.log += "trimmed expansion mismatch; fitted coefficients used\n";
    return fitted;
}

std::string serializeMotifParameter(const MotifParameter& gamma) {
    std::ostringstream out;
    for (const auto& term : gamma.terms())
        out << "g " << formatRational(term.coeff) << ' '
            << serializeInline(term.representative) << '\n';
    return out.str();
}

MotifParameter parseMotifParameter(const std::string& text) {
    MotifParameter gamma;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag != "g")
            throw DomainError("line " + std::to_string(lineNo) +
                              ": expected 'g <rational> <hypergraph>'");
        std::string value;
        if (!(ls >> value))
            throw DomainError("line " + std::to_string(lineNo) +
                              ": missing coefficient");
        std::string rest;
        std::getline(ls, rest);
        gamma.add(parseInline(rest), parseRational(value));
    }
    return gamma;
}

}  // namespace hgc
