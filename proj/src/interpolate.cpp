#include "hgc/interpolate.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgc/canonical.hpp"
#include "hgc/counting.hpp"
#include "hgc/tensor.hpp"

namespace hgc {

namespace {

/// Streams probe candidates in a deterministic order that depends only
/// on the support: the support itself, then pairwise tensors, then
/// enumerated hypergraphs by (vertices, edges); everything rank-
/// truncated to the support's maximum rank. Generation is staged so the
/// enumeration tail is only produced when the search is still rank-
/// deficient. The consumer returns false to stop.
void forEachProbeCandidate(const std::vector<Hypergraph>& support,
                           int probeVertexCap,
                           const std::function<bool(const Hypergraph&)>& fn) {
    int maxRank = 1;
    for (const auto& h : support) maxRank = std::max(maxRank, h.rank());

    for (const auto& h : support)
        if (!fn(h)) return;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i; j < support.size(); ++j) {
            if (support[i].numVertices() * support[j].numVertices() >
                kMaxVertices)
                continue;
            if (!fn(rankTruncate(
                    tensorProduct(support[i], support[j], maxRank), maxRank)))
                return;
        }
    for (int n = 1; n <= probeVertexCap; ++n) {
        bool stop = false;
        forEachEdgeSupergraph(Hypergraph(n, {}), [&](const Hypergraph& g) {
            if (!stop && !fn(rankTruncate(g, maxRank))) stop = true;
        });
        if (stop) return;
    }
}

}  // namespace

InterpolationResult dedekindInterpolate(const MotifOracle& oracle,
                                        int probeVertexCap) {
    std::size_t k = oracle.support.size();
    if (k == 0) return {};

    // greedily collect probes whose Hom-count rows are independent
    std::vector<Hypergraph> probes;
    std::vector<std::vector<Rational>> chosenRows;   // original rows
    std::vector<std::vector<Rational>> reducedRows;  // elimination basis
    std::vector<std::size_t> leadCols;
    forEachProbeCandidate(oracle.support, probeVertexCap,
                          [&](const Hypergraph& candidate) {
        std::vector<Rational> row(k);
        for (std::size_t i = 0; i < k; ++i)
            row[i] = Rational(countMorphisms(MorphismKind::Hom,
                                             oracle.support[i], candidate));
        std::vector<Rational> reduced = row;
        for (std::size_t r = 0; r < reducedRows.size(); ++r) {
            if (reduced[leadCols[r]] == 0) continue;
            Rational f = reduced[leadCols[r]] / reducedRows[r][leadCols[r]];
            for (std::size_t c = 0; c < k; ++c)
                reduced[c] -= f * reducedRows[r][c];
        }
        std::size_t lead = 0;
        while (lead < k && reduced[lead] == 0) ++lead;
        if (lead == k) return true;  // dependent on the rows so far
        probes.push_back(candidate);
        chosenRows.push_back(std::move(row));
        reducedRows.push_back(std::move(reduced));
        leadCols.push_back(lead);
        return probes.size() < k;
    });
    if (probes.size() < k)
        throw DomainError(
            "dedekind_interpolate: probe search exhausted at rank " +
            std::to_string(probes.size()) + " of " + std::to_string(k));

    // solve the square system M a = values exactly
    std::vector<std::vector<Rational>> m = chosenRows;
    std::vector<Rational> rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = oracle.eval(probes[j]);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && m[pivot][col] == 0) ++pivot;
        if (pivot == k)
            throw std::logic_error("dedekind_interpolate: singular system");
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rational p = m[col][col];
        for (auto& x : m[col]) x /= p;
        rhs[col] /= p;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < k; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }

    InterpolationResult result;
    result.coefficients = std::move(rhs);
    result.probes = std::move(probes);
    return result;
}

std::uint64_t homsFromPatternOracle(
    ExpansionKind kind, const Hypergraph& h, const Hypergraph& f,
    const std::function<std::uint64_t(const Hypergraph&)>& patternOracle,
    const Hypergraph& g) {
    if (kind != ExpansionKind::Sub && kind != ExpansionKind::IndSub)
        throw DomainError("homs_from_pattern_oracle supports sub and indsub");
    MotifParameter gamma = expansion(kind, h);
    Rational gammaF = gamma.coefficient(f);
    if (gammaF == 0)
        throw DomainError(
            "homs_from_pattern_oracle: target is outside the declared "
            "support");

    int maxRank = 1;
    for (const auto& term : gamma.terms())
        maxRank = std::max(maxRank, term.representative.rank());
    Hypergraph truncatedHost = rankTruncate(g, maxRank);

    MotifOracle oracle;
    for (const auto& term : gamma.terms())
        oracle.support.push_back(term.representative);
    oracle.eval = [&](const Hypergraph& probe) {
        return Rational(
            patternOracle(tensorProduct(truncatedHost, probe, maxRank)));
    };

    InterpolationResult fit = dedekindInterpolate(oracle);
    CanonicalKey target = canonicalKey(f);
    for (std::size_t i = 0; i < oracle.support.size(); ++i) {
        if (canonicalKey(oracle.support[i]) != target) continue;
        Rational homs = fit.coefficients[i] / gammaF;
        if (denominator(homs) != 1 || homs < 0)
            throw std::logic_error(
                "homs_from_pattern_oracle: recovered value is not a count");
        return numerator(homs).convert_to<std::uint64_t>();
    }
    throw std::logic_error("homs_from_pattern_oracle: support lookup failed");
}

}  // namespace hgc
