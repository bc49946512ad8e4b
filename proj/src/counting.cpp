#include "hgc/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "hgc/canonical.hpp"

namespace hgc {

namespace {

void checkMapBudget(int nH, int nG, std::uint64_t budget, const char* what) {
    // number of maps is nG^nH; test without overflow
    std::uint64_t maps = 1;
    for (int i = 0; i < nH; ++i) {
        if (nG != 0 && maps > budget / nG)
            throw BudgetError(std::string(what) + ": map enumeration budget " +
                              std::to_string(budget) + " exceeded");
        maps *= static_cast<std::uint64_t>(nG);
    }
    if (maps > budget)
        throw BudgetError(std::string(what) + ": map enumeration budget " +
                          std::to_string(budget) + " exceeded");
}

VertexSet mapSet(VertexSet s, const std::vector<int>& phi) {
    VertexSet out = 0;
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (contains(s, v)) out |= VertexSet{1} << phi[v];
    return out;
}

bool isInjective(const std::vector<int>& phi, VertexSet img) {
    return setSize(img) == static_cast<int>(phi.size());
}

bool trimEdgeOk(VertexSet image, VertexSet img, const Hypergraph& g) {
    for (VertexSet e : g.edges())
        if ((e & img) == image) return true;
    return false;
}

bool satisfies(MorphismKind kind, const std::vector<int>& phi,
               const Hypergraph& h, const Hypergraph& g) {
    VertexSet img = 0;
    for (int v : phi) img |= VertexSet{1} << v;

    switch (kind) {
        case MorphismKind::Emb:
        case MorphismKind::StrEmb:
        case MorphismKind::TrimEmb:
        case MorphismKind::StrTrimEmb:
            if (!isInjective(phi, img)) return false;
            break;
        default:
            break;
    }

    switch (kind) {
        case MorphismKind::Hom:
        case MorphismKind::Emb:
            for (VertexSet e : h.edges())
                if (!g.hasEdge(mapSet(e, phi))) return false;
            return true;
        case MorphismKind::StrEmb: {
            VertexSet all = h.vertexMask();
            for (VertexSet s = 1; s <= all; ++s) {
                if ((s & ~all) != 0) continue;
                if (h.hasEdge(s) != g.hasEdge(mapSet(s, phi))) return false;
            }
            return true;
        }
        case MorphismKind::TrimHom:
        case MorphismKind::TrimEmb:
            for (VertexSet e : h.edges())
                if (!trimEdgeOk(mapSet(e, phi), img, g)) return false;
            return true;
        case MorphismKind::StrTrimEmb: {
            VertexSet all = h.vertexMask();
            for (VertexSet s = 1; s <= all; ++s) {
                if ((s & ~all) != 0) continue;
                if (h.hasEdge(s) != trimEdgeOk(mapSet(s, phi), img, g))
                    return false;
            }
            return true;
        }
    }
    return false;
}

/// Enumerates maps V(H) -> candidate list per position, mixed-radix order.
template <typename Pred>
std::uint64_t enumerateMaps(const std::vector<std::vector<int>>& candidates,
                            Pred pred) {
    int n = static_cast<int>(candidates.size());
    for (const auto& c : candidates)
        if (c.empty()) return n == 0 ? (pred(std::vector<int>{}) ? 1 : 0) : 0;
    std::vector<int> digit(n, 0);
    std::vector<int> phi(n);
    std::uint64_t count = 0;
    while (true) {
        for (int v = 0; v < n; ++v) phi[v] = candidates[v][digit[v]];
        if (pred(phi)) ++count;
        int v = n - 1;
        while (v >= 0 &&
               digit[v] + 1 == static_cast<int>(candidates[v].size())) {
            digit[v] = 0;
            --v;
        }
        if (v < 0) break;
        ++digit[v];
    }
    return count;
}

std::vector<std::vector<int>> allVerticesCandidates(int nH, int nG) {
    std::vector<int> all(nG);
    for (int v = 0; v < nG; ++v) all[v] = v;
    return std::vector<std::vector<int>>(nH, all);
}

MorphismKind morphismKindFor(PatternKind kind) {
    switch (kind) {
        case PatternKind::Sub: return MorphismKind::Emb;
        case PatternKind::IndSub: return MorphismKind::StrEmb;
        case PatternKind::TrimSub: return MorphismKind::TrimEmb;
        case PatternKind::IndTrimSub: return MorphismKind::StrTrimEmb;
    }
    throw DomainError("unknown pattern kind");
}

/// All subsets of V(G) of the given size.
std::vector<VertexSet> subsetsOfSize(int n, int k) {
    std::vector<VertexSet> out;
    VertexSet limit = fullSet(n);
    for (VertexSet s = 0; s <= limit; ++s) {
        if (setSize(s) == k) out.push_back(s);
        if (s == limit) break;
    }
    return out;
}

}  // namespace

std::uint64_t countMorphisms(MorphismKind kind, const Hypergraph& h,
                             const Hypergraph& g, std::uint64_t budget) {
    if (h.numVertices() == 0) return 1;
    if (g.numVertices() == 0) return 0;
    checkMapBudget(h.numVertices(), g.numVertices(), budget, "count_morphisms");
    auto candidates = allVerticesCandidates(h.numVertices(), g.numVertices());
    return enumerateMaps(candidates, [&](const std::vector<int>& phi) {
        return satisfies(kind, phi, h, g);
    });
}

std::uint64_t countPatterns(PatternKind kind, const Hypergraph& h,
                            const Hypergraph& g, std::uint64_t budget) {
    int k = h.numVertices();
    std::uint64_t direct = 0;
    if (k <= g.numVertices()) {
        std::uint64_t work = 0;
        for (VertexSet x : subsetsOfSize(g.numVertices(), k)) {
            if (k == 0) {
                direct += h.numEdges() == 0 ? 1 : 0;
                continue;
            }
            switch (kind) {
                case PatternKind::IndSub:
                    if (isIsomorphic(derive(g, x, DeriveMode::Induced), h))
                        ++direct;
                    break;
                case PatternKind::IndTrimSub:
                    if (isIsomorphic(derive(g, x, DeriveMode::Trim), h))
                        ++direct;
                    break;
                case PatternKind::Sub:
                case PatternKind::TrimSub: {
                    Hypergraph local = derive(g, x,
                                              kind == PatternKind::Sub
                                                  ? DeriveMode::Induced
                                                  : DeriveMode::Trim);
                    // choose |E(H)| of the available edges
                    int m = h.numEdges();
                    int avail = local.numEdges();
                    if (m > avail) break;
                    std::vector<int> pick(m);
                    for (int i = 0; i < m; ++i) pick[i] = i;
                    while (true) {
                        if (++work > budget)
                            throw BudgetError(
                                "count_patterns: edge-subset budget exceeded");
                        std::vector<VertexSet> chosen;
                        chosen.reserve(m);
                        for (int i : pick) chosen.push_back(local.edges()[i]);
                        if (isIsomorphic(Hypergraph(k, chosen), h)) ++direct;
                        // next combination
                        int i = m - 1;
                        while (i >= 0 && pick[i] == avail - m + i) --i;
                        if (i < 0) break;
                        ++pick[i];
                        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    std::uint64_t embs = countMorphisms(morphismKindFor(kind), h, g, budget);
    std::uint64_t aut = countAutomorphisms(h);
    if (direct * aut != embs)
        throw std::logic_error(
            "count_patterns: direct enumeration disagrees with the morphism "
            "count (direct=" + std::to_string(direct) +
            ", morphisms=" + std::to_string(embs) +
            ", aut=" + std::to_string(aut) + ")");
    return direct;
}

ColoredHost makeColoredHost(Hypergraph host, std::vector<int> colour,
                            const Hypergraph& pattern, bool requireHom) {
    if (static_cast<int>(colour.size()) != host.numVertices())
        throw DomainError("coloured host: colouring must cover every vertex");
    for (int c : colour)
        if (c < 0 || c >= pattern.numVertices())
            throw DomainError("coloured host: colour out of pattern range");
    ColoredHost out{std::move(host), std::move(colour), false};
    if (requireHom) {
        for (VertexSet e : out.host.edges()) {
            VertexSet image = mapSet(e, out.colour);
            if (!pattern.hasEdge(image))
                throw DomainError(
                    "coloured host: colouring is not a homomorphism into the "
                    "pattern");
        }
        out.colouringIsHom = true;
    }
    return out;
}

std::uint64_t countColored(ColorMode mode, bool trimmed, const Hypergraph& h,
                           const ColoredHost& host, std::uint64_t budget) {
    const Hypergraph& g = host.host;
    if (h.numVertices() == 0) return 1;
    if (g.numVertices() == 0) return 0;
    MorphismKind kind = trimmed ? MorphismKind::TrimHom : MorphismKind::Hom;

    std::vector<std::vector<int>> candidates;
    if (mode == ColorMode::Prescribed) {
        candidates.assign(h.numVertices(), {});
        for (int w = 0; w < g.numVertices(); ++w)
            candidates[host.colour[w]].push_back(w);
        std::uint64_t maps = 1;
        for (const auto& c : candidates) {
            if (c.empty()) return 0;
            if (maps > budget / c.size())
                throw BudgetError("count_colored: map budget exceeded");
            maps *= c.size();
        }
    } else {
        checkMapBudget(h.numVertices(), g.numVertices(), budget,
                       "count_colored");
        candidates = allVerticesCandidates(h.numVertices(), g.numVertices());
    }

    VertexSet allColours = h.vertexMask();
    return enumerateMaps(candidates, [&](const std::vector<int>& phi) {
        if (mode == ColorMode::Colorful) {
            VertexSet hit = 0;
            for (int w : phi) hit |= VertexSet{1} << host.colour[w];
            if (hit != allColours) return false;
        }
        return satisfies(kind, phi, h, g);
    });
}

std::uint64_t cfViaInclusionExclusion(const Hypergraph& h,
                                      const ColoredHost& host,
                                      std::uint64_t budget) {
    const Hypergraph& g = host.host;
    std::int64_t total = 0;
    VertexSet colourLimit = h.vertexMask();
    for (VertexSet dropped = 0;; ++dropped) {
        VertexSet victims = 0;
        for (int w = 0; w < g.numVertices(); ++w)
            if (contains(dropped, host.colour[w]))
                victims |= VertexSet{1} << w;
        Hypergraph reduced = derive(g, victims, DeriveMode::DeleteKeep);
        std::uint64_t homs = countMorphisms(MorphismKind::Hom, h, reduced,
                                            budget);
        total += (setSize(dropped) % 2 == 0 ? 1 : -1) *
                 static_cast<std::int64_t>(homs);
        if (dropped == colourLimit) break;
    }
    if (total < 0)
        throw std::logic_error("cf inclusion-exclusion produced a negative "
                               "count");
    return static_cast<std::uint64_t>(total);
}

std::uint64_t countSurjective(MorphismKind kind, const Hypergraph& h,
                              const Hypergraph& g, std::uint64_t budget) {
    if (kind != MorphismKind::Hom && kind != MorphismKind::TrimHom)
        throw DomainError("count_surjective supports hom and trimhom only");
    if (g.numVertices() == 0) return h.numVertices() == 0 ? 1 : 0;
    checkMapBudget(h.numVertices(), g.numVertices(), budget,
                   "count_surjective");

    VertexSet all = g.vertexMask();
    auto candidates = allVerticesCandidates(h.numVertices(), g.numVertices());
    std::uint64_t direct =
        enumerateMaps(candidates, [&](const std::vector<int>& phi) {
            VertexSet img = 0;
            for (int v : phi) img |= VertexSet{1} << v;
            return img == all && satisfies(kind, phi, h, g);
        });

    // cross-check: delete each vertex subset A and count into G minus A,
    // keeping surviving edges for hom and trimming them for trimhom
    DeriveMode mode = kind == MorphismKind::Hom ? DeriveMode::DeleteKeep
                                                : DeriveMode::DeleteTrim;
    std::int64_t viaIE = 0;
    for (VertexSet a = 0;; ++a) {
        Hypergraph reduced = derive(g, a, mode);
        std::uint64_t homs = countMorphisms(kind, h, reduced, budget);
        viaIE += (setSize(a) % 2 == 0 ? 1 : -1) *
                 static_cast<std::int64_t>(homs);
        if (a == all) break;
    }
    if (viaIE < 0 || static_cast<std::uint64_t>(viaIE) != direct)
        throw std::logic_error(
            "count_surjective: direct count disagrees with "
            "inclusion-exclusion (direct=" + std::to_string(direct) +
            ", ie=" + std::to_string(viaIE) + ")");
    return direct;
}

}  // namespace hgc
