#pragma once

#include <cstdint>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

enum class MorphismKind { Hom, Emb, StrEmb, TrimHom, TrimEmb, StrTrimEmb };
enum class PatternKind { Sub, IndSub, TrimSub, IndTrimSub };

constexpr std::uint64_t kDefaultMapBudget = 1'000'000'000;

/// Exact morphism count by exhaustive enumeration of all maps
/// V(H) -> V(G) in mixed-radix order.
///   hom:        every edge image is an edge of G
///   emb:        injective hom
///   stremb:     injective; S in E(H) iff phi(S) in E(G), for all S
///   trimhom:    every edge image equals some G-edge cut to img(phi)
///   trimemb:    injective trimhom
///   strtrimemb: injective; the trim condition holds as an iff, for all S
/// Throws BudgetError when |G|^|H| exceeds the budget.
std::uint64_t countMorphisms(MorphismKind kind, const Hypergraph& h,
                             const Hypergraph& g,
                             std::uint64_t budget = kDefaultMapBudget);

/// Exact pattern count by direct enumeration over vertex subsets of G
/// (and edge subsets for the non-induced kinds) with isomorphism testing.
/// Internally cross-checked against the corresponding morphism count
/// divided by Aut(H); a mismatch aborts with a diagnostic.
std::uint64_t countPatterns(PatternKind kind, const Hypergraph& h,
                            const Hypergraph& g,
                            std::uint64_t budget = kDefaultMapBudget);

/// A host hypergraph whose vertices are coloured by pattern vertices.
/// `colouringIsHom` records whether the colouring was verified to be a
/// homomorphism into the pattern; gadget constructions may leave it unset.
struct ColoredHost {
    Hypergraph host;
    std::vector<int> colour;  // host vertex -> pattern vertex
    bool colouringIsHom = false;
};

/// Builds a coloured host for `pattern`. With requireHom, verifies that
/// the colouring is a homomorphism host -> pattern and sets the flag.
ColoredHost makeColoredHost(Hypergraph host, std::vector<int> colour,
                            const Hypergraph& pattern, bool requireHom);

enum class ColorMode { Prescribed, Colorful };

/// cp counts morphisms with c(phi(v)) = v for every pattern vertex; cf
/// counts morphisms whose image touches every colour. The trimmed flag
/// swaps the hom predicate for the trimmed one.
std::uint64_t countColored(ColorMode mode, bool trimmed, const Hypergraph& h,
                           const ColoredHost& host,
                           std::uint64_t budget = kDefaultMapBudget);

/// Colourful hom count via inclusion-exclusion over deleted colour
/// classes; equals countColored(Colorful, false, ...).
std::uint64_t cfViaInclusionExclusion(const Hypergraph& h,
                                      const ColoredHost& host,
                                      std::uint64_t budget = kDefaultMapBudget);

/// Morphisms whose image is all of V(G). Computed both directly and by
/// inclusion-exclusion over deleted host vertices; mismatch aborts.
/// Supported kinds: Hom and TrimHom.
std::uint64_t countSurjective(MorphismKind kind, const Hypergraph& h,
                              const Hypergraph& g,
                              std::uint64_t budget = kDefaultMapBudget);

}  // namespace hgc
