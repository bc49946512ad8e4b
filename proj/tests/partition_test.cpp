#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "hgc/partition.hpp"

using namespace hgc;

namespace {

/// sigma refines tau: every block of sigma lies inside a block of tau.
bool refines(const Partition& sigma, const Partition& tau) {
    for (int b = 0; b < sigma.numBlocks(); ++b) {
        VertexSet block = sigma.blockMask(b);
        int v = 0;
        while (!contains(block, v)) ++v;
        if ((block & ~tau.blockMask(tau.blockOf(v))) != 0) return false;
    }
    return true;
}

/// Recursive Moebius oracle on the partition lattice: the values below
/// tau sum to zero, anchored at 1 on the discrete partition.
std::int64_t mobiusOracle(const Partition& tau,
                          const std::vector<Partition>& all,
                          std::map<std::vector<int>, std::int64_t>& memo) {
    auto it = memo.find(tau.blockIds());
    if (it != memo.end()) return it->second;
    std::int64_t value;
    if (tau.numBlocks() == tau.numElements()) {
        value = 1;
    } else {
        value = 0;
        for (const auto& sigma : all)
            if (!(sigma == tau) && refines(sigma, tau))
                value -= mobiusOracle(sigma, all, memo);
    }
    memo[tau.blockIds()] = value;
    return value;
}

}  // namespace

TEST_CASE("enumeration hits every partition exactly once") {
    const std::vector<std::uint64_t> bell{1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) {
        std::uint64_t count = 0;
        std::vector<Partition> seen;
        forEachPartition(n, [&](const Partition& p) {
            CHECK(p.numElements() == n);
            for (const auto& q : seen) CHECK(!(p == q));
            seen.push_back(p);
            ++count;
        });
        CHECK(count == bell[n]);
    }
}

TEST_CASE("canonical labelling is restricted-growth") {
    Partition p({2, 0, 2, 1});  // relabelled by first appearance
    CHECK(p.blockIds() == std::vector<int>{0, 1, 0, 2});
    CHECK(p.numBlocks() == 3);
    CHECK(p.blockMask(0) == 0b0101);
    CHECK(p == Partition::fromBlocks(4, {0b0010, 0b1000, 0b0101}));
    CHECK(Partition::discrete(3).numBlocks() == 3);
    CHECK(Partition::single(3).numBlocks() == 1);
}

TEST_CASE("Moebius values agree with the recursive oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Partition> all;
        forEachPartition(n, [&](const Partition& p) { all.push_back(p); });
        std::map<std::vector<int>, std::int64_t> memo;
        for (const auto& tau : all)
            CHECK(mobiusOfPartition(tau) == mobiusOracle(tau, all, memo));
    }
    // closed form spot value: a single block of size 4
    CHECK(mobiusOfPartition(Partition::single(4)) == -6);
}

TEST_CASE("quotients merge vertices through the block map") {
    Hypergraph path(3, {0b011, 0b110});
    // merge the endpoints 0 and 2
    Partition tau = Partition::fromBlocks(3, {0b101, 0b010});
    Hypergraph q = quotient(path, tau);
    CHECK(q.numVertices() == 2);
    CHECK(q.edges() == std::vector<VertexSet>{0b11});  // both edges collapse

    // merging everything yields a single looped vertex
    Hypergraph all = quotient(path, Partition::single(3));
    CHECK(all.numVertices() == 1);
    CHECK(all.edges() == std::vector<VertexSet>{0b1});
}

TEST_CASE("composition coarsens consistently") {
    Partition tau({0, 0, 1, 2});
    Partition outer({0, 1, 1});  // merge tau-blocks 1 and 2
    Partition composed = compose(tau, outer);
    CHECK(composed.blockIds() == std::vector<int>{0, 0, 1, 1});
}
