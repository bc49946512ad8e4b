#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hgc/hypergraph.hpp"

namespace hgc {

/// A partition of {0..n-1} in canonical labelling: blockId[v] is the block
/// of v, and block indices appear in order of their smallest member
/// (restricted-growth form).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> blockId);

    /// Partition from an explicit block list (any order).
    static Partition fromBlocks(int n, const std::vector<VertexSet>& blocks);

    int numElements() const { return static_cast<int>(blockId_.size()); }
    int numBlocks() const { return numBlocks_; }
    int blockOf(int v) const { return blockId_[v]; }
    const std::vector<int>& blockIds() const { return blockId_; }

    VertexSet blockMask(int b) const;
    std::vector<VertexSet> blocks() const;

    static Partition discrete(int n);
    static Partition single(int n);

    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> blockId_;
    int numBlocks_ = 0;
};

/// Calls fn for every partition of {0..n-1}, each exactly once
/// (Bell(n) total), in restricted-growth-string order.
void forEachPartition(int n, const std::function<void(const Partition&)>& fn,
                      int cap = 12);

/// Möbius value of the partition lattice between the discrete partition
/// and tau: prod over blocks B of (-1)^(|B|-1) * (|B|-1)!.
std::int64_t mobiusOfPartition(const Partition& tau);

/// H/tau: one vertex per block, edges mapped through the block map.
Hypergraph quotient(const Hypergraph& h, const Partition& tau);

/// Coarsen tau by a partition of its block set: block b of the result is
/// the union of tau-blocks in outer-block b. Used for quotient composition.
Partition compose(const Partition& tau, const Partition& outer);

}  // namespace hgc
