#include "hgc/partition.hpp"

#include <algorithm>

namespace hgc {

namespace {

/// Relabels block ids so they appear in order of their smallest member.
std::vector<int> canonicalize(const std::vector<int>& raw, int& numBlocks) {
    std::vector<int> remap(raw.size(), -1);
    int next = 0;
    std::vector<int> out(raw.size());
    for (std::size_t v = 0; v < raw.size(); ++v) {
        int b = raw[v];
        if (b < 0 || b >= static_cast<int>(raw.size()))
            throw DomainError("partition: block id out of range");
        if (remap[b] < 0) remap[b] = next++;
        out[v] = remap[b];
    }
    numBlocks = next;
    return out;
}

}  // namespace

Partition::Partition(std::vector<int> blockId) {
    blockId_ = canonicalize(blockId, numBlocks_);
}

Partition Partition::fromBlocks(int n, const std::vector<VertexSet>& blocks) {
    std::vector<int> ids(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] == 0) throw DomainError("partition: empty block");
        for (int v = 0; v < n; ++v)
            if (contains(blocks[b], v)) {
                if (ids[v] != -1)
                    throw DomainError("partition: overlapping blocks");
                ids[v] = static_cast<int>(b);
            }
    }
    for (int v = 0; v < n; ++v)
        if (ids[v] == -1) throw DomainError("partition: uncovered element");
    return Partition(std::move(ids));
}

VertexSet Partition::blockMask(int b) const {
    VertexSet mask = 0;
    for (std::size_t v = 0; v < blockId_.size(); ++v)
        if (blockId_[v] == b) mask |= VertexSet{1} << v;
    return mask;
}

std::vector<VertexSet> Partition::blocks() const {
    std::vector<VertexSet> out(numBlocks_, 0);
    for (std::size_t v = 0; v < blockId_.size(); ++v)
        out[blockId_[v]] |= VertexSet{1} << v;
    return out;
}

Partition Partition::discrete(int n) {
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return Partition(std::move(ids));
}

Partition Partition::single(int n) {
    return Partition(std::vector<int>(n, 0));
}

void forEachPartition(int n, const std::function<void(const Partition&)>& fn,
                      int cap) {
    if (n > cap)
        throw BudgetError("enumerate_partitions: cap " + std::to_string(cap) +
                          " exceeded by n=" + std::to_string(n));
    if (n == 0) {
        fn(Partition(std::vector<int>{}));
        return;
    }
    // restricted growth strings: a[0]=0, a[v] <= 1 + max(a[0..v-1])
    std::vector<int> a(n, 0);
    while (true) {
        fn(Partition(a));
        int v = n - 1;
        while (v > 0) {
            int maxBefore = 0;
            for (int u = 0; u < v; ++u) maxBefore = std::max(maxBefore, a[u]);
            if (a[v] <= maxBefore) break;
            a[v] = 0;
            --v;
        }
        if (v == 0) return;
        ++a[v];
        std::fill(a.begin() + v + 1, a.end(), 0);
    }
}

std::int64_t mobiusOfPartition(const Partition& tau) {
    std::int64_t mu = 1;
    for (VertexSet block : tau.blocks()) {
        int size = setSize(block);
        std::int64_t factorial = 1;
        for (int i = 2; i < size; ++i) factorial *= i;
        mu *= (size % 2 == 1 ? 1 : -1) * factorial;
    }
    return mu;
}

Hypergraph quotient(const Hypergraph& h, const Partition& tau) {
    if (tau.numElements() != h.numVertices())
        throw DomainError("quotient: partition size mismatch");
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        VertexSet mapped = 0;
        for (int v = 0; v < h.numVertices(); ++v)
            if (contains(e, v)) mapped |= VertexSet{1} << tau.blockOf(v);
        edges.push_back(mapped);
    }
    return Hypergraph(tau.numBlocks(), std::move(edges));
}

Partition compose(const Partition& tau, const Partition& outer) {
    if (outer.numElements() != tau.numBlocks())
        throw DomainError("compose: outer partition size mismatch");
    std::vector<int> ids(tau.numElements());
    for (int v = 0; v < tau.numElements(); ++v)
        ids[v] = outer.blockOf(tau.blockOf(v));
    return Partition(std::move(ids));
}

}  // namespace hgc
