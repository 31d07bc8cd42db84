#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace mchyper {

// Plain disjoint-set union with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns the surviving root.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        // ties go to the smaller index so results are reproducible
        if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --count_;
        return a;
    }

    bool connected(int a, int b) { return find(a) == find(b); }
    int component_size(int x) { return size_[find(x)]; }
    int count() const { return count_; }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(size_.begin(), size_.end(), 1);
        count_ = static_cast<int>(parent_.size());
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int count_;
};

// Union-find with an operation log and O(1) undo per union, for
// backtracking search. No path compression: rollback must restore the
// exact parent forest, so finds walk the uncompressed chain.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns the surviving root (a itself when already joined).
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
        log_.push_back(b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    int size_of_root(int root) const { return size_[root]; }
    int component_size(int x) const { return size_[find(x)]; }

    std::size_t checkpoint() const { return log_.size(); }

    void rollback_to(std::size_t mark) {
        while (log_.size() > mark) {
            int child = log_.back();
            log_.pop_back();
            size_[parent_[child]] -= size_[child];
            parent_[child] = child;
        }
    }

    // Drop undo history (state becomes the new baseline).
    void commit() { log_.clear(); }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(size_.begin(), size_.end(), 1);
        log_.clear();
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_; // roots that were attached, in order
};

} // namespace mchyper
