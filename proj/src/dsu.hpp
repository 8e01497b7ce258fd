#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace mist::detail {

// Union-find with union by size. With `rollback` enabled, path compression is
// off and unions can be undone in LIFO order.
class DisjointSets {
public:
    explicit DisjointSets(int n, bool rollback = false)
        : parent_(n), size_(n, 1), rollback_(rollback) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            if (!rollback_) parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        if (rollback_) history_.push_back(b);
        return true;
    }

    void undo() {
        int b = history_.back();
        history_.pop_back();
        int a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    bool rollback_;
};

}  // namespace mist::detail
