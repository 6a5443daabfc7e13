#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace potts {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0U);
    }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0U);
        std::fill(size_.begin(), size_.end(), 1U);
        components_ = parent_.size();
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true if x and y were in different sets.
    bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --components_;
        return true;
    }

    bool same(std::uint32_t x, std::uint32_t y) { return find(x) == find(y); }

    std::size_t components() const noexcept { return components_; }
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::size_t components_;
};

} // namespace potts
