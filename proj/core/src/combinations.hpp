#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace tracking::detail {

// Advances `idx` (strictly increasing indices into a pool of size n) to the
// next combination in lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t r = idx.size();
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (idx[i] != i + n - r) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t r) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    return idx;
}

// Binomial coefficients C(i, j) for i <= n, j <= r, saturating at uint64 max.
class BinomialTable {
public:
    BinomialTable(std::size_t n, std::size_t r) : r_(r), table_((n + 1) * (r + 1), 0) {
        constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (std::size_t j = 1; j <= std::min(i, r); ++j) {
                std::uint64_t a = at(i - 1, j - 1), b = j < i ? at(i - 1, j) : 0;
                at(i, j) = a > top - b ? top : a + b;
            }
        }
    }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return table_[i * (r_ + 1) + j]; }

private:
    std::uint64_t& at(std::size_t i, std::size_t j) { return table_[i * (r_ + 1) + j]; }
    std::size_t r_;
    std::vector<std::uint64_t> table_;
};

// The combination of rank `rank` in lexicographic order of r-subsets of n.
inline std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t r,
                                                   const BinomialTable& binom) {
    std::vector<std::size_t> idx;
    idx.reserve(r);
    std::size_t c = 0;
    for (std::size_t j = 0; j < r; ++j, ++c) {
        for (;; ++c) {
            std::uint64_t with_c = binom(n - c - 1, r - j - 1);
            if (rank < with_c) break;
            rank -= with_c;
        }
        idx.push_back(c);
    }
    return idx;
}

}  // namespace tracking::detail
