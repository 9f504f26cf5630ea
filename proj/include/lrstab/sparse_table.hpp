#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lrstab {

/*
 * Doubling table for O(1) range-argmax after O(n log n) preprocessing.
 * Ties resolve to the smallest index, which the left-biased merge
 * preserves level by level.
 */
template <typename T>
class SparseTable {
public:
    SparseTable() = default;

    explicit SparseTable(std::vector<T> values) : values_(std::move(values)) {
        const std::size_t n = values_.size();
        if (n < 2) return;
        const int levels = std::bit_width(n) - 1;  // floor(log2 n)
        table_.resize(levels);

        table_[0].resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            table_[0][i] = values_[i] >= values_[i + 1] ? static_cast<std::uint32_t>(i)
                                                        : static_cast<std::uint32_t>(i + 1);
        }
        for (int k = 1; k < levels; ++k) {
            const std::size_t span = std::size_t{1} << (k + 1);
            const auto& prev = table_[k - 1];
            auto& curr = table_[k];
            curr.resize(n - span + 1);
            for (std::size_t i = 0; i + span <= n; ++i) {
                const std::uint32_t a = prev[i];
                const std::uint32_t b = prev[i + span / 2];
                curr[i] = values_[a] >= values_[b] ? a : b;
            }
        }
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<T>& values() const { return values_; }

    // Smallest index of the maximum over the inclusive range [l..r].
    std::size_t range_argmax(std::size_t l, std::size_t r) const {
        if (l == r) return l;
        const int k = std::bit_width(r - l + 1) - 1;
        const std::size_t a = table_[k - 1][l];
        const std::size_t b = table_[k - 1][r + 1 - (std::size_t{1} << k)];
        return values_[a] >= values_[b] ? a : b;
    }

    std::size_t footprint_bytes() const {
        std::size_t bytes = values_.capacity() * sizeof(T);
        for (const auto& row : table_) bytes += row.capacity() * sizeof(std::uint32_t);
        return bytes;
    }

private:
    std::vector<T> values_;
    std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace lrstab
