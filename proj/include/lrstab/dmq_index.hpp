#pragma once

#include <cstddef>
#include <optional>

#include "lrstab/llr.hpp"
#include "lrstab/sparse_table.hpp"
#include "lrstab/text.hpp"
#include "lrstab/types.hpp"

namespace lrstab {

/*
 * Geometric engine: every useful LLR is a dot (start, end) on or above
 * the 45-degree diagonal, weighted by its length. Because the dots form
 * a strict staircase, a dominance-max query needs only two binary
 * searches to locate the candidate range plus one range-max over the
 * weights, O(log n) per query.
 */
class DmqIndex {
public:
    DmqIndex() = default;
    DmqIndex(LlrcArray dots, Pos n);

    // Heaviest dot with start <= x and end >= y, smallest start on ties,
    // or nothing when that quadrant is empty. x >= y is not required;
    // the all-choices recursion shrinks the rectangle past the diagonal.
    std::optional<Span> dominance_max(Pos x, Pos y, QueryStats* stats = nullptr) const;

    // One longest repeat covering [x..y], via a single dominance query.
    LrAnswer query_one_2d(QueryInterval q, QueryStats* stats = nullptr) const;

    // All longest repeats covering [x..y], ascending by start; at most
    // 2*occ + 1 dominance queries.
    LrAnswer query_all_2d(QueryInterval q, QueryStats* stats = nullptr) const;

    Pos text_length() const { return n_; }
    const LlrcArray& dots() const { return dots_; }

    std::size_t footprint_bytes() const;

private:
    LlrcArray dots_;
    SparseTable<Pos> rm_;
    Pos n_ = 0;
};

DmqIndex build_dmq_index(LlrcArray dots, Pos n);
DmqIndex build_dmq_index(const Text& text);

}  // namespace lrstab
