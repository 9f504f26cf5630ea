#pragma once

#include <cstddef>

#include "lrstab/boundary.hpp"
#include "lrstab/llr.hpp"
#include "lrstab/sparse_table.hpp"
#include "lrstab/text.hpp"
#include "lrstab/types.hpp"

namespace lrstab {

// Wall-time of the index construction phases, in seconds.
struct BuildPhases {
    double suffix_seconds = 0;
    double llrc_seconds = 0;
    double boundary_seconds = 0;
    double range_max_seconds = 0;

    double total_seconds() const {
        return suffix_seconds + llrc_seconds + boundary_seconds + range_max_seconds;
    }
};

/*
 * The optimal stabbing index: the candidate set of any interval [x..y]
 * is the contiguous LLRc range [L[y]..R[x]], so one range-max call over
 * the entry weights yields a longest covering repeat and a
 * range-splitting walk yields all of them in O(occ).
 */
class RmqIndex {
public:
    RmqIndex() = default;
    RmqIndex(LlrcArray llrc, Boundaries boundaries, Pos n);

    // One longest repeat covering [x..y] (the leftmost choice), O(1).
    LrAnswer query_one(QueryInterval q, QueryStats* stats = nullptr) const;

    // All longest repeats covering [x..y], ascending by start, O(occ).
    LrAnswer query_all(QueryInterval q, QueryStats* stats = nullptr) const;

    Pos text_length() const { return n_; }
    const LlrcArray& llrc() const { return llrc_; }
    const Boundaries& boundaries() const { return boundaries_; }

    std::size_t footprint_bytes() const;

private:
    // Smallest LLRc index of maximal weight in [l..r], 1-based.
    Pos range_argmax(Pos l, Pos r, QueryStats* stats) const;

    LlrcArray llrc_;
    Boundaries boundaries_;
    SparseTable<Pos> rm_;
    Pos n_ = 0;
};

RmqIndex build_rmq_index(LlrcArray llrc, Boundaries boundaries, Pos n);

// Full pipeline from a text: suffix structures, LLRc, boundaries,
// range-max table. Phase timings reported when requested.
RmqIndex build_rmq_index(const Text& text, BuildPhases* phases = nullptr);

}  // namespace lrstab
