#pragma once

#include <vector>

#include "lrstab/types.hpp"

namespace lrstab {

/*
 * Index-free per-query algorithms over the rank/lcp arrays. Both walk
 * the LLR lengths downward from x and stop at the first position whose
 * LLR is missing or fails to reach y; no position left of that stop can
 * cover the interval either.
 */

// The leftmost longest repeat covering [x..y], or an empty answer.
LrAnswer scan_leftmost_lr(QueryInterval q, const std::vector<Pos>& rank,
                          const std::vector<Pos>& lcp);

// All longest repeats covering [x..y], ascending by start: one pass to
// find the length, a second to collect every span of that length.
LrAnswer scan_all_lr(QueryInterval q, const std::vector<Pos>& rank, const std::vector<Pos>& lcp);

}  // namespace lrstab
