#pragma once

#include <vector>

#include "lrstab/llr.hpp"
#include "lrstab/types.hpp"

namespace lrstab {

/*
 * Per-coordinate LLRc index boundaries, 1-based, sentinel -1:
 *   L[y] = smallest index whose entry ends at or after y,
 *   R[x] = largest index whose entry starts at or before x.
 * The candidate set of a query [x..y] is nonempty iff L[y] != -1,
 * R[x] != -1 and L[y] <= R[x], in which case it is exactly the
 * contiguous entry range [L[y]..R[x]].
 */
struct Boundaries {
    std::vector<Pos> L;
    std::vector<Pos> R;
};

// Two linear sweeps over the staircase; an empty LLRc yields all -1.
Boundaries build_boundaries(const LlrcArray& llrc, Pos n);

}  // namespace lrstab
