#include "lrstab/boundary.hpp"

namespace lrstab {

Boundaries build_boundaries(const LlrcArray& llrc, Pos n) {
    Boundaries b;
    b.L.assign(n + 1, -1);
    b.R.assign(n + 1, -1);
    if (llrc.empty()) return b;

    // Ends strictly increase, so one step of the cursor per y suffices.
    Pos i = 1;
    for (Pos y = 1; y <= n; ++y) {
        if (y <= llrc.at(i).end) {
            b.L[y] = i;
        } else if (i < llrc.size()) {
            b.L[y] = ++i;
        } else {
            break;
        }
    }

    i = llrc.size();
    for (Pos x = n; x >= 1; --x) {
        if (x >= llrc.at(i).start) {
            b.R[x] = i;
        } else if (i > 1) {
            b.R[x] = --i;
        } else {
            break;
        }
    }
    return b;
}

}  // namespace lrstab
