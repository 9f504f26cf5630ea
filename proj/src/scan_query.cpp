#include "lrstab/scan_query.hpp"

#include <algorithm>

#include "lrstab/llr.hpp"

namespace lrstab {

LrAnswer scan_leftmost_lr(QueryInterval q, const std::vector<Pos>& rank,
                          const std::vector<Pos>& lcp) {
    const Pos n = static_cast<Pos>(rank.size()) - 1;
    validate_interval(q, n);

    Pos start = -1, end = -1;
    for (Pos i = q.x; i >= 1; --i) {
        const Pos len = llr_length_at(i, rank, lcp);
        if (len == 0 || i + len - 1 < q.y) break;  // early stop
        if (len >= end - start + 1) {              // >= keeps the leftmost on ties
            start = i;
            end = i + len - 1;
        }
    }

    LrAnswer answer;
    if (start != -1) {
        answer.spans.push_back(Span{start, end});
        answer.length = end - start + 1;
    }
    return answer;
}

LrAnswer scan_all_lr(QueryInterval q, const std::vector<Pos>& rank, const std::vector<Pos>& lcp) {
    const Pos n = static_cast<Pos>(rank.size()) - 1;
    validate_interval(q, n);

    Pos length = 0;
    for (Pos i = q.x; i >= 1; --i) {
        const Pos len = llr_length_at(i, rank, lcp);
        if (len == 0 || i + len - 1 < q.y) break;
        if (len > length) length = len;
    }

    LrAnswer answer;
    if (length == 0) return answer;
    answer.length = length;
    for (Pos i = q.x; i >= 1; --i) {
        const Pos len = llr_length_at(i, rank, lcp);
        if (len == 0 || i + len - 1 < q.y) break;
        if (len == length) answer.spans.push_back(Span{i, i + length - 1});
    }
    std::reverse(answer.spans.begin(), answer.spans.end());  // ascending start
    return answer;
}

}  // namespace lrstab
