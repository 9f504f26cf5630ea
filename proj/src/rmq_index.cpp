#include "lrstab/rmq_index.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "lrstab/suffix_structures.hpp"

namespace lrstab {

RmqIndex::RmqIndex(LlrcArray llrc, Boundaries boundaries, Pos n)
    : llrc_(std::move(llrc)), boundaries_(std::move(boundaries)), rm_(llrc_.weights()), n_(n) {}

Pos RmqIndex::range_argmax(Pos l, Pos r, QueryStats* stats) const {
    if (stats) ++stats->range_max_calls;
    return static_cast<Pos>(rm_.range_argmax(l - 1, r - 1)) + 1;
}

LrAnswer RmqIndex::query_one(QueryInterval q, QueryStats* stats) const {
    validate_interval(q, n_);
    LrAnswer answer;
    const Pos ly = boundaries_.L[q.y];
    const Pos rx = boundaries_.R[q.x];
    if (ly == -1 || rx == -1 || ly > rx) return answer;
    const Pos m = range_argmax(ly, rx, stats);
    answer.spans.push_back(llrc_.at(m));
    answer.length = llrc_.weight(m);
    return answer;
}

LrAnswer RmqIndex::query_all(QueryInterval q, QueryStats* stats) const {
    validate_interval(q, n_);
    LrAnswer answer;
    const Pos ly = boundaries_.L[q.y];
    const Pos rx = boundaries_.R[q.x];
    if (ly == -1 || rx == -1 || ly > rx) return answer;

    const Pos m0 = range_argmax(ly, rx, stats);
    const Pos target = llrc_.weight(m0);
    answer.length = target;
    answer.spans.push_back(llrc_.at(m0));

    // Range-splitting walk on an explicit stack; occ can reach llrc.size.
    std::vector<std::pair<Pos, Pos>> work;
    if (ly <= m0 - 1) work.emplace_back(ly, m0 - 1);
    if (rx >= m0 + 1) work.emplace_back(m0 + 1, rx);
    while (!work.empty()) {
        const auto [l, r] = work.back();
        work.pop_back();
        const Pos m = range_argmax(l, r, stats);
        if (llrc_.weight(m) < target) continue;
        answer.spans.push_back(llrc_.at(m));
        if (l <= m - 1) work.emplace_back(l, m - 1);
        if (r >= m + 1) work.emplace_back(m + 1, r);
    }

    std::sort(answer.spans.begin(), answer.spans.end(),
              [](const Span& a, const Span& b) { return a.start < b.start; });
    return answer;
}

std::size_t RmqIndex::footprint_bytes() const {
    return llrc_.entries().capacity() * sizeof(Span) +
           boundaries_.L.capacity() * sizeof(Pos) + boundaries_.R.capacity() * sizeof(Pos) +
           rm_.footprint_bytes();
}

RmqIndex build_rmq_index(LlrcArray llrc, Boundaries boundaries, Pos n) {
    return RmqIndex(std::move(llrc), std::move(boundaries), n);
}

RmqIndex build_rmq_index(const Text& text, BuildPhases* phases) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const SuffixStructures st = build_suffix_structures(text);
    const auto t1 = clock::now();
    LlrcArray llrc = build_llrc(st.rank, st.lcp);
    const auto t2 = clock::now();
    Boundaries bounds = build_boundaries(llrc, st.n);
    const auto t3 = clock::now();
    RmqIndex index(std::move(llrc), std::move(bounds), st.n);
    const auto t4 = clock::now();

    if (phases) {
        const auto seconds = [](auto from, auto to) {
            return std::chrono::duration<double>(to - from).count();
        };
        phases->suffix_seconds = seconds(t0, t1);
        phases->llrc_seconds = seconds(t1, t2);
        phases->boundary_seconds = seconds(t2, t3);
        phases->range_max_seconds = seconds(t3, t4);
    }
    return index;
}

}  // namespace lrstab
