#include "lrstab/dmq_index.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "lrstab/suffix_structures.hpp"

namespace lrstab {

DmqIndex::DmqIndex(LlrcArray dots, Pos n) : dots_(std::move(dots)), rm_(dots_.weights()), n_(n) {}

std::optional<Span> DmqIndex::dominance_max(Pos x, Pos y, QueryStats* stats) const {
    if (stats) ++stats->dominance_calls;
    const auto& entries = dots_.entries();
    if (entries.empty()) return std::nullopt;

    // Staircase order: ends ascending, starts ascending.
    const auto lo_it = std::lower_bound(entries.begin(), entries.end(), y,
                                        [](const Span& e, Pos v) { return e.end < v; });
    if (lo_it == entries.end()) return std::nullopt;
    const auto hi_it = std::upper_bound(entries.begin(), entries.end(), x,
                                        [](Pos v, const Span& e) { return v < e.start; });
    if (hi_it == entries.begin()) return std::nullopt;

    const auto lo = static_cast<std::size_t>(lo_it - entries.begin());
    const auto hi = static_cast<std::size_t>(hi_it - entries.begin()) - 1;
    if (lo > hi) return std::nullopt;
    return entries[rm_.range_argmax(lo, hi)];
}

LrAnswer DmqIndex::query_one_2d(QueryInterval q, QueryStats* stats) const {
    validate_interval(q, n_);
    LrAnswer answer;
    if (const auto dot = dominance_max(q.x, q.y, stats)) {
        answer.spans.push_back(*dot);
        answer.length = span_length(*dot);
    }
    return answer;
}

LrAnswer DmqIndex::query_all_2d(QueryInterval q, QueryStats* stats) const {
    validate_interval(q, n_);
    LrAnswer answer;
    const auto first = dominance_max(q.x, q.y, stats);
    if (!first) return answer;
    const Pos target = span_length(*first);
    answer.length = target;
    answer.spans.push_back(*first);

    // Every further choice lies strictly left of or strictly above an
    // already reported dot, so the rectangles stay pairwise disjoint.
    std::vector<std::pair<Pos, Pos>> work;
    if (first->start - 1 >= 1) work.emplace_back(first->start - 1, q.y);
    if (first->end + 1 <= n_) work.emplace_back(q.x, first->end + 1);
    while (!work.empty()) {
        const auto [x, y] = work.back();
        work.pop_back();
        const auto dot = dominance_max(x, y, stats);
        if (!dot || span_length(*dot) < target) continue;
        answer.spans.push_back(*dot);
        if (dot->start - 1 >= 1) work.emplace_back(dot->start - 1, y);
        if (dot->end + 1 <= n_) work.emplace_back(x, dot->end + 1);
    }

    std::sort(answer.spans.begin(), answer.spans.end(),
              [](const Span& a, const Span& b) { return a.start < b.start; });
    return answer;
}

std::size_t DmqIndex::footprint_bytes() const {
    return dots_.entries().capacity() * sizeof(Span) + rm_.footprint_bytes();
}

DmqIndex build_dmq_index(LlrcArray dots, Pos n) { return DmqIndex(std::move(dots), n); }

DmqIndex build_dmq_index(const Text& text) {
    const SuffixStructures st = build_suffix_structures(text);
    return DmqIndex(build_llrc(st.rank, st.lcp), st.n);
}

}  // namespace lrstab
