#include "lrstab/llr.hpp"

#include <algorithm>

namespace lrstab {

std::optional<Span> llr_at(Pos i, const std::vector<Pos>& rank, const std::vector<Pos>& lcp) {
    const Pos len = llr_length_at(i, rank, lcp);
    if (len == 0) return std::nullopt;
    return Span{i, i + len - 1};
}

std::vector<Pos> LlrcArray::weights() const {
    std::vector<Pos> w;
    w.reserve(entries_.size());
    for (const Span& e : entries_) w.push_back(span_length(e));
    return w;
}

bool LlrcArray::contains(const Span& span) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), span.start,
        [](const Span& e, Pos start) { return e.start < start; });
    return it != entries_.end() && *it == span;
}

LlrcArray build_llrc(const std::vector<Pos>& rank, const std::vector<Pos>& lcp) {
    const Pos n = static_cast<Pos>(rank.size()) - 1;
    std::vector<Span> entries;
    Pos prev = 1;
    for (Pos i = 1; i <= n; ++i) {
        const Pos len = llr_length_at(i, rank, lcp);
        if (len > 0 && len >= prev) entries.push_back(Span{i, i + len - 1});
        prev = len;
    }
    return LlrcArray(std::move(entries));
}

}  // namespace lrstab
