#pragma once

#include <optional>
#include <vector>

#include "lrstab/types.hpp"

namespace lrstab {

// Length of the longest repeat starting at position i: the larger of the
// lcp values the suffix at i shares with its two lexicographic neighbors.
// Zero means S[i] is a singleton.
inline Pos llr_length_at(Pos i, const std::vector<Pos>& rank, const std::vector<Pos>& lcp) {
    const Pos r = rank[i];
    return std::max(lcp[r], lcp[r + 1]);
}

// The left-bounded longest repeat at i, or nothing when S[i] is a singleton.
std::optional<Span> llr_at(Pos i, const std::vector<Pos>& rank, const std::vector<Pos>& lcp);

/*
 * Staircase array of the useful left-bounded longest repeats: both
 * coordinate sequences strictly increase and no span is contained in
 * another. Entries are addressed 1-based to match the boundary arrays.
 */
class LlrcArray {
public:
    LlrcArray() = default;
    explicit LlrcArray(std::vector<Span> entries) : entries_(std::move(entries)) {}

    Pos size() const { return static_cast<Pos>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const Span& at(Pos i) const { return entries_[i - 1]; }
    Pos weight(Pos i) const { return span_length(at(i)); }

    const std::vector<Span>& entries() const { return entries_; }
    std::vector<Pos> weights() const;

    // True iff the span is one of the entries (binary search on starts).
    bool contains(const Span& span) const;

private:
    std::vector<Span> entries_;
};

// One left-to-right pass keeping llr_i iff it exists and is at least as
// long as its predecessor; the survivors are exactly the useful LLRs.
LlrcArray build_llrc(const std::vector<Pos>& rank, const std::vector<Pos>& lcp);

}  // namespace lrstab
