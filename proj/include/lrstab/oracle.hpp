#pragma once

#include <vector>

#include "lrstab/text.hpp"
#include "lrstab/types.hpp"

namespace lrstab {

// Guard against accidental cubic blowups on large inputs.
struct OracleConfig {
    Pos max_n = 512;
};

/*
 * Brute-force ground truth for repeats and stabbing queries. Works by
 * naive character comparison only and shares no code with the
 * suffix-structure pipeline it cross-checks.
 */

// True iff S[i..j] occurs at two or more distinct start positions
// (occurrences may overlap), by scanning every start position.
bool is_repeat(const Text& text, Pos i, Pos j, const OracleConfig& config = {});

class BruteOracle {
public:
    explicit BruteOracle(const Text& text, OracleConfig config = {});

    bool is_repeat(Pos i, Pos j) const;

    // All maximal-length repeat spans covering [x..y], ascending by start.
    LrAnswer brute_lr(QueryInterval q) const;

    // Longest L such that S[i..i+L-1] is a repeat, 0 when S[i] is a
    // singleton. Found by pairwise common-extension scans.
    Pos repeat_length_at(Pos i) const { return repeat_len_[static_cast<std::size_t>(i)]; }

    const Text& text() const { return text_; }

private:
    Text text_;
    OracleConfig config_;
    std::vector<Pos> repeat_len_;  // [1..n]
};

LrAnswer brute_lr(const Text& text, QueryInterval q, const OracleConfig& config = {});

}  // namespace lrstab
