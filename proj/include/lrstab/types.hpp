#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrstab/errors.hpp"

namespace lrstab {

// String positions and array indices are 1-based throughout, mirroring
// the position convention of all user-facing I/O. 32 bits cover the
// supported text sizes.
using Pos = std::int32_t;

// Inclusive span of text positions.
struct Span {
    Pos start = 0;
    Pos end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

inline Pos span_length(const Span& s) { return s.end - s.start + 1; }

// Query interval [x..y]; a point query has x == y.
struct QueryInterval {
    Pos x = 0;
    Pos y = 0;
};

// Result of a stabbing query: zero or more covering spans of equal
// maximal length, sorted by ascending start, no duplicates.
struct LrAnswer {
    std::vector<Span> spans;
    Pos length = 0;

    bool exists() const { return !spans.empty(); }

    friend bool operator==(const LrAnswer&, const LrAnswer&) = default;
};

// Instrumentation for the output-sensitive cost checks.
struct QueryStats {
    std::int64_t range_max_calls = 0;
    std::int64_t dominance_calls = 0;
};

inline void validate_interval(const QueryInterval& q, Pos n) {
    if (q.x < 1 || q.y > n || q.x > q.y) {
        throw InvalidIntervalError("invalid query interval [" + std::to_string(q.x) +
                                   ".." + std::to_string(q.y) + "] for text of length " +
                                   std::to_string(n));
    }
}

}  // namespace lrstab
