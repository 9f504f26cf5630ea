#include "lrstab/oracle.hpp"

#include <algorithm>

#include "lrstab/errors.hpp"

namespace lrstab {

namespace {

void check_size(Pos n, const OracleConfig& config) {
    if (n > config.max_n) {
        throw TextTooLargeError("oracle refuses texts longer than " +
                                std::to_string(config.max_n) + " (got " + std::to_string(n) + ")");
    }
}

void check_range(Pos i, Pos j, Pos n) {
    if (i < 1 || j > n || i > j) {
        throw InvalidRangeError("invalid range [" + std::to_string(i) + ".." + std::to_string(j) +
                                "] for text of length " + std::to_string(n));
    }
}

bool naive_is_repeat(const Text& text, Pos i, Pos j) {
    const Pos n = text.n();
    const Pos len = j - i + 1;
    Pos occurrences = 0;
    for (Pos p = 1; p + len - 1 <= n; ++p) {
        bool match = true;
        for (Pos d = 0; d < len; ++d) {
            if (text.at(p + d) != text.at(i + d)) {
                match = false;
                break;
            }
        }
        if (match && ++occurrences >= 2) return true;
    }
    return false;
}

}  // namespace

bool is_repeat(const Text& text, Pos i, Pos j, const OracleConfig& config) {
    check_size(text.n(), config);
    check_range(i, j, text.n());
    return naive_is_repeat(text, i, j);
}

BruteOracle::BruteOracle(const Text& text, OracleConfig config)
    : text_(text), config_(config), repeat_len_(static_cast<std::size_t>(text.n()) + 1, 0) {
    check_size(text_.n(), config_);
    const Pos n = text_.n();
    for (Pos i = 1; i <= n; ++i) {
        Pos best = 0;
        for (Pos p = 1; p <= n; ++p) {
            if (p == i) continue;
            Pos d = 0;
            while (i + d <= n && p + d <= n && text_.at(i + d) == text_.at(p + d)) ++d;
            best = std::max(best, d);
        }
        repeat_len_[static_cast<std::size_t>(i)] = best;
    }
}

bool BruteOracle::is_repeat(Pos i, Pos j) const {
    check_range(i, j, text_.n());
    return naive_is_repeat(text_, i, j);
}

LrAnswer BruteOracle::brute_lr(QueryInterval q) const {
    validate_interval(q, text_.n());
    // The repeats covering [x..y] with start i are exactly the prefixes of
    // the longest repeat starting at i, so scanning repeat_len_ visits the
    // maximal candidate of every admissible start position.
    Pos best = 0;
    for (Pos i = 1; i <= q.x; ++i) {
        const Pos len = repeat_length_at(i);
        if (len > 0 && i + len - 1 >= q.y) best = std::max(best, len);
    }
    LrAnswer answer;
    if (best == 0) return answer;
    answer.length = best;
    for (Pos i = 1; i <= q.x; ++i) {
        if (repeat_length_at(i) == best && i + best - 1 >= q.y) {
            answer.spans.push_back(Span{i, i + best - 1});
        }
    }
    return answer;
}

LrAnswer brute_lr(const Text& text, QueryInterval q, const OracleConfig& config) {
    return BruteOracle(text, config).brute_lr(q);
}

}  // namespace lrstab
