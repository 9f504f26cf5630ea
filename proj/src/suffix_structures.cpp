#include "lrstab/suffix_structures.hpp"

#include <algorithm>
#include <cassert>

namespace lrstab {

namespace {

// SA-IS over s[0..m-1] with values in [0..k-1]; s must end with a unique
// smallest sentinel 0. Returns the 0-based suffix array of s.
std::vector<Pos> sais(const std::vector<Pos>& s, Pos k) {
    const Pos m = static_cast<Pos>(s.size());
    std::vector<Pos> sa(m, -1);
    if (m == 1) {
        sa[0] = 0;
        return sa;
    }

    // Suffix types: S-type when the suffix is smaller than its successor.
    std::vector<char> stype(m);
    stype[m - 1] = 1;
    for (Pos i = m - 2; i >= 0; --i) {
        stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
    }
    auto is_lms = [&](Pos i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<Pos> count(k, 0);
    for (Pos i = 0; i < m; ++i) ++count[s[i]];
    std::vector<Pos> head(k), tail(k);
    auto reset_heads = [&] {
        Pos sum = 0;
        for (Pos c = 0; c < k; ++c) {
            head[c] = sum;
            sum += count[c];
        }
    };
    auto reset_tails = [&] {
        Pos sum = 0;
        for (Pos c = 0; c < k; ++c) {
            sum += count[c];
            tail[c] = sum;  // one past the bucket end
        }
    };

    // Seed the LMS positions at their bucket tails, then induce L-types
    // left to right and S-types right to left.
    auto induce = [&](const std::vector<Pos>& lms_seed) {
        std::fill(sa.begin(), sa.end(), -1);
        reset_tails();
        for (Pos r = static_cast<Pos>(lms_seed.size()) - 1; r >= 0; --r) {
            const Pos i = lms_seed[r];
            sa[--tail[s[i]]] = i;
        }
        reset_heads();
        for (Pos r = 0; r < m; ++r) {
            const Pos j = sa[r];
            if (j > 0 && !stype[j - 1]) sa[head[s[j - 1]]++] = j - 1;
        }
        reset_tails();
        for (Pos r = m - 1; r >= 0; --r) {
            const Pos j = sa[r];
            if (j > 0 && stype[j - 1]) sa[--tail[s[j - 1]]] = j - 1;
        }
    };

    std::vector<Pos> lms;
    for (Pos i = 1; i < m; ++i) {
        if (is_lms(i)) lms.push_back(i);
    }

    // First pass sorts the LMS substrings.
    induce(lms);

    // Name the LMS substrings in sorted order; equal substrings share a name.
    std::vector<Pos> name(m, -1);
    Pos names = 0;
    Pos prev = -1;
    for (Pos r = 0; r < m; ++r) {
        const Pos i = sa[r];
        if (!is_lms(i)) continue;
        if (prev >= 0) {
            bool same = true;
            for (Pos d = 0;; ++d) {
                if (s[prev + d] != s[i + d] || stype[prev + d] != stype[i + d]) {
                    same = false;
                    break;
                }
                if (d > 0 && (is_lms(prev + d) || is_lms(i + d))) {
                    same = is_lms(prev + d) && is_lms(i + d);
                    break;
                }
            }
            if (!same) ++names;
        }
        name[i] = names;
        prev = i;
    }

    std::vector<Pos> reduced;
    reduced.reserve(lms.size());
    for (const Pos i : lms) reduced.push_back(name[i]);

    std::vector<Pos> lms_sorted(lms.size());
    if (names + 1 == static_cast<Pos>(lms.size())) {
        // All names distinct: the order is already known.
        for (Pos r = 0; r < static_cast<Pos>(lms.size()); ++r) lms_sorted[reduced[r]] = lms[r];
    } else {
        const std::vector<Pos> sa1 = sais(reduced, names + 1);
        for (Pos r = 0; r < static_cast<Pos>(sa1.size()); ++r) lms_sorted[r] = lms[sa1[r]];
    }

    induce(lms_sorted);
    return sa;
}

}  // namespace

std::vector<Pos> build_suffix_array(const Text& text) {
    const Pos n = text.n();
    std::vector<Pos> s(n + 1);
    for (Pos i = 0; i < n; ++i) {
        s[i] = static_cast<Pos>(static_cast<unsigned char>(text.bytes()[i])) + 1;
    }
    s[n] = 0;  // unique smallest sentinel

    const std::vector<Pos> sa0 = sais(s, 257);
    assert(sa0[0] == n);

    std::vector<Pos> sa(n + 1);
    sa[0] = 0;  // unused, arrays are 1-based
    for (Pos j = 1; j <= n; ++j) sa[j] = sa0[j] + 1;
    return sa;
}

std::vector<Pos> build_rank_array(const std::vector<Pos>& sa) {
    std::vector<Pos> rank(sa.size());
    rank[0] = 0;
    for (Pos j = 1; j < static_cast<Pos>(sa.size()); ++j) rank[sa[j]] = j;
    return rank;
}

std::vector<Pos> build_lcp_array(const Text& text, const std::vector<Pos>& sa,
                                 const std::vector<Pos>& rank) {
    const Pos n = text.n();
    std::vector<Pos> lcp(n + 2, 0);  // lcp[1..n+1], both sentinels zero
    Pos h = 0;
    for (Pos i = 1; i <= n; ++i) {
        const Pos r = rank[i];
        if (r > 1) {
            const Pos j = sa[r - 1];
            while (i + h <= n && j + h <= n && text.at(i + h) == text.at(j + h)) ++h;
            lcp[r] = h;
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    return lcp;
}

SuffixStructures build_suffix_structures(const Text& text) {
    SuffixStructures st;
    st.n = text.n();
    st.sa = build_suffix_array(text);
    st.rank = build_rank_array(st.sa);
    st.lcp = build_lcp_array(text, st.sa, st.rank);
    return st;
}

}  // namespace lrstab
