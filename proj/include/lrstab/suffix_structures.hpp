#pragma once

#include <vector>

#include "lrstab/text.hpp"
#include "lrstab/types.hpp"

namespace lrstab {

/*
 * Suffix array, its inverse, and the lcp array of the input text.
 * All three are 1-based (index 0 unused). The lcp array spans 1..n+1
 * with lcp[1] == lcp[n+1] == 0; lcp[i] for 2 <= i <= n is the longest
 * common prefix length of the suffixes at sa[i-1] and sa[i].
 */
struct SuffixStructures {
    std::vector<Pos> sa;
    std::vector<Pos> rank;
    std::vector<Pos> lcp;
    Pos n = 0;
};

// Induced-sorting (SA-IS) construction, linear in n.
std::vector<Pos> build_suffix_array(const Text& text);

// Inverse permutation: rank[sa[j]] == j.
std::vector<Pos> build_rank_array(const std::vector<Pos>& sa);

// Kasai's algorithm, linear in n.
std::vector<Pos> build_lcp_array(const Text& text, const std::vector<Pos>& sa,
                                 const std::vector<Pos>& rank);

SuffixStructures build_suffix_structures(const Text& text);

}  // namespace lrstab
