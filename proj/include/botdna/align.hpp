#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace botdna {

// Scoring parameters for global alignment. Match must be 0 (the similarity
// normalization derives its bounds from that); penalties are non-positive
// integers. A maximal gap run of length g costs open_gap + (g-1)*extend_gap.
struct ScoringScheme {
    std::int64_t match = 0;
    std::int64_t mismatch = -5;
    std::int64_t open_gap = -4;
    std::int64_t extend_gap = -5;

    void validate() const;  // throws std::invalid_argument on violations
};

struct AlignmentResult {
    std::int64_t score = 0;
    std::size_t aligned_length = 0;
    std::size_t n_matches = 0;
    std::size_t n_mismatches = 0;
    std::size_t n_open_gaps = 0;
    std::size_t n_extended_gaps = 0;
};

// Optimal global alignment under affine gap costs (three-state dynamic
// programming, O(|a|*|b|)). Among score-optimal alignments the one with the
// smallest aligned length is returned; remaining ties prefer match/mismatch
// over gap states during traceback. Scores are exact integers.
// Throws on an empty input ("empty sequence").
AlignmentResult global_align(std::string_view a, std::string_view b,
                             const ScoringScheme& scheme);

// Min-Max normalized alignment score in [0,1]:
//   (score - min_possible) / (0 - min_possible)
// with min_possible = aligned_length * min(mismatch, open_gap, extend_gap).
// An all-zero scheme yields 1.
double similarity(std::string_view a, std::string_view b, const ScoringScheme& scheme);

// Classic edit distance; empty inputs allowed.
std::size_t levenshtein(std::string_view a, std::string_view b);

}  // namespace botdna
