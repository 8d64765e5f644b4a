#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "botdna/dna.hpp"

namespace botdna {

// One point of the common-substring curve. For group size k, `witness` is a
// longest substring occurring in at least k distinct sequences (ties broken
// by lexicographic order) and `members` lists every account whose sequence
// contains it, sorted by id. A zero-length witness means no non-empty
// substring is shared by k sequences; every account is then a member.
struct CurveEntry {
    std::size_t group_size = 0;
    std::size_t length = 0;
    std::string witness;
    std::vector<std::string> members;
};

struct LcsCurve {
    std::vector<CurveEntry> entries;  // one entry per k in {2..N}, ascending
};

// Builds the whole curve in one pass over a generalized suffix array with LCP
// and document-count information; near-linear in total input length.
// Requires >= 2 sequences ("curve undefined" otherwise), all non-empty, with
// distinct account ids.
LcsCurve compute_lcs_curve(const std::vector<DigitalDna>& dnas);

// Ongoing relative change of curve lengths and the drop threshold -tau*sigma.
// A change with zero denominator is defined as 0 (a zero-length entry cannot
// drop further). sigma is the population standard deviation.
struct RelativeChangeSeries {
    std::vector<double> values;  // values[j] relates entries j and j+1
    double sigma = 0.0;
    double threshold = 0.0;
};

RelativeChangeSeries relative_changes(const LcsCurve& curve, double tau);

// Smallest index j with values[j] strictly below the threshold whose
// preceding curve entry (index j, the last one before the drop) has
// group_size >= min_group_size. Entry j of a full curve has group_size j+2.
std::optional<std::size_t> first_significant_drop(const RelativeChangeSeries& series,
                                                  std::size_t min_group_size);

// A cluster of accounts sharing a common substring.
struct Species {
    int id = 0;
    std::vector<std::string> members;  // sorted account ids
    std::string lcs;
    double mean_dna_length = 0.0;
};

// Iteratively removes the members of the entry before each first significant
// drop into a new species, recomputing the curve on the remainder, until no
// drop qualifies or fewer than min_group_size + 1 accounts remain. Whatever
// is left forms one residual species (its lcs is the longest substring
// common to all of its members). The result partitions the input accounts.
std::vector<Species> extract_species(const std::vector<DigitalDna>& dnas, double tau,
                                     std::size_t min_group_size);

}  // namespace botdna
