#pragma once

#include <vector>

#include "dcgf/families.hpp"
#include "dcgf/series.hpp"

namespace dcgf {

/// A finite slice of an integer sequence; values[j] is the value at index
/// offset + j.
struct SequenceSample {
    long long offset = 0;
    std::vector<Int> values;

    bool operator==(const SequenceSample&) const = default;
};

/// Parameter box for the exhaustive search.
struct FitBounds {
    long long max_c = 3;
    long long max_alpha = 3;
    long long max_d = 3;
    int max_depth = 2;      // D for t5/t6 tails
    long long max_tail = 2; // |c_i|
};

struct FitMatch {
    FamilySpec spec;
    /// Family index aligned with the sample's first value. Candidates are the
    /// sample offset and offset +- 1, absorbing catalog offset conventions.
    long long align = 0;
    long long verified_length = 0;
};

struct FitReport {
    std::vector<FitMatch> matches;  // canonical order: kind, then parameters
    FitBounds bounds;
};

/// Enumerates every valid family spec in the box and reports each one that
/// reproduces the overlapping sample exactly under some alignment. Samples
/// shorter than 8 values over-match and are rejected.
FitReport classify(const SequenceSample& sample, const FitBounds& bounds = {});

}  // namespace dcgf
