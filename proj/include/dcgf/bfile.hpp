#pragma once

#include <string>
#include <vector>

#include "dcgf/fit.hpp"
#include "dcgf/series.hpp"

namespace dcgf {

/// Parses OEIS b-file text: blank lines and '#' comments are ignored, every
/// other line is "index value", indices must be consecutive. Throws
/// ParseError carrying the offending 1-based line number.
SequenceSample parse_bfile(const std::string& text);

/// Canonical b-file text: one "index value" line per entry, single spaces.
std::string to_bfile(const SequenceSample& sample);

struct SeqCompare {
    bool pass = false;
    long long overlap = 0;
    long long fail_index = 0;  // set iff !pass
    Int expected;              // sample value at fail_index
    Int actual;                // generated value at fail_index
};

/// Compares the sample against generated[i] placed at index
/// generated_offset + i over the overlapping index range. Throws
/// std::invalid_argument when the overlap is empty.
SeqCompare compare(const SequenceSample& sample, const std::vector<Int>& generated,
                   long long generated_offset);

}  // namespace dcgf
