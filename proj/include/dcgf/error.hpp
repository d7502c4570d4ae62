#pragma once

#include <stdexcept>
#include <string>

namespace dcgf {

/// Base class for runtime failures raised by this library. Precondition
/// violations (bad family parameters, bad bounds) use std::invalid_argument
/// instead, so callers can tell usage errors from evaluation errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation failed (non-unit denominator, non-elementary loop body, ...).
struct EvalError : Error {
    using Error::Error;
};

/// Text could not be parsed. Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
    int line;
    int column;
};

/// A recurrence left an index uncovered (or covered twice).
struct CoverageError : Error {
    CoverageError(const std::string& what, long long index_)
        : Error(what), index(index_) {}
    long long index;
};

}  // namespace dcgf
