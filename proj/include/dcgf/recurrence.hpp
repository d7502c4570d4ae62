#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dcgf/families.hpp"
#include "dcgf/series.hpp"

namespace dcgf {

/// b_n = sum_{i=1..D} coeffs[i-1] * b_{n-i}, seeded by init (b_0..b_{D-1}).
struct LinearRecurrence {
    std::vector<Int> coeffs;
    std::vector<Int> init;
};

std::vector<Int> eval_linear(const LinearRecurrence& lr, long long order);

/// One parity branch of a divide-and-conquer recurrence:
///   a_{2n+parity} = on_half*a_n + sum_i on_back[i-1]*a_{n-i}
///                   + constant + on_aux*b_{2n+parity},
/// valid for n >= min_n. Reads below index 0 yield 0.
struct AffineRule {
    Int on_half = 0;
    std::vector<Int> on_back;
    Int constant = 0;
    Int on_aux = 0;
    long long min_n = 0;
};

struct DCRecurrence {
    std::map<long long, Int> base;
    AffineRule even;  // covers a_{2n} for n >= even.min_n
    AffineRule odd;   // covers a_{2n+1} for n >= odd.min_n
    std::optional<LinearRecurrence> aux;  // required iff a rule uses on_aux
};

enum class EvalStrategy { bottom_up, memoized_top_down };

/// First `order` values of the recurrence. Both strategies produce identical
/// results; the choice only matters for testing evaluation-order independence.
/// Throws CoverageError if some index in [0, order) is not covered by exactly
/// one of base/even/odd.
std::vector<Int> eval_recurrence(const DCRecurrence& rec, long long order,
                                 EvalStrategy strategy = EvalStrategy::bottom_up);

/// The recurrence whose values are the coefficients of build_series(spec).
/// Conventions: t3 base a_0 = 1; t4 even rule applies for n >= 1; t6 base
/// a_0 = 0 with b taken as the expansion of 1/(1 - sum c_i z^i).
DCRecurrence family_recurrence(const FamilySpec& spec);

/// Binary-digit statistics: e1 = count of ones, e0 = count of zeros within
/// the binary length, len = binary length (len(0) = 0), v2 = exponent of the
/// highest power of 2 dividing n (empty for n = 0).
struct BitStats {
    int e0 = 0;
    int e1 = 0;
    int len = 0;
    std::optional<int> v2;
};

BitStats bit_stats(unsigned long long n);

/// v2(n) for n >= 1; throws std::invalid_argument for n = 0.
int v2_of(unsigned long long n);

/// sum_i 2^(e0(i)) z^i, built directly from the digit statistics. Not known
/// to be expressible through the six families.
TruncatedSeries two_pow_e0_series(long long order);

}  // namespace dcgf
