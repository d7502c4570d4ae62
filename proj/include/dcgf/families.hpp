#pragma once

#include <string>
#include <vector>

#include "dcgf/series.hpp"

namespace dcgf {

/// The six parameterized divide-and-conquer families plus a few named
/// sequences that are aliases for specific parameter choices.
enum class FamilyKind {
    t1,  // sum_k c^k z^(2^k) / (1 - z^(2^k))
    t2,  // sum_k c^k z^(2^k) / (1 - z^(2^(k+1)))
    t3,  // prod_k (1 + c z^(2^k))
    t4,  // 1/(1-z) sum_k alpha^k (d z^(2^k) + c z^(2^(k+1))) / (1 + z^(2^k))
    t5,  // prod_k (1 + c z^(2^k) + sum_i c_i z^(2^(k+1) i))
    t6,  // sum_k (1 / (1 - sum_i c_i z^(2^k i)) - 1), regularized
    ones_count,      // t4 alpha=1, c=0, d=1
    zeros_count,     // t4 alpha=1, c=1, d=0
    thue_morse,      // t3 c=-1
    ruler_plus_one,  // t1 c=1
};

std::string kind_name(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::t1;
    Int c = 0;
    Int alpha = 0;
    Int d = 0;
    std::vector<Int> tail;  // c_1..c_D for t5/t6

    // The literal t6 sum has a divergent constant term; building it requires
    // opting in to the regularized convention (each summand less its constant
    // 1, a_0 = 0). The factories below set this for you.
    bool t6_regularized = false;

    static FamilySpec make_t1(Int c);
    static FamilySpec make_t2(Int c);
    static FamilySpec make_t3(Int c);
    static FamilySpec make_t4(Int alpha, Int c, Int d);
    static FamilySpec make_t5(Int c, std::vector<Int> tail);
    static FamilySpec make_t6(std::vector<Int> tail);
    static FamilySpec named(FamilyKind kind);

    bool operator==(const FamilySpec&) const = default;
};

/// Throws std::invalid_argument citing the violated constraint.
void validate(const FamilySpec& spec);

/// Resolves the named kinds to their parameterized equivalents; parameterized
/// specs pass through (validated).
FamilySpec resolve(const FamilySpec& spec);

/// Human-readable parameter summary, e.g. "t4 alpha=2 c=0 d=1".
std::string describe(const FamilySpec& spec);

/// Order-N truncation of the family's generating function. Sums and products
/// run k = 0..ceil(log2 N) inclusive; every omitted term has valuation >= N,
/// so the truncation is exact.
TruncatedSeries build_series(const FamilySpec& spec, long long order);

/// Smallest K with 2^K >= n (n >= 1).
int ceil_log2(long long n);

}  // namespace dcgf
