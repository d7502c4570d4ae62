#pragma once

#include <vector>

#include "dcgf/series.hpp"

namespace dcgf {

/// Linear representation of a 2-rational sequence:
///   u_n = lambda * A_{n_l} * ... * A_{n_0} * gamma,
/// where n_l...n_0 is the binary expansion of n, most significant bit first.
struct LinearRepresentation {
    std::vector<Int> lambda;             // 1 x dim
    std::vector<std::vector<Int>> a0;    // dim x dim
    std::vector<std::vector<Int>> a1;    // dim x dim
    std::vector<Int> gamma;              // dim x 1

    size_t dim() const { return lambda.size(); }
};

/// Throws std::invalid_argument on inconsistent dimensions.
void validate(const LinearRepresentation& rep);

/// Evaluates the matrix product right-to-left (vector first), so each bit
/// costs one matrix-vector product. n = 0 is the empty product: lambda*gamma.
/// Exactly len(n) factors are used; no padding with leading zeros.
Int eval_linear_rep(const LinearRepresentation& rep, unsigned long long n);

/// A dim-2 representation of the t4 recurrence a_0 = 0, a_{2n} = alpha a_n + c,
/// a_{2n+1} = alpha a_n + d. The state vector (p, a) carries p = alpha^(bits
/// processed so far) alongside the accumulator, which makes the bit at
/// position j contribute with weight alpha^j under the LSB-first factor order
/// of the product above.
LinearRepresentation rep_for_affine(const Int& alpha, const Int& c, const Int& d);

}  // namespace dcgf
