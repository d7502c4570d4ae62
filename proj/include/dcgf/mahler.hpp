#pragma once

#include <vector>

#include "dcgf/families.hpp"
#include "dcgf/series.hpp"

namespace dcgf {

/// c_0(z) F(z) + c_1(z) F(z^2) + ... + c_depth(z) F(z^(2^depth)) = rhs(z),
/// stored denominator-cleared: the c_k are polynomials, only the right-hand
/// side may be rational.
struct MahlerEquation {
    std::vector<Polynomial> coeffs;  // c_0..c_depth
    RationalFunction rhs;

    int depth() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Throws std::invalid_argument when the equation violates its invariants
/// (depth < 1, all coefficient polynomials zero).
void validate(const MahlerEquation& eq);

struct EquationCheck {
    bool pass = false;
    /// Exponents [0, verified_order) were checked; truncation shortens the
    /// window by the largest coefficient-polynomial degree, and callers must
    /// not claim more than this.
    long long verified_order = 0;
    long long fail_exponent = -1;  // set iff !pass
    Int residual = 0;              // set iff !pass
};

/// Substitutes F into the equation and scans the residual. FAIL is a result,
/// not an error.
EquationCheck check_equation(const MahlerEquation& eq, const TruncatedSeries& F);

/// The depth-1 equation obtained by splitting the k=0 term off the family's
/// sum or product, in cleared form. For t6 this is the equation of the
/// regularized series; it has no counterpart in closed form elsewhere and is
/// validated empirically.
MahlerEquation equation_for_family(const FamilySpec& spec);

/// Equation file format, one directive per line ('#' comments allowed):
///   depth D
///   c<k> <coefficients, constant term first>
///   rhs <numerator coefficients> / <denominator coefficients>
/// Unlisted c<k> are zero; a missing rhs means 0. Throws ParseError with the
/// offending line number.
MahlerEquation parse_equation(const std::string& text);

}  // namespace dcgf
