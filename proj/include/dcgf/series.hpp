#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "dcgf/error.hpp"

namespace dcgf {

/// All coefficient arithmetic is exact; nothing in the library ever rounds.
using Int = boost::multiprecision::cpp_int;

/// Dense integer polynomial. Canonical form has no trailing zeros; the zero
/// polynomial is the empty coefficient list and has degree() == -1.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::vector<Int> coeffs);
    Polynomial(std::initializer_list<Int> coeffs);
    static Polynomial constant(Int value);
    static Polynomial monomial(Int value, long long exponent);

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    /// Coefficient of z^i; zero outside the stored range.
    const Int& coeff(long long i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Index of the lowest nonzero coefficient, or -1 for the zero polynomial.
    long long valuation() const;

    Polynomial shifted(long long exponent) const;  // multiply by z^exponent

    friend Polynomial operator+(const Polynomial&, const Polynomial&);
    friend Polynomial operator-(const Polynomial&, const Polynomial&);
    friend Polynomial operator*(const Polynomial&, const Polynomial&);
    friend Polynomial operator*(const Int&, const Polynomial&);
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    std::string str() const;  // "1 - 2*z^3" style, for messages

  private:
    std::vector<Int> coeffs_;  // coeffs_[i] is the coefficient of z^i
};

/// Quotient of polynomials whose denominator has constant term +1 or -1,
/// which guarantees an integer power-series expansion.
class RationalFunction {
  public:
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial{1}) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    RationalFunction operator-() const;
    /// Throws EvalError when the divisor's numerator has non-unit constant term.
    RationalFunction divided_by(const RationalFunction&) const;

    bool operator==(const RationalFunction&) const = default;

  private:
    Polynomial num_;
    Polynomial den_;
};

/// F(z) mod z^N with exact integer coefficients; immutable after construction.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<Int> coeffs);
    static TruncatedSeries zeros(long long order);
    static TruncatedSeries one(long long order);

    long long order() const { return static_cast<long long>(coeffs_.size()); }
    const Int& operator[](long long i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Index of the lowest nonzero coefficient, or -1 if all stored
    /// coefficients vanish.
    long long valuation() const;
    TruncatedSeries prefix(long long order) const;

    bool operator==(const TruncatedSeries&) const = default;

  private:
    std::vector<Int> coeffs_;
};

/// Power-series expansion of num/den to the requested order, via the linear
/// convolution recurrence. The unit constant term of den keeps everything in
/// the integers.
TruncatedSeries expand(const RationalFunction& rf, long long order);

/// Elementwise sum/difference; a mixed-order pair resolves to the minimum
/// order, so pipelines degrade gracefully instead of inventing coefficients.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Truncated Cauchy product (result order = min of the two).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// F(z) -> F(z^m): result[i*m] = a[i], order unchanged.
TruncatedSeries substitute_power(const TruncatedSeries& a, long long m);

/// a(z) * num/den, equal to mul(a, expand(rf, a.order())) but computed by one
/// convolution pass per polynomial.
TruncatedSeries mul_rational(const TruncatedSeries& a, const RationalFunction& rf);

}  // namespace dcgf
