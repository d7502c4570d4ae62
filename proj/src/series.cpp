#include "dcgf/series.hpp"

#include <algorithm>
#include <sstream>

namespace dcgf {

namespace {

const Int kZero = 0;

void trim(std::vector<Int>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// Indices of nonzero coefficients, the key to keeping sparse factors cheap.
std::vector<long long> nonzero_indices(const std::vector<Int>& coeffs) {
    std::vector<long long> idx;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) idx.push_back(static_cast<long long>(i));
    return idx;
}

}  // namespace

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
    trim(coeffs_);
}

Polynomial Polynomial::constant(Int value) {
    return Polynomial{std::vector<Int>{std::move(value)}};
}

Polynomial Polynomial::monomial(Int value, long long exponent) {
    if (value == 0) return Polynomial{};
    std::vector<Int> c(static_cast<size_t>(exponent) + 1);
    c.back() = std::move(value);
    return Polynomial{std::move(c)};
}

const Int& Polynomial::coeff(long long i) const {
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

long long Polynomial::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<long long>(i);
    return -1;
}

Polynomial Polynomial::shifted(long long exponent) const {
    if (is_zero()) return {};
    std::vector<Int> c(static_cast<size_t>(exponent), 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial{std::move(c)};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial{std::move(c)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial{std::move(c)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial{std::move(c)};
}

Polynomial operator*(const Int& s, const Polynomial& p) {
    std::vector<Int> c = p.coeffs_;
    for (Int& x : c) x *= s;
    return Polynomial{std::move(c)};
}

Polynomial Polynomial::operator-() const {
    std::vector<Int> c = coeffs_;
    for (Int& x : c) x = -x;
    return Polynomial{std::move(c)};
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("rational function denominator is zero");
    const Int& c0 = den_.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument(
            "rational function denominator has constant term " + c0.str() +
            "; must be +1 or -1 for an integer series expansion");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction RationalFunction::operator-() const {
    return {-num_, den_};
}

RationalFunction RationalFunction::divided_by(const RationalFunction& b) const {
    const Int& c0 = b.num_.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw EvalError("division by " + b.num_.str() +
                        ": constant term must be +1 or -1");
    return {num_ * b.den_, den_ * b.num_};
}

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series order must be positive");
}

TruncatedSeries TruncatedSeries::zeros(long long order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    return TruncatedSeries{std::vector<Int>(static_cast<size_t>(order), 0)};
}

TruncatedSeries TruncatedSeries::one(long long order) {
    auto s = zeros(order);
    s.coeffs_[0] = 1;
    return s;
}

long long TruncatedSeries::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<long long>(i);
    return -1;
}

TruncatedSeries TruncatedSeries::prefix(long long order) const {
    if (order < 1 || order > this->order())
        throw std::invalid_argument("prefix order out of range");
    return TruncatedSeries{
        std::vector<Int>(coeffs_.begin(), coeffs_.begin() + order)};
}

TruncatedSeries expand(const RationalFunction& rf, long long order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    const Polynomial& num = rf.num();
    const Polynomial& den = rf.den();
    const Int eps = den.coeff(0);  // +1 or -1, so 1/eps == eps
    auto den_nz = nonzero_indices(den.coeffs());

    std::vector<Int> s(static_cast<size_t>(order), 0);
    for (long long i = 0; i < order; ++i) {
        Int acc = num.coeff(i);
        for (long long j : den_nz) {
            if (j == 0) continue;
            if (j > i) break;
            acc -= den.coeff(j) * s[static_cast<size_t>(i - j)];
        }
        s[static_cast<size_t>(i)] = eps * acc;
    }
    return TruncatedSeries{std::move(s)};
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    long long n = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
    return TruncatedSeries{std::move(c)};
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    long long n = std::min(a.order(), b.order());
    std::vector<Int> c(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) c[static_cast<size_t>(i)] = a[i] - b[i];
    return TruncatedSeries{std::move(c)};
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    long long n = std::min(a.order(), b.order());
    auto nz_a = nonzero_indices(a.coeffs());
    auto nz_b = nonzero_indices(b.coeffs());
    const TruncatedSeries& dense = nz_a.size() >= nz_b.size() ? a : b;
    const TruncatedSeries& sparse = nz_a.size() >= nz_b.size() ? b : a;
    const auto& nz = nz_a.size() >= nz_b.size() ? nz_b : nz_a;

    std::vector<Int> c(static_cast<size_t>(n), 0);
    for (long long j : nz) {
        if (j >= n) break;
        const Int& bj = sparse[j];
        for (long long i = 0; i + j < n; ++i)
            c[static_cast<size_t>(i + j)] += dense[i] * bj;
    }
    return TruncatedSeries{std::move(c)};
}

TruncatedSeries substitute_power(const TruncatedSeries& a, long long m) {
    if (m < 1) throw std::invalid_argument("substitution power must be >= 1");
    long long n = a.order();
    std::vector<Int> c(static_cast<size_t>(n), 0);
    for (long long i = 0; i * m < n; ++i) c[static_cast<size_t>(i * m)] = a[i];
    return TruncatedSeries{std::move(c)};
}

TruncatedSeries mul_rational(const TruncatedSeries& a, const RationalFunction& rf) {
    long long n = a.order();
    const Polynomial& num = rf.num();
    const Polynomial& den = rf.den();

    // a*num first (num is usually sparse), then divide out den in one pass.
    std::vector<Int> t(static_cast<size_t>(n), 0);
    for (long long j : nonzero_indices(num.coeffs())) {
        if (j >= n) break;
        const Int& pj = num.coeff(j);
        for (long long i = 0; i + j < n; ++i)
            t[static_cast<size_t>(i + j)] += a[i] * pj;
    }

    const Int eps = den.coeff(0);
    auto den_nz = nonzero_indices(den.coeffs());
    std::vector<Int> s(static_cast<size_t>(n), 0);
    for (long long i = 0; i < n; ++i) {
        Int acc = std::move(t[static_cast<size_t>(i)]);
        for (long long j : den_nz) {
            if (j == 0) continue;
            if (j > i) break;
            acc -= den.coeff(j) * s[static_cast<size_t>(i - j)];
        }
        s[static_cast<size_t>(i)] = eps * acc;
    }
    return TruncatedSeries{std::move(s)};
}

}  // namespace dcgf
