#include "dcgf/families.hpp"

#include <sstream>

namespace dcgf {

namespace {

Int pow_int(const Int& base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

std::string kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::t1: return "t1";
        case FamilyKind::t2: return "t2";
        case FamilyKind::t3: return "t3";
        case FamilyKind::t4: return "t4";
        case FamilyKind::t5: return "t5";
        case FamilyKind::t6: return "t6";
        case FamilyKind::ones_count: return "ones-count";
        case FamilyKind::zeros_count: return "zeros-count";
        case FamilyKind::thue_morse: return "thue-morse";
        case FamilyKind::ruler_plus_one: return "ruler";
    }
    return "?";
}

FamilySpec FamilySpec::make_t1(Int c) {
    FamilySpec s;
    s.kind = FamilyKind::t1;
    s.c = std::move(c);
    return s;
}

FamilySpec FamilySpec::make_t2(Int c) {
    FamilySpec s;
    s.kind = FamilyKind::t2;
    s.c = std::move(c);
    return s;
}

FamilySpec FamilySpec::make_t3(Int c) {
    FamilySpec s;
    s.kind = FamilyKind::t3;
    s.c = std::move(c);
    return s;
}

FamilySpec FamilySpec::make_t4(Int alpha, Int c, Int d) {
    FamilySpec s;
    s.kind = FamilyKind::t4;
    s.alpha = std::move(alpha);
    s.c = std::move(c);
    s.d = std::move(d);
    return s;
}

FamilySpec FamilySpec::make_t5(Int c, std::vector<Int> tail) {
    FamilySpec s;
    s.kind = FamilyKind::t5;
    s.c = std::move(c);
    s.tail = std::move(tail);
    return s;
}

FamilySpec FamilySpec::make_t6(std::vector<Int> tail) {
    FamilySpec s;
    s.kind = FamilyKind::t6;
    s.tail = std::move(tail);
    s.t6_regularized = true;
    return s;
}

FamilySpec FamilySpec::named(FamilyKind kind) {
    FamilySpec s;
    s.kind = kind;
    return s;
}

void validate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::t1:
        case FamilyKind::t2:
        case FamilyKind::t3:
            if (spec.c == 0)
                throw std::invalid_argument(kind_name(spec.kind) +
                                            " requires |c| > 0");
            break;
        case FamilyKind::t4:
            if (spec.alpha == 0)
                throw std::invalid_argument("t4 requires |alpha| > 0");
            break;
        case FamilyKind::t5:
        case FamilyKind::t6:
            if (spec.tail.empty())
                throw std::invalid_argument(kind_name(spec.kind) +
                                            " requires a tail c_1..c_D with D >= 1");
            if (spec.tail.back() == 0)
                throw std::invalid_argument(kind_name(spec.kind) +
                                            " requires c_D != 0");
            break;
        default:
            break;  // named kinds carry no parameters
    }
}

FamilySpec resolve(const FamilySpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case FamilyKind::ones_count: return FamilySpec::make_t4(1, 0, 1);
        case FamilyKind::zeros_count: return FamilySpec::make_t4(1, 1, 0);
        case FamilyKind::thue_morse: return FamilySpec::make_t3(-1);
        case FamilyKind::ruler_plus_one: return FamilySpec::make_t1(1);
        default: return spec;
    }
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream out;
    out << kind_name(spec.kind);
    switch (spec.kind) {
        case FamilyKind::t1:
        case FamilyKind::t2:
        case FamilyKind::t3:
            out << " c=" << spec.c.str();
            break;
        case FamilyKind::t4:
            out << " alpha=" << spec.alpha.str() << " c=" << spec.c.str()
                << " d=" << spec.d.str();
            break;
        case FamilyKind::t5:
        case FamilyKind::t6: {
            if (spec.kind == FamilyKind::t5) out << " c=" << spec.c.str();
            out << " tail=";
            for (size_t i = 0; i < spec.tail.size(); ++i) {
                if (i) out << ",";
                out << spec.tail[i].str();
            }
            break;
        }
        default:
            break;
    }
    return out.str();
}

int ceil_log2(long long n) {
    if (n < 1) throw std::invalid_argument("ceil_log2 requires n >= 1");
    int k = 0;
    while ((1LL << k) < n) ++k;
    return k;
}

TruncatedSeries build_series(const FamilySpec& raw, long long order) {
    if (order < 2) throw std::invalid_argument("series order must be >= 2");
    FamilySpec spec = resolve(raw);
    if (spec.kind == FamilyKind::t6 && !spec.t6_regularized)
        throw std::invalid_argument(
            "t6 needs an explicit constant-term convention; set "
            "t6_regularized (summands less their constant 1, a_0 = 0)");

    const int top = ceil_log2(order);
    const long long n = order;

    switch (spec.kind) {
        case FamilyKind::t1: {
            auto acc = TruncatedSeries::zeros(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                RationalFunction atom{Polynomial::monomial(pow_int(spec.c, k), e),
                                      Polynomial{1} - Polynomial::monomial(1, e)};
                acc = add(acc, expand(atom, n));
            }
            return acc;
        }
        case FamilyKind::t2: {
            auto acc = TruncatedSeries::zeros(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                RationalFunction atom{
                    Polynomial::monomial(pow_int(spec.c, k), e),
                    Polynomial{1} - Polynomial::monomial(1, 2 * e)};
                acc = add(acc, expand(atom, n));
            }
            return acc;
        }
        case FamilyKind::t3: {
            auto acc = TruncatedSeries::one(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                Polynomial factor = Polynomial{1} + Polynomial::monomial(spec.c, e);
                acc = mul(acc, expand(RationalFunction{factor}, n));
            }
            return acc;
        }
        case FamilyKind::t4: {
            auto acc = TruncatedSeries::zeros(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                Int w = pow_int(spec.alpha, k);
                Polynomial num = Polynomial::monomial(w * spec.d, e) +
                                 Polynomial::monomial(w * spec.c, 2 * e);
                RationalFunction atom{std::move(num),
                                      Polynomial{1} + Polynomial::monomial(1, e)};
                acc = add(acc, expand(atom, n));
            }
            return mul_rational(
                acc, RationalFunction{Polynomial{1},
                                      Polynomial{1} - Polynomial::monomial(1, 1)});
        }
        case FamilyKind::t5: {
            auto acc = TruncatedSeries::one(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                Polynomial factor = Polynomial{1} + Polynomial::monomial(spec.c, e);
                for (size_t i = 0; i < spec.tail.size(); ++i)
                    factor = factor + Polynomial::monomial(
                                          spec.tail[i],
                                          2 * e * static_cast<long long>(i + 1));
                acc = mul(acc, expand(RationalFunction{std::move(factor)}, n));
            }
            return acc;
        }
        case FamilyKind::t6: {
            auto acc = TruncatedSeries::zeros(n);
            for (int k = 0; k <= top; ++k) {
                long long e = 1LL << k;
                // 1/(1 - sum c_i w^i) - 1 == (sum c_i w^i) / (1 - sum c_i w^i)
                Polynomial tail_poly;
                for (size_t i = 0; i < spec.tail.size(); ++i)
                    tail_poly = tail_poly + Polynomial::monomial(
                                                spec.tail[i],
                                                e * static_cast<long long>(i + 1));
                RationalFunction atom{tail_poly, Polynomial{1} - tail_poly};
                acc = add(acc, expand(atom, n));
            }
            return acc;
        }
        default:
            throw std::invalid_argument("unresolved family kind");
    }
}

}  // namespace dcgf
