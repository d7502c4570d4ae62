#include "dcgf/mahler.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dcgf {

void validate(const MahlerEquation& eq) {
    if (eq.depth() < 1)
        throw std::invalid_argument("equation depth must be >= 1");
    if (eq.depth() > 32)
        throw std::invalid_argument("equation depth must be <= 32");
    bool all_zero = std::all_of(eq.coeffs.begin(), eq.coeffs.end(),
                                [](const Polynomial& p) { return p.is_zero(); });
    if (all_zero)
        throw std::invalid_argument("coefficient polynomials must not all be zero");
}

EquationCheck check_equation(const MahlerEquation& eq, const TruncatedSeries& F) {
    validate(eq);
    if (F.order() < 2) throw std::invalid_argument("series order must be >= 2");

    const long long n = F.order();
    long long max_deg = 0;
    for (const Polynomial& p : eq.coeffs) max_deg = std::max(max_deg, std::max(p.degree(), 0LL));

    TruncatedSeries residual = sub(TruncatedSeries::zeros(n), expand(eq.rhs, n));
    for (size_t k = 0; k < eq.coeffs.size(); ++k) {
        if (eq.coeffs[k].is_zero()) continue;
        auto term = substitute_power(F, 1LL << k);
        residual = add(residual, mul_rational(term, RationalFunction{eq.coeffs[k]}));
    }

    EquationCheck result;
    result.verified_order = std::max(n - max_deg, 0LL);
    result.pass = true;
    for (long long i = 0; i < result.verified_order; ++i) {
        if (residual[i] != 0) {
            result.pass = false;
            result.fail_exponent = i;
            result.residual = residual[i];
            break;
        }
    }
    return result;
}

MahlerEquation equation_for_family(const FamilySpec& raw) {
    FamilySpec spec = resolve(raw);
    const Polynomial one{1};
    const Polynomial z = Polynomial::monomial(1, 1);

    switch (spec.kind) {
        case FamilyKind::t1: {
            // F = z/(1-z) + c F(z^2), cleared by (1-z)
            Polynomial c0 = one - z;
            return {{c0, -(spec.c * c0)}, RationalFunction{z}};
        }
        case FamilyKind::t2: {
            // F = z/(1-z^2) + c F(z^2), cleared by (1-z^2)
            Polynomial c0 = one - Polynomial::monomial(1, 2);
            return {{c0, -(spec.c * c0)}, RationalFunction{z}};
        }
        case FamilyKind::t3: {
            // F = (1 + c z) F(z^2)
            return {{one, -(one + Polynomial::monomial(spec.c, 1))},
                    RationalFunction{Polynomial{}}};
        }
        case FamilyKind::t4: {
            // (1-z) F = (d z + c z^2)/(1+z) + alpha (1-z^2) F(z^2)
            Polynomial num = Polynomial::monomial(spec.d, 1) +
                             Polynomial::monomial(spec.c, 2);
            return {{one - z,
                     -(spec.alpha * (one - Polynomial::monomial(1, 2)))},
                    RationalFunction{std::move(num), one + z}};
        }
        case FamilyKind::t5: {
            // F = (1 + c z + sum_i c_i z^(2i)) F(z^2)
            Polynomial factor = one + Polynomial::monomial(spec.c, 1);
            for (size_t i = 0; i < spec.tail.size(); ++i)
                factor = factor + Polynomial::monomial(
                                      spec.tail[i], 2 * static_cast<long long>(i + 1));
            return {{one, -factor}, RationalFunction{Polynomial{}}};
        }
        case FamilyKind::t6: {
            if (!spec.t6_regularized)
                throw std::invalid_argument(
                    "t6 needs an explicit constant-term convention; set "
                    "t6_regularized (summands less their constant 1, a_0 = 0)");
            // F - F(z^2) = (sum c_i z^i) / (1 - sum c_i z^i)
            Polynomial tail_poly;
            for (size_t i = 0; i < spec.tail.size(); ++i)
                tail_poly = tail_poly + Polynomial::monomial(
                                            spec.tail[i], static_cast<long long>(i + 1));
            return {{one, -one},
                    RationalFunction{tail_poly, one - tail_poly}};
        }
        default:
            throw std::invalid_argument("unresolved family kind");
    }
}

namespace {

std::vector<Int> parse_coeff_list(std::istringstream& in, int line_no) {
    std::vector<Int> coeffs;
    std::string tok;
    while (in >> tok) {
        try {
            coeffs.emplace_back(tok);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) +
                                 ": bad integer \"" + tok + "\"",
                             line_no, 1);
        }
    }
    return coeffs;
}

}  // namespace

MahlerEquation parse_equation(const std::string& text) {
    std::optional<int> depth;
    std::vector<Polynomial> coeffs;
    std::optional<RationalFunction> rhs;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream fields(line);
        std::string head;
        fields >> head;
        if (head == "depth") {
            int d = -1;
            if (!(fields >> d) || d < 1 || d > 32)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": depth must be an integer in [1, 32]",
                                 line_no, 1);
            depth = d;
            coeffs.assign(static_cast<size_t>(d) + 1, Polynomial{});
        } else if (head.size() > 1 && head[0] == 'c') {
            if (!depth)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": depth must come before coefficients",
                                 line_no, 1);
            int k = -1;
            try {
                k = std::stoi(head.substr(1));
            } catch (const std::exception&) {
                k = -1;
            }
            if (k < 0 || k > *depth)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": coefficient index out of range in \"" +
                                     head + "\"",
                                 line_no, 1);
            coeffs[static_cast<size_t>(k)] = Polynomial{parse_coeff_list(fields, line_no)};
        } else if (head == "rhs") {
            std::vector<Int> num, den;
            std::string tok;
            bool after_slash = false;
            while (fields >> tok) {
                if (tok == "/") {
                    after_slash = true;
                    continue;
                }
                try {
                    (after_slash ? den : num).emplace_back(tok);
                } catch (const std::exception&) {
                    throw ParseError("line " + std::to_string(line_no) +
                                         ": bad integer \"" + tok + "\"",
                                     line_no, 1);
                }
            }
            if (!after_slash || den.empty())
                throw ParseError("line " + std::to_string(line_no) +
                                     ": rhs needs \"num / den\"",
                                 line_no, 1);
            try {
                rhs = RationalFunction{Polynomial{std::move(num)},
                                       Polynomial{std::move(den)}};
            } catch (const std::invalid_argument& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                                 line_no, 1);
            }
        } else {
            throw ParseError("line " + std::to_string(line_no) +
                                 ": unknown directive \"" + head + "\"",
                             line_no, 1);
        }
    }
    if (!depth) throw ParseError("missing depth line", line_no, 1);

    MahlerEquation eq{std::move(coeffs),
                      rhs.value_or(RationalFunction{Polynomial{}})};
    try {
        validate(eq);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    return eq;
}

}  // namespace dcgf
