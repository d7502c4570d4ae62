#include "dcgf/mahler.hpp"

#include <random>

#include "dcgf/recurrence.hpp"
#include "doctest.h"

using namespace dcgf;

namespace {

// Series built straight from digit statistics, bypassing the family
// machinery, so the identity checks below stand on their own.
TruncatedSeries ones_count_series(long long order) {
    std::vector<Int> c(static_cast<size_t>(order));
    for (long long i = 0; i < order; ++i)
        c[static_cast<size_t>(i)] = bit_stats(static_cast<unsigned long long>(i)).e1;
    return TruncatedSeries{std::move(c)};
}

TruncatedSeries thue_morse_series(long long order) {
    std::vector<Int> c(static_cast<size_t>(order));
    for (long long i = 0; i < order; ++i)
        c[static_cast<size_t>(i)] =
            bit_stats(static_cast<unsigned long long>(i)).e1 % 2 == 0 ? 1 : -1;
    return TruncatedSeries{std::move(c)};
}

MahlerEquation ones_count_identity() {
    // (1 - z^2) F(z^2) - (1 - z) F(z) = -z / (1 + z)
    return {{-(Polynomial{1, -1}), Polynomial{1, 0, -1}},
            RationalFunction{Polynomial{0, -1}, Polynomial{1, 1}}};
}

std::vector<FamilySpec> spec_grid(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> small_nz(1, 3);
    std::uniform_int_distribution<int> depth(1, 3);
    std::uniform_int_distribution<int> tail_coeff(-2, 2);
    std::uniform_int_distribution<int> tail_last(1, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    auto nonzero = [&] { return Int((sign(rng) ? 1 : -1) * small_nz(rng)); };
    auto tail = [&] {
        std::vector<Int> t(static_cast<size_t>(depth(rng)));
        for (auto& x : t) x = tail_coeff(rng);
        t.back() = (sign(rng) ? 1 : -1) * tail_last(rng);
        return t;
    };
    std::vector<FamilySpec> specs;
    while (static_cast<int>(specs.size()) < count) {
        switch (kind(rng)) {
            case 0: specs.push_back(FamilySpec::make_t1(nonzero())); break;
            case 1: specs.push_back(FamilySpec::make_t2(nonzero())); break;
            case 2: specs.push_back(FamilySpec::make_t3(nonzero())); break;
            case 3: specs.push_back(FamilySpec::make_t4(nonzero(), small(rng), small(rng))); break;
            case 4: specs.push_back(FamilySpec::make_t5(small(rng), tail())); break;
            default: specs.push_back(FamilySpec::make_t6(tail())); break;
        }
    }
    return specs;
}

}  // namespace

TEST_CASE("ones-count identity holds to order >= 256") {
    auto F = ones_count_series(300);
    auto result = check_equation(ones_count_identity(), F);
    CHECK(result.pass);
    CHECK(result.verified_order >= 256);
}

TEST_CASE("thue-morse identity holds to order >= 256") {
    // (1 - z) T(z^2) - T(z) = 0
    MahlerEquation eq{{Polynomial{-1}, Polynomial{1, -1}},
                      RationalFunction{Polynomial{}}};
    auto result = check_equation(eq, thue_morse_series(300));
    CHECK(result.pass);
    CHECK(result.verified_order >= 256);
}

TEST_CASE("2^e0 equation holds for the oracle-built series") {
    // -F(z) + (z + 2) F(z^2) = 1
    MahlerEquation eq{{Polynomial{-1}, Polynomial{2, 1}},
                      RationalFunction{Polynomial{1}}};
    auto result = check_equation(eq, two_pow_e0_series(300));
    CHECK(result.pass);
    CHECK(result.verified_order >= 256);
}

TEST_CASE("a perturbed coefficient fails at that exponent") {
    auto F = ones_count_series(300);
    auto coeffs = F.coeffs();
    coeffs[137] += 1;
    auto result = check_equation(ones_count_identity(), TruncatedSeries{coeffs});
    CHECK_FALSE(result.pass);
    // The equation couples exponent 137 of F with exponents 137/138 of the
    // residual through c_0 = -(1 - z); the earliest disturbed exponent is 137.
    CHECK(result.fail_exponent == 137);
    CHECK(result.residual != 0);
}

TEST_CASE("equation_for_family: t3 with c=-1 is the thue-morse equation") {
    auto eq = equation_for_family(FamilySpec::make_t3(-1));
    REQUIRE(eq.depth() == 1);
    CHECK(eq.coeffs[0] == Polynomial{1});
    CHECK(eq.coeffs[1] == -(Polynomial{1, -1}));
    CHECK(eq.rhs.num().is_zero());

    auto result = check_equation(eq, thue_morse_series(300));
    CHECK(result.pass);
    CHECK(result.verified_order >= 256);
}

TEST_CASE("equation_for_family: t1 with c=1 in cleared form") {
    auto eq = equation_for_family(FamilySpec::make_t1(1));
    CHECK(eq.coeffs[0] == Polynomial{1, -1});
    CHECK(eq.coeffs[1] == -(Polynomial{1, -1}));
    CHECK(eq.rhs.num() == Polynomial{0, 1});
    auto result = check_equation(eq, build_series(FamilySpec::make_t1(1), 300));
    CHECK(result.pass);
    CHECK(result.verified_order >= 256);
}

TEST_CASE("equation_for_family: t4 ones-count matches the worked identity") {
    auto eq = equation_for_family(FamilySpec::make_t4(1, 0, 1));
    CHECK(eq.coeffs[0] == Polynomial{1, -1});
    CHECK(eq.coeffs[1] == -(Polynomial{1, 0, -1}));
    // Scaled by -1 this is the ones-count identity; both verdicts agree.
    auto F = ones_count_series(300);
    CHECK(check_equation(eq, F).pass);
    CHECK(check_equation(ones_count_identity(), F).pass);
}

TEST_CASE("round trip: every family satisfies its derived equation") {
    for (const auto& spec : spec_grid(555, 30)) {
        CAPTURE(describe(spec));
        auto result =
            check_equation(equation_for_family(spec), build_series(spec, 160));
        CHECK(result.pass);
        CHECK(result.verified_order >= 128);
    }
}

TEST_CASE("verdict is invariant under scaling by a nonzero polynomial") {
    std::mt19937 rng(9090);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> deg(0, 3);
    auto random_nonzero_poly = [&] {
        while (true) {
            std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
            for (auto& x : c) x = coeff(rng);
            Polynomial p{std::move(c)};
            if (!p.is_zero()) return p;
        }
    };
    auto scale_eq = [](const MahlerEquation& eq, const Polynomial& m) {
        MahlerEquation scaled = eq;
        for (auto& c : scaled.coeffs) c = c * m;
        scaled.rhs = RationalFunction{eq.rhs.num() * m, eq.rhs.den()};
        return scaled;
    };

    for (const auto& spec : spec_grid(31415, 10)) {
        auto eq = equation_for_family(spec);
        auto F = build_series(spec, 200);
        auto m = random_nonzero_poly();
        CHECK(check_equation(eq, F).pass);
        CHECK(check_equation(scale_eq(eq, m), F).pass);

        auto coeffs = F.coeffs();
        coeffs[63] += 1;
        TruncatedSeries broken{coeffs};
        CHECK_FALSE(check_equation(eq, broken).pass);
        CHECK_FALSE(check_equation(scale_eq(eq, m), broken).pass);
    }
}

TEST_CASE("parse_equation reads the documented format") {
    auto eq = parse_equation(
        "# worked example\n"
        "depth 1\n"
        "c0 -1 1\n"
        "c1 1 0 -1\n"
        "rhs 0 -1 / 1 1\n");
    CHECK(eq.depth() == 1);
    CHECK(eq.coeffs[0] == Polynomial{-1, 1});
    CHECK(eq.coeffs[1] == Polynomial{1, 0, -1});
    CHECK(eq.rhs.num() == Polynomial{0, -1});
    CHECK(eq.rhs.den() == Polynomial{1, 1});
    CHECK(check_equation(eq, ones_count_series(300)).pass);

    // Unlisted coefficients are zero; a missing rhs means 0.
    auto sparse = parse_equation("depth 2\nc0 1\nc2 -1\n");
    CHECK(sparse.coeffs[1].is_zero());
    CHECK(sparse.rhs.num().is_zero());
}

TEST_CASE("parse_equation rejects malformed input with the line number") {
    CHECK_THROWS_AS(parse_equation(""), ParseError);
    CHECK_THROWS_AS(parse_equation("c0 1\ndepth 1\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 0\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 1\nc5 1\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 1\nc0 one\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 1\nc0 1\nrhs 1\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 1\nc0 1\nrhs 1 / 2\n"), ParseError);
    CHECK_THROWS_AS(parse_equation("depth 1\nbogus 1\n"), ParseError);
    try {
        parse_equation("depth 1\nc0 1\nc1 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    // All-zero coefficient lists violate the equation invariant.
    CHECK_THROWS_AS(parse_equation("depth 1\nrhs 1 / 1\n"), ParseError);
}

TEST_CASE("degenerate equations are rejected") {
    CHECK_THROWS_AS(
        check_equation(MahlerEquation{{Polynomial{1}}, RationalFunction{Polynomial{}}},
                       TruncatedSeries::one(8)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        check_equation(
            MahlerEquation{{Polynomial{}, Polynomial{}}, RationalFunction{Polynomial{}}},
            TruncatedSeries::one(8)),
        std::invalid_argument);
}
