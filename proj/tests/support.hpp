// Shared test helpers: a random generator for DSL expressions that stay
// inside the published grammar and always satisfy the per-iteration
// valuation checks.
#pragma once

#include <memory>
#include <random>

#include "dcgf/dsl.hpp"

namespace dcgf_test {

inline dcgf::dsl::ExprPtr ast_number(dcgf::Int v) {
    auto e = std::make_shared<dcgf::dsl::Expr>();
    e->kind = dcgf::dsl::Expr::Kind::number;
    e->number = std::move(v);
    return e;
}

inline dcgf::dsl::ExprPtr ast_unknown() {
    auto e = std::make_shared<dcgf::dsl::Expr>();
    e->kind = dcgf::dsl::Expr::Kind::unknown;
    return e;
}

inline dcgf::dsl::ExprPtr ast_node(dcgf::dsl::Expr::Kind kind, dcgf::dsl::ExprPtr lhs,
                                   dcgf::dsl::ExprPtr rhs = nullptr) {
    auto e = std::make_shared<dcgf::dsl::Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

inline dcgf::dsl::ExprPtr ast_tower_pow(int shift, dcgf::Int mult) {
    auto e = std::make_shared<dcgf::dsl::Expr>();
    e->kind = dcgf::dsl::Expr::Kind::pow;
    e->lhs = ast_unknown();
    e->exponent.kind = dcgf::dsl::ExponentShape::Kind::tower;
    e->exponent.shift = shift;
    e->exponent.multiplier = std::move(mult);
    return e;
}

inline dcgf::dsl::ExprPtr ast_k_power(dcgf::Int base, int shift) {
    auto e = std::make_shared<dcgf::dsl::Expr>();
    e->kind = dcgf::dsl::Expr::Kind::pow;
    e->lhs = ast_number(std::move(base));
    e->exponent.kind = dcgf::dsl::ExponentShape::Kind::k_plus;
    e->exponent.shift = shift;
    return e;
}

inline dcgf::dsl::ExprPtr random_expression(std::mt19937& rng) {
    using dcgf::Int;
    using dcgf::dsl::Expr;
    using dcgf::dsl::ExprPtr;

    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> shift(0, 1);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    auto nonzero = [&] {
        int v = small(rng);
        return Int(v == 0 ? 1 : v);
    };

    auto tower_atom = [&] { return ast_tower_pow(shift(rng), mult(rng)); };
    // Sum bodies keep a tower monomial factor, so their valuation is >= 2^k.
    auto sum_body = [&]() -> ExprPtr {
        ExprPtr body = tower_atom();
        if (coin(rng))
            body = ast_node(Expr::Kind::mul, ast_k_power(nonzero(), shift(rng)), body);
        if (coin(rng)) body = ast_node(Expr::Kind::mul, ast_number(nonzero()), body);
        if (coin(rng)) {
            ExprPtr den = coin(rng)
                              ? ast_node(Expr::Kind::add, ast_number(1), tower_atom())
                              : ast_node(Expr::Kind::sub, ast_number(1), tower_atom());
            body = ast_node(Expr::Kind::div, body, den);
        }
        return body;
    };
    // Product bodies are 1 + tower-monomial terms.
    auto prod_body = [&]() -> ExprPtr {
        ExprPtr body = ast_node(Expr::Kind::add, ast_number(1),
                                ast_node(Expr::Kind::mul, ast_number(nonzero()),
                                         tower_atom()));
        if (coin(rng))
            body = ast_node(Expr::Kind::add, body,
                            ast_node(Expr::Kind::mul, ast_number(nonzero()),
                                     ast_tower_pow(1, mult(rng))));
        return body;
    };
    auto loop = [&]() -> ExprPtr {
        return coin(rng) ? ast_node(Expr::Kind::sum, sum_body())
                         : ast_node(Expr::Kind::prod, prod_body());
    };
    auto prefactor = [&]() -> ExprPtr {
        switch (pick(rng)) {
            case 0:
                return ast_node(Expr::Kind::div, ast_number(1),
                                ast_node(Expr::Kind::sub, ast_number(1), ast_unknown()));
            case 1:
                return ast_node(Expr::Kind::add, ast_number(1),
                                ast_node(Expr::Kind::mul, ast_number(nonzero()),
                                         ast_unknown()));
            default:
                return ast_number(nonzero());
        }
    };

    switch (pick(rng)) {
        case 0: return loop();
        case 1: return ast_node(Expr::Kind::mul, prefactor(), loop());
        default:
            return ast_node(coin(rng) ? Expr::Kind::add : Expr::Kind::sub, loop(),
                            loop());
    }
}

}  // namespace dcgf_test
