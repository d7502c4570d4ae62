#pragma once

#include <memory>
#include <string>

#include "dcgf/families.hpp"
#include "dcgf/series.hpp"

namespace dcgf::dsl {

/// Exponent expressions are restricted to the shapes the divide-and-conquer
/// grammar needs: nonnegative integer constants, k or k+1 (for integer
/// bases), and 2^(k+shift) * multiplier (for the unknown z).
struct ExponentShape {
    enum class Kind { constant, k_plus, tower };
    Kind kind = Kind::constant;
    Int constant = 0;    // constant
    int shift = 0;       // k_plus / tower: 0 for k, 1 for k+1
    Int multiplier = 1;  // tower

    bool uses_k() const { return kind != Kind::constant; }
    bool operator==(const ExponentShape&) const = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST. Loop bodies (`sum(k){...}`, `prod(k){...}`) are rational in
/// z^(2^k) by construction: they cannot contain nested loops, and k occurs
/// only in exponents.
struct Expr {
    enum class Kind { number, unknown, add, sub, mul, div, neg, pow, sum, prod };
    Kind kind;
    Int number;             // number
    ExprPtr lhs, rhs;       // binary ops; lhs also holds neg operand,
                            // pow base, and sum/prod body
    ExponentShape exponent; // pow
};

/// Recursive-descent parse of the expression grammar (see the README for the
/// EBNF). Throws ParseError with 1-based line/column.
ExprPtr parse(const std::string& text);

/// Canonical text form; parse(print(e)) reproduces e exactly.
std::string print(const Expr& e);

bool equal(const Expr& a, const Expr& b);

/// Evaluates to an order-N truncation. Loops unroll for k = 0..ceil(log2 N);
/// each iteration's body is checked for the valuation property that makes the
/// truncation exact (sum bodies O(z^(2^k)), product bodies 1 + O(z^(2^k))),
/// and evaluation is rejected otherwise.
TruncatedSeries evaluate(const Expr& e, long long order);

/// The family's generating function written in the DSL, e.g.
/// "sum(k){ z^(2^k) / (1 - z^(2^k)) }" for t1 with c = 1.
std::string family_expression(const FamilySpec& spec);

}  // namespace dcgf::dsl
