#include "dcgf/dsl.hpp"

#include <cctype>
#include <sstream>
#include <variant>
#include <vector>

namespace dcgf::dsl {

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
    enum class Type { integer, ident, sym, end };
    Type type = Type::end;
    std::string text;
    Int value;  // integer tokens
    int line = 1;
    int col = 1;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1, col = 1;
    size_t i = 0;
    auto bump = [&](char ch) {
        if (ch == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            bump(ch);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.type = Token::Type::integer;
            t.text = text.substr(i, j - i);
            t.value = Int(t.text);
            while (i < j) bump(text[i++]);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            t.type = Token::Type::ident;
            t.text = text.substr(i, j - i);
            while (i < j) bump(text[i++]);
        } else if (std::string("+-*/^(){}").find(ch) != std::string::npos) {
            t.type = Token::Type::sym;
            t.text = std::string(1, ch);
            bump(ch);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        tokens.push_back(std::move(t));
    }
    Token eof;
    eof.line = line;
    eof.col = col;
    tokens.push_back(std::move(eof));
    return tokens;
}

// ---------------------------------------------------------------------------
// Parser

ExprPtr make_number(Int v) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::number;
    e->number = std::move(v);
    return e;
}

ExprPtr make_node(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    ExprPtr run() {
        ExprPtr e = parse_expression();
        if (peek().type != Token::Type::end)
            throw err("unexpected trailing input '" + peek().text + "'");
        return e;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int loop_depth_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool at_sym(const char* s) const {
        return peek().type == Token::Type::sym && peek().text == s;
    }
    void expect_sym(const char* s) {
        if (!at_sym(s)) throw err(std::string("expected '") + s + "'");
        advance();
    }
    ParseError err(const std::string& msg) const {
        return ParseError(msg, peek().line, peek().col);
    }

    ExprPtr parse_expression() {
        ExprPtr e = parse_term();
        while (at_sym("+") || at_sym("-")) {
            bool plus = peek().text == "+";
            advance();
            e = make_node(plus ? Expr::Kind::add : Expr::Kind::sub, e, parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (at_sym("*") || at_sym("/")) {
            bool times = peek().text == "*";
            advance();
            e = make_node(times ? Expr::Kind::mul : Expr::Kind::div, e, parse_factor());
        }
        return e;
    }

    ExprPtr parse_factor() {
        if (at_sym("+")) {
            advance();
            return parse_factor();
        }
        if (at_sym("-")) {
            advance();
            ExprPtr inner = parse_factor();
            if (inner->kind == Expr::Kind::number) return make_number(-inner->number);
            return make_node(Expr::Kind::neg, inner);
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (!at_sym("^")) return base;
        const Token& caret = peek();
        advance();
        ExponentShape shape = parse_exponent();
        if (shape.uses_k() && loop_depth_ == 0)
            throw ParseError("loop index k used outside sum/prod", caret.line, caret.col);
        if (shape.kind == ExponentShape::Kind::tower &&
            base->kind != Expr::Kind::unknown)
            throw ParseError("a 2^k-shaped exponent requires base z", caret.line, caret.col);
        if (shape.kind == ExponentShape::Kind::k_plus &&
            base->kind != Expr::Kind::number)
            throw ParseError("exponent k requires an integer base", caret.line, caret.col);
        if (shape.kind == ExponentShape::Kind::constant && shape.constant < 0)
            throw ParseError("exponents must be nonnegative", caret.line, caret.col);
        if (at_sym("^")) throw err("chained ^ is not supported");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::pow;
        e->lhs = std::move(base);
        e->exponent = std::move(shape);
        return e;
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        if (t.type == Token::Type::integer) {
            advance();
            return make_number(t.value);
        }
        if (t.type == Token::Type::ident) {
            if (t.text == "z") {
                advance();
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::unknown;
                return e;
            }
            if (t.text == "sum" || t.text == "prod") return parse_loop();
            if (t.text == "k")
                throw err("loop index k may only appear in exponents");
            throw err("unknown name '" + t.text + "'");
        }
        if (at_sym("(")) {
            advance();
            ExprPtr e = parse_expression();
            expect_sym(")");
            return e;
        }
        throw err("expected a number, z, sum, prod, or '('");
    }

    ExprPtr parse_loop() {
        const Token& kw = advance();  // sum | prod
        if (loop_depth_ > 0)
            throw ParseError("nested sum/prod is not supported", kw.line, kw.col);
        expect_sym("(");
        if (!(peek().type == Token::Type::ident && peek().text == "k"))
            throw err("loop index must be k");
        advance();
        expect_sym(")");
        expect_sym("{");
        ++loop_depth_;
        ExprPtr body = parse_expression();
        --loop_depth_;
        expect_sym("}");
        return make_node(kw.text == "sum" ? Expr::Kind::sum : Expr::Kind::prod, body);
    }

    // Exponent sub-grammar. A tiny algebra over {constant, k+shift,
    // 2^(k+shift)*m} is folded while parsing; anything that leaves it is a
    // malformed exponent.
    ExponentShape parse_exponent() {
        const Token& t = peek();
        if (t.type == Token::Type::integer) {
            advance();
            ExponentShape s;
            s.constant = t.value;
            return s;
        }
        if (t.type == Token::Type::ident) return parse_exp_atom();
        if (at_sym("(")) {
            advance();
            ExponentShape s = parse_exp_expr();
            expect_sym(")");
            return s;
        }
        throw err("malformed exponent");
    }

    ExponentShape parse_exp_expr() {
        ExponentShape s = parse_exp_term();
        while (at_sym("+")) {
            const Token& plus = peek();
            advance();
            ExponentShape rhs = parse_exp_term();
            bool lc = s.kind == ExponentShape::Kind::constant;
            bool rc = rhs.kind == ExponentShape::Kind::constant;
            if (lc && rc) {
                s.constant += rhs.constant;
            } else if (!lc && rc && s.kind == ExponentShape::Kind::k_plus &&
                       s.shift == 0 && rhs.constant == 1) {
                s.shift = 1;
            } else if (lc && !rc && rhs.kind == ExponentShape::Kind::k_plus &&
                       rhs.shift == 0 && s.constant == 1) {
                s = rhs;
                s.shift = 1;
            } else {
                throw ParseError("malformed exponent: only k+1 may be added to k",
                                 plus.line, plus.col);
            }
        }
        return s;
    }

    ExponentShape parse_exp_term() {
        ExponentShape s = parse_exp_atom();
        while (at_sym("*")) {
            const Token& star = peek();
            advance();
            ExponentShape rhs = parse_exp_atom();
            auto combine = [&](ExponentShape tower, const ExponentShape& konst) {
                if (konst.constant < 1)
                    throw ParseError("malformed exponent: tower multiplier must be >= 1",
                                     star.line, star.col);
                tower.multiplier *= konst.constant;
                return tower;
            };
            bool lc = s.kind == ExponentShape::Kind::constant;
            bool rc = rhs.kind == ExponentShape::Kind::constant;
            if (lc && rc) {
                s.constant *= rhs.constant;
            } else if (s.kind == ExponentShape::Kind::tower && rc) {
                s = combine(s, rhs);
            } else if (lc && rhs.kind == ExponentShape::Kind::tower) {
                s = combine(rhs, s);
            } else {
                throw ParseError(
                    "malformed exponent: only (2^k)*i with an integer literal i",
                    star.line, star.col);
            }
        }
        return s;
    }

    ExponentShape parse_exp_atom() {
        const Token& t = peek();
        if (t.type == Token::Type::integer) {
            advance();
            ExponentShape base;
            base.constant = t.value;
            if (!at_sym("^")) return base;
            const Token& caret = peek();
            advance();
            ExponentShape e = parse_exp_atom();
            if (e.kind == ExponentShape::Kind::k_plus) {
                if (base.constant != 2)
                    throw ParseError("malformed exponent: towers must have base 2",
                                     caret.line, caret.col);
                ExponentShape s;
                s.kind = ExponentShape::Kind::tower;
                s.shift = e.shift;
                return s;
            }
            if (e.kind == ExponentShape::Kind::constant && e.constant >= 0) {
                if (e.constant > 64)
                    throw ParseError("exponent too large", caret.line, caret.col);
                ExponentShape s;
                s.constant = 1;
                for (Int i = 0; i < e.constant; ++i) s.constant *= base.constant;
                return s;
            }
            throw ParseError("malformed exponent", caret.line, caret.col);
        }
        if (t.type == Token::Type::ident) {
            advance();
            if (t.text != "k")
                throw ParseError("unknown index '" + t.text + "'", t.line, t.col);
            ExponentShape s;
            s.kind = ExponentShape::Kind::k_plus;
            return s;
        }
        if (at_sym("(")) {
            advance();
            ExponentShape s = parse_exp_expr();
            expect_sym(")");
            return s;
        }
        throw err("malformed exponent");
    }
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 2;
        case Expr::Kind::mul:
        case Expr::Kind::div: return 5;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 8;
        case Expr::Kind::number: return e.number < 0 ? 3 : 10;
        default: return 10;
    }
}

std::string exponent_text(const ExponentShape& s) {
    switch (s.kind) {
        case ExponentShape::Kind::constant:
            return s.constant.str();
        case ExponentShape::Kind::k_plus:
            return s.shift == 0 ? "k" : "(k + 1)";
        case ExponentShape::Kind::tower: {
            std::string tower = s.shift == 0 ? "2^k" : "2^(k + 1)";
            if (s.multiplier == 1) return "(" + tower + ")";
            return "((" + tower + ") * " + s.multiplier.str() + ")";
        }
    }
    return "?";
}

void print_to(const Expr& e, std::ostringstream& out);

void print_child(const Expr& child, int parent_prec, bool tight_bind,
                 std::ostringstream& out) {
    bool parens = tight_bind ? precedence(child) <= parent_prec
                             : precedence(child) < parent_prec;
    if (parens) out << "(";
    print_to(child, out);
    if (parens) out << ")";
}

void print_to(const Expr& e, std::ostringstream& out) {
    switch (e.kind) {
        case Expr::Kind::number:
            out << e.number.str();
            break;
        case Expr::Kind::unknown:
            out << "z";
            break;
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div: {
            const char* op = e.kind == Expr::Kind::add   ? " + "
                             : e.kind == Expr::Kind::sub ? " - "
                             : e.kind == Expr::Kind::mul ? " * "
                                                         : " / ";
            int p = precedence(e);
            print_child(*e.lhs, p, false, out);
            out << op;
            print_child(*e.rhs, p, true, out);
            break;
        }
        case Expr::Kind::neg:
            out << "-";
            print_child(*e.lhs, 5, true, out);
            break;
        case Expr::Kind::pow:
            print_child(*e.lhs, 10, false, out);
            out << "^" << exponent_text(e.exponent);
            break;
        case Expr::Kind::sum:
        case Expr::Kind::prod:
            out << (e.kind == Expr::Kind::sum ? "sum" : "prod") << "(k){ ";
            print_to(*e.lhs, out);
            out << " }";
            break;
    }
}

// ---------------------------------------------------------------------------
// Evaluator

using Value = std::variant<RationalFunction, TruncatedSeries>;

struct Context {
    long long order;
    int top_k;
    int k = -1;  // active loop index, -1 outside loops
};

TruncatedSeries to_series(const Value& v, long long order) {
    if (std::holds_alternative<TruncatedSeries>(v))
        return std::get<TruncatedSeries>(v);
    return expand(std::get<RationalFunction>(v), order);
}

constexpr long long kMaxExponent = 1LL << 22;

Polynomial poly_pow(const Polynomial& p, long long e) {
    if (e * std::max(p.degree(), 0LL) > kMaxExponent)
        throw EvalError("exponent too large");
    Polynomial acc{1};
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Value eval_node(const Expr& e, const Context& ctx);

Value eval_binary(const Expr& e, const Context& ctx) {
    Value lhs = eval_node(*e.lhs, ctx);
    Value rhs = eval_node(*e.rhs, ctx);

    if (e.kind == Expr::Kind::div) {
        if (!std::holds_alternative<RationalFunction>(rhs))
            throw EvalError("division by a sum/prod result is not supported");
        const auto& q = std::get<RationalFunction>(rhs);
        if (std::holds_alternative<RationalFunction>(lhs))
            return std::get<RationalFunction>(lhs).divided_by(q);
        const Int& c0 = q.num().coeff(0);
        if (c0 != 1 && c0 != -1)
            throw EvalError("division by " + q.num().str() +
                            ": constant term must be +1 or -1");
        return mul_rational(std::get<TruncatedSeries>(lhs),
                            RationalFunction{q.den(), q.num()});
    }

    if (std::holds_alternative<RationalFunction>(lhs) &&
        std::holds_alternative<RationalFunction>(rhs)) {
        const auto& a = std::get<RationalFunction>(lhs);
        const auto& b = std::get<RationalFunction>(rhs);
        switch (e.kind) {
            case Expr::Kind::add: return a + b;
            case Expr::Kind::sub: return a - b;
            default: return a * b;
        }
    }

    TruncatedSeries a = to_series(lhs, ctx.order);
    TruncatedSeries b = to_series(rhs, ctx.order);
    switch (e.kind) {
        case Expr::Kind::add: return add(a, b);
        case Expr::Kind::sub: return sub(a, b);
        default: return mul(a, b);
    }
}

Value eval_pow(const Expr& e, const Context& ctx) {
    const ExponentShape& s = e.exponent;
    switch (s.kind) {
        case ExponentShape::Kind::tower: {
            long long shift = ctx.k + s.shift;
            if (shift > 40) throw EvalError("exponent too large");
            if (s.multiplier > kMaxExponent) throw EvalError("exponent too large");
            long long exp = (1LL << shift) * s.multiplier.convert_to<long long>();
            if (exp > kMaxExponent) throw EvalError("exponent too large");
            return RationalFunction{Polynomial::monomial(1, exp)};
        }
        case ExponentShape::Kind::k_plus: {
            Int c = e.lhs->number;
            Int r = 1;
            for (int i = 0; i < ctx.k + s.shift; ++i) r *= c;
            return RationalFunction{Polynomial::constant(std::move(r))};
        }
        case ExponentShape::Kind::constant: {
            if (s.constant > kMaxExponent) throw EvalError("exponent too large");
            long long exp = s.constant.convert_to<long long>();
            Value base = eval_node(*e.lhs, ctx);
            if (std::holds_alternative<RationalFunction>(base)) {
                const auto& rf = std::get<RationalFunction>(base);
                return RationalFunction{poly_pow(rf.num(), exp), poly_pow(rf.den(), exp)};
            }
            if (exp > 64) throw EvalError("exponent too large for a series base");
            auto acc = TruncatedSeries::one(ctx.order);
            const auto& b = std::get<TruncatedSeries>(base);
            for (long long i = 0; i < exp; ++i) acc = mul(acc, b);
            return acc;
        }
    }
    throw EvalError("unreachable exponent kind");
}

Value eval_loop(const Expr& e, const Context& ctx) {
    bool is_sum = e.kind == Expr::Kind::sum;
    auto acc = is_sum ? TruncatedSeries::zeros(ctx.order)
                      : TruncatedSeries::one(ctx.order);
    for (int k = 0; k <= ctx.top_k; ++k) {
        Context inner = ctx;
        inner.k = k;
        Value v = eval_node(*e.lhs, inner);
        // Loop bodies cannot contain nested loops, so they are rational.
        const auto& rf = std::get<RationalFunction>(v);
        long long needed = 1LL << k;
        if (is_sum) {
            long long val = rf.num().valuation();
            if (val != -1 && val < needed)
                throw EvalError(
                    "sum body at k=" + std::to_string(k) + " has valuation " +
                    std::to_string(val) + " < 2^k = " + std::to_string(needed) +
                    "; sum terms must be rational in z^(2^k) with no lower-order part, "
                    "so this expression is not of elementary divide-and-conquer shape");
            acc = add(acc, expand(rf, ctx.order));
        } else {
            long long val = (rf.num() - rf.den()).valuation();
            if (val != -1 && val < needed)
                throw EvalError(
                    "product body at k=" + std::to_string(k) +
                    " is not 1 + O(z^(2^k)) (difference from 1 has valuation " +
                    std::to_string(val) + " < " + std::to_string(needed) +
                    "); this expression is not of elementary divide-and-conquer shape");
            acc = mul(acc, expand(rf, ctx.order));
        }
    }
    return acc;
}

Value eval_node(const Expr& e, const Context& ctx) {
    switch (e.kind) {
        case Expr::Kind::number:
            return RationalFunction{Polynomial::constant(e.number)};
        case Expr::Kind::unknown:
            return RationalFunction{Polynomial::monomial(1, 1)};
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
        case Expr::Kind::div:
            return eval_binary(e, ctx);
        case Expr::Kind::neg: {
            Value v = eval_node(*e.lhs, ctx);
            if (std::holds_alternative<RationalFunction>(v))
                return -std::get<RationalFunction>(v);
            return sub(TruncatedSeries::zeros(ctx.order),
                       std::get<TruncatedSeries>(v));
        }
        case Expr::Kind::pow:
            return eval_pow(e, ctx);
        case Expr::Kind::sum:
        case Expr::Kind::prod:
            return eval_loop(e, ctx);
    }
    throw EvalError("unreachable node kind");
}

// ---------------------------------------------------------------------------
// Family texts

// "c*NAME", "-c*NAME", "NAME", "-NAME" for joining into sums.
std::string coeff_times(const Int& c, const std::string& name) {
    if (c == 1) return name;
    if (c == -1) return "-" + name;
    return c.str() + "*" + name;
}

// Appends " + t" / " - t" to a running sum.
void join_term(std::string& out, const Int& c, const std::string& name) {
    if (c == 0) return;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
        out = coeff_times(c, name);
        return;
    }
    out += (c < 0 ? " - " : " + ") + coeff_times(mag, name);
}

std::string power_of_k(const Int& base) {
    if (base < 0) return "(" + base.str() + ")^k";
    return base.str() + "^k";
}

std::string tower_exp(int shift, long long mult) {
    std::string tower = shift == 0 ? "2^k" : "2^(k + 1)";
    if (mult == 1) return "z^(" + tower + ")";
    return "z^((" + tower + ") * " + std::to_string(mult) + ")";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::ostringstream out;
    print_to(e, out);
    return out.str();
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::number: return a.number == b.number;
        case Expr::Kind::unknown: return true;
        case Expr::Kind::neg:
        case Expr::Kind::sum:
        case Expr::Kind::prod: return equal(*a.lhs, *b.lhs);
        case Expr::Kind::pow:
            return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
        default:
            return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

TruncatedSeries evaluate(const Expr& e, long long order) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    Context ctx{order, ceil_log2(order)};
    return to_series(eval_node(e, ctx), order);
}

std::string family_expression(const FamilySpec& raw) {
    FamilySpec spec = resolve(raw);
    switch (spec.kind) {
        case FamilyKind::t1:
        case FamilyKind::t2: {
            std::string num = spec.c == 1
                                  ? "z^(2^k)"
                                  : power_of_k(spec.c) + " * z^(2^k)";
            std::string den = spec.kind == FamilyKind::t1 ? "1 - z^(2^k)"
                                                          : "1 - z^(2^(k + 1))";
            return "sum(k){ " + num + " / (" + den + ") }";
        }
        case FamilyKind::t3: {
            std::string body = "1";
            join_term(body, spec.c, "z^(2^k)");
            return "prod(k){ " + body + " }";
        }
        case FamilyKind::t4: {
            std::string poly;
            join_term(poly, spec.d, tower_exp(0, 1));
            join_term(poly, spec.c, tower_exp(1, 1));
            if (poly.empty()) poly = "0";
            std::string num = spec.alpha == 1
                                  ? "(" + poly + ")"
                                  : power_of_k(spec.alpha) + " * (" + poly + ")";
            return "(1/(1 - z)) * sum(k){ " + num + " / (1 + z^(2^k)) }";
        }
        case FamilyKind::t5: {
            std::string body = "1";
            join_term(body, spec.c, tower_exp(0, 1));
            for (size_t i = 0; i < spec.tail.size(); ++i)
                join_term(body, spec.tail[i],
                          tower_exp(1, static_cast<long long>(i + 1)));
            return "prod(k){ " + body + " }";
        }
        case FamilyKind::t6: {
            std::string den = "1";
            for (size_t i = 0; i < spec.tail.size(); ++i)
                join_term(den, -spec.tail[i],
                          tower_exp(0, static_cast<long long>(i + 1)));
            return "sum(k){ 1/(" + den + ") - 1 }";
        }
        default:
            throw std::invalid_argument("unresolved family kind");
    }
}

}  // namespace dcgf::dsl
