// Command-line front end: generation, verification, classification, equation
// checking, and 2-rational evaluation.
//
// Exit codes: 0 success, 1 runtime/evaluation failure, 2 usage error,
// 3 classify found no match.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcgf/bfile.hpp"
#include "dcgf/dsl.hpp"
#include "dcgf/families.hpp"
#include "dcgf/fit.hpp"
#include "dcgf/mahler.hpp"
#include "dcgf/recurrence.hpp"
#include "dcgf/tworational.hpp"

namespace {

using dcgf::FamilyKind;
using dcgf::FamilySpec;
using dcgf::Int;

Int parse_int(const std::string& text, const std::string& flag) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + " expects an integer, got \"" + text + "\"");
    }
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<Int> values;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) values.push_back(parse_int(item, flag));
    if (values.empty()) throw std::invalid_argument(flag + " expects a comma list");
    return values;
}

struct FamilyFlags {
    std::string family;
    std::string c;
    std::string alpha;
    std::string d;
    std::string tail;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "t1|t2|t3|t4|t5|t6|ones-count|zeros-count|thue-morse|ruler");
        cmd->add_option("--c", c, "parameter c");
        cmd->add_option("--alpha", alpha, "parameter alpha (t4)");
        cmd->add_option("--d", d, "parameter d (t4)");
        cmd->add_option("--tail", tail, "comma list c_1,..,c_D (t5/t6)");
    }

    FamilySpec spec() const {
        static const std::map<std::string, FamilyKind> kinds{
            {"t1", FamilyKind::t1},
            {"t2", FamilyKind::t2},
            {"t3", FamilyKind::t3},
            {"t4", FamilyKind::t4},
            {"t5", FamilyKind::t5},
            {"t6", FamilyKind::t6},
            {"ones-count", FamilyKind::ones_count},
            {"zeros-count", FamilyKind::zeros_count},
            {"thue-morse", FamilyKind::thue_morse},
            {"ruler", FamilyKind::ruler_plus_one},
        };
        auto it = kinds.find(family);
        if (it == kinds.end())
            throw std::invalid_argument("unknown family \"" + family + "\"");

        FamilySpec s;
        s.kind = it->second;
        switch (it->second) {
            case FamilyKind::t1:
            case FamilyKind::t2:
            case FamilyKind::t3:
                if (c.empty()) throw std::invalid_argument(family + " requires --c");
                s.c = parse_int(c, "--c");
                break;
            case FamilyKind::t4:
                if (alpha.empty()) throw std::invalid_argument("t4 requires --alpha");
                s.alpha = parse_int(alpha, "--alpha");
                if (!c.empty()) s.c = parse_int(c, "--c");
                if (!d.empty()) s.d = parse_int(d, "--d");
                break;
            case FamilyKind::t5:
                if (tail.empty()) throw std::invalid_argument("t5 requires --tail");
                if (!c.empty()) s.c = parse_int(c, "--c");
                s.tail = parse_int_list(tail, "--tail");
                break;
            case FamilyKind::t6:
                if (tail.empty()) throw std::invalid_argument("t6 requires --tail");
                s.tail = parse_int_list(tail, "--tail");
                s.t6_regularized = true;
                break;
            default:
                break;
        }
        dcgf::validate(s);
        return s;
    }
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in.good()) throw dcgf::Error("cannot read \"" + path + "\"");
        buf << in.rdbuf();
    }
    return buf.str();
}

dcgf::dsl::ExprPtr parse_expr_flag(const std::string& text) {
    try {
        return dcgf::dsl::parse(text);
    } catch (const dcgf::ParseError& e) {
        throw std::invalid_argument("--expr: " + std::string(e.what()) + " (line " +
                                    std::to_string(e.line) + ", column " +
                                    std::to_string(e.column) + ")");
    }
}

// ---------------------------------------------------------------------------

struct GenArgs {
    FamilyFlags family;
    std::string expr;
    long long n = 64;
    std::string via = "gf";
    std::string format = "bfile";
};

int run_gen(const GenArgs& args) {
    if (args.n < 2) throw std::invalid_argument("--n must be >= 2");
    if (!args.expr.empty() && !args.family.family.empty())
        throw std::invalid_argument("gen takes --family or --expr, not both");
    std::vector<Int> values;
    if (!args.expr.empty()) {
        if (args.via == "rec")
            throw std::invalid_argument("--via rec needs --family, not --expr");
        values = dcgf::dsl::evaluate(*parse_expr_flag(args.expr), args.n).coeffs();
    } else if (!args.family.family.empty()) {
        FamilySpec spec = args.family.spec();
        if (args.via == "rec")
            values = eval_recurrence(family_recurrence(spec), args.n);
        else
            values = build_series(spec, args.n).coeffs();
    } else {
        throw std::invalid_argument("gen needs --family or --expr");
    }

    if (args.format == "csv") {
        for (size_t i = 0; i < values.size(); ++i)
            std::cout << (i ? "," : "") << values[i].str();
        std::cout << "\n";
    } else {
        for (size_t i = 0; i < values.size(); ++i)
            std::cout << i << " " << values[i].str() << "\n";
    }
    return 0;
}

struct VerifyArgs {
    FamilyFlags family;
    long long n = 64;
};

int run_verify(const VerifyArgs& args) {
    FamilySpec spec = args.family.spec();
    bool ok = true;

    auto series = build_series(spec, args.n);
    auto rec_values = eval_recurrence(family_recurrence(spec), args.n);
    long long mismatch = -1;
    for (long long i = 0; i < args.n; ++i) {
        if (series[i] != rec_values[static_cast<size_t>(i)]) {
            mismatch = i;
            break;
        }
    }
    if (mismatch < 0) {
        std::cout << "series vs recurrence: PASS (n < " << args.n << ")\n";
    } else {
        ok = false;
        std::cout << "series vs recurrence: FAIL at n=" << mismatch << " (series "
                  << series[mismatch].str() << ", recurrence "
                  << rec_values[static_cast<size_t>(mismatch)].str() << ")\n";
    }

    auto check = check_equation(equation_for_family(spec), series);
    if (check.pass) {
        std::cout << "functional equation: PASS (verified to order "
                  << check.verified_order << ")\n";
    } else {
        ok = false;
        std::cout << "functional equation: FAIL at z^" << check.fail_exponent
                  << " (residual " << check.residual.str() << ")\n";
    }

    if (dcgf::resolve(spec).kind == FamilyKind::t6)
        std::cout << "note: t6 uses the regularized constant-term convention "
                     "(each summand less its constant 1, a_0 = 0)\n";
    return ok ? 0 : 1;
}

struct ClassifyArgs {
    std::string input;
    dcgf::FitBounds bounds;
};

int run_classify(const ClassifyArgs& args) {
    auto sample = dcgf::parse_bfile(read_input(args.input));
    auto report = dcgf::classify(sample, args.bounds);
    if (report.matches.empty()) {
        std::cerr << "no match in bounds\n";
        return 3;
    }
    for (const auto& m : report.matches)
        std::cout << describe(m.spec) << " align=" << m.align
                  << " len=" << m.verified_length << "\n";
    return 0;
}

struct MahlerArgs {
    std::string equation_file;
    FamilyFlags family;
    std::string expr;
    std::string oracle;
    long long n = 64;
};

int run_mahler(const MahlerArgs& args) {
    auto eq = dcgf::parse_equation(read_input(args.equation_file));

    dcgf::TruncatedSeries F = [&] {
        if (!args.oracle.empty()) {
            if (args.oracle == "two-pow-e0") return dcgf::two_pow_e0_series(args.n);
            throw std::invalid_argument("unknown --oracle \"" + args.oracle +
                                        "\" (supported: two-pow-e0)");
        }
        if (!args.expr.empty())
            return dcgf::dsl::evaluate(*parse_expr_flag(args.expr), args.n);
        if (!args.family.family.empty())
            return build_series(args.family.spec(), args.n);
        throw std::invalid_argument("mahler needs --family, --expr, or --oracle");
    }();

    auto result = check_equation(eq, F);
    if (result.pass) {
        std::cout << "PASS (verified to order " << result.verified_order << ")\n";
        return 0;
    }
    std::cout << "FAIL at z^" << result.fail_exponent << " (residual "
              << result.residual.str() << ")\n";
    return 1;
}

struct TworatArgs {
    std::string alpha;
    std::string c = "0";
    std::string d = "0";
    std::string range = "0..8";
    bool check = false;
};

int run_tworat(const TworatArgs& args) {
    if (args.alpha.empty()) throw std::invalid_argument("tworat requires --alpha");
    Int alpha = parse_int(args.alpha, "--alpha");
    Int c = parse_int(args.c, "--c");
    Int d = parse_int(args.d, "--d");

    size_t dots = args.range.find("..");
    long long lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) throw std::invalid_argument("");
        lo = std::stoll(args.range.substr(0, dots));
        hi = std::stoll(args.range.substr(dots + 2));
    } catch (const std::exception&) {
        throw std::invalid_argument("--range expects \"lo..hi\", got \"" +
                                    args.range + "\"");
    }
    if (lo < 0 || hi <= lo || hi > (1LL << 22))
        throw std::invalid_argument("--range out of range");

    auto rep = dcgf::rep_for_affine(alpha, c, d);
    for (long long n = lo; n < hi; ++n)
        std::cout << eval_linear_rep(rep, static_cast<unsigned long long>(n)).str()
                  << "\n";

    if (args.check) {
        auto rec = eval_recurrence(
            family_recurrence(FamilySpec::make_t4(alpha, c, d)), hi);
        for (long long n = lo; n < hi; ++n) {
            Int u = eval_linear_rep(rep, static_cast<unsigned long long>(n));
            if (u != rec[static_cast<size_t>(n)]) {
                std::cout << "FAIL at n=" << n << " (representation " << u.str()
                          << ", recurrence " << rec[static_cast<size_t>(n)].str()
                          << ")\n";
                return 1;
            }
        }
        std::cout << "PASS\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for divide-and-conquer generating functions"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "print coefficients of a family or DSL expression");
    gen.family.attach(gen_cmd);
    gen_cmd->add_option("--expr", gen.expr, "DSL expression text");
    gen_cmd->add_option("--n", gen.n, "number of coefficients")->capture_default_str();
    gen_cmd->add_option("--via", gen.via, "gf|rec")
        ->check(CLI::IsMember({"gf", "rec"}))
        ->capture_default_str();
    gen_cmd->add_option("--format", gen.format, "bfile|csv")
        ->check(CLI::IsMember({"bfile", "csv"}))
        ->capture_default_str();

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand(
        "verify", "check series-vs-recurrence equality and the functional equation");
    verify.family.attach(verify_cmd);
    verify_cmd->add_option("--n", verify.n, "order")->capture_default_str();

    ClassifyArgs classify;
    auto* classify_cmd =
        app.add_subcommand("classify", "fit a b-file against the six families");
    classify_cmd->add_option("input", classify.input, "b-file path, or - for stdin")
        ->required();
    classify_cmd->add_option("--max-c", classify.bounds.max_c, "|c| bound")
        ->capture_default_str();
    classify_cmd->add_option("--max-alpha", classify.bounds.max_alpha, "|alpha| bound")
        ->capture_default_str();
    classify_cmd->add_option("--max-d", classify.bounds.max_d, "|d| bound")
        ->capture_default_str();
    classify_cmd->add_option("--max-depth", classify.bounds.max_depth, "tail depth bound")
        ->capture_default_str();
    classify_cmd->add_option("--max-tail", classify.bounds.max_tail, "|c_i| bound")
        ->capture_default_str();

    MahlerArgs mahler;
    auto* mahler_cmd = app.add_subcommand(
        "mahler", "check an equation file against a series");
    mahler_cmd->add_option("equation", mahler.equation_file, "equation file path")
        ->required();
    mahler.family.attach(mahler_cmd);
    mahler_cmd->add_option("--expr", mahler.expr, "DSL expression text");
    mahler_cmd->add_option("--oracle", mahler.oracle, "oracle series (two-pow-e0)");
    mahler_cmd->add_option("--n", mahler.n, "order")->capture_default_str();

    TworatArgs tworat;
    auto* tworat_cmd = app.add_subcommand(
        "tworat", "evaluate the 2-rational representation of a t4 sequence");
    tworat_cmd->add_option("--alpha", tworat.alpha, "parameter alpha");
    tworat_cmd->add_option("--c", tworat.c, "parameter c")->capture_default_str();
    tworat_cmd->add_option("--d", tworat.d, "parameter d")->capture_default_str();
    tworat_cmd->add_option("--range", tworat.range, "half-open range lo..hi")
        ->capture_default_str();
    tworat_cmd->add_flag("--check", tworat.check, "cross-verify against the recurrence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (classify_cmd->parsed()) return run_classify(classify);
        if (mahler_cmd->parsed()) return run_mahler(mahler);
        if (tworat_cmd->parsed()) return run_tworat(tworat);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
