// End-to-end tests against the built CLI binary. The binary path arrives as
// argv[1] from CTest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dcgf/bfile.hpp"
#include "dcgf/families.hpp"
#include "dcgf/recurrence.hpp"
#include "doctest.h"

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout (plus stderr when merged)
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = g_cli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

std::string fixture(const std::string& rel) {
    return std::string(DCGF_FIXTURE_DIR) + "/" + rel;
}

}  // namespace

TEST_CASE("gen: csv output for gould") {
    auto r = run("gen --family t3 --c 2 --n 8 --via gf --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,2,2,4,2,4,4,8\n");
}

TEST_CASE("gen: csv output for a DSL expression") {
    auto r = run("gen --expr \"prod(k){1 - z^(2^k)}\" --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1,-1,-1,1\n");
}

TEST_CASE("gen: b-file output format") {
    auto r = run("gen --family t4 --alpha 2 --c 0 --d 1 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 0\n1 1\n2 2\n3 3\n");
}

TEST_CASE("gen: constraint violations exit 2 and cite the constraint") {
    auto r = run("gen --family t1 --c 0 --n 8", /*merge_stderr=*/true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("|c| > 0") != std::string::npos);

    CHECK(run("gen --family t9 --c 1").exit_code == 2);
    CHECK(run("gen --n 8").exit_code == 2);
    CHECK(run("gen --family t3 --c 2 --n 1").exit_code == 2);
    CHECK(run("gen --family t3 --c 2 --expr z").exit_code == 2);
    CHECK(run("gen --expr \"prod(k){1+z}\" --via rec").exit_code == 2);
    CHECK(run("gen --expr \"2 +\"").exit_code == 2);
}

TEST_CASE("gen: DSL evaluation failures exit 1") {
    auto r = run("gen --expr \"sum(k){ 1/(1 - z^(2^k)) }\" --n 8", true);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("sum body") != std::string::npos);
}

TEST_CASE("gen --via gf and --via rec are byte-identical across a grid") {
    std::vector<std::string> specs;
    for (int c : {-3, -1, 2}) {
        specs.push_back("--family t1 --c " + std::to_string(c));
        specs.push_back("--family t2 --c " + std::to_string(c));
        specs.push_back("--family t3 --c " + std::to_string(c));
    }
    for (int alpha : {-2, 1, 3})
        for (int c : {-1, 2})
            specs.push_back("--family t4 --alpha " + std::to_string(alpha) +
                            " --c " + std::to_string(c) + " --d -2");
    specs.push_back("--family t5 --c 1 --tail 1");
    specs.push_back("--family t5 --c -2 --tail 2,-1");
    specs.push_back("--family t5 --c 0 --tail 0,2");
    specs.push_back("--family t6 --tail 1,1");
    specs.push_back("--family t6 --tail -2,1");
    specs.push_back("--family thue-morse");
    specs.push_back("--family ones-count");

    for (const auto& spec : specs) {
        CAPTURE(spec);
        auto gf = run("gen " + spec + " --n 96 --via gf");
        auto rec = run("gen " + spec + " --n 96 --via rec");
        CHECK(gf.exit_code == 0);
        CHECK(rec.exit_code == 0);
        CHECK(gf.output == rec.output);
    }
}

TEST_CASE("classify: the ruler fixture reports t1 c=1") {
    std::vector<dcgf::Int> values;
    for (unsigned long long n = 1; n <= 64; ++n) values.push_back(dcgf::v2_of(n) + 1);
    auto path = write_temp("dcgf_cli_ruler.txt",
                           dcgf::to_bfile({1, std::move(values)}));

    auto r = run("classify " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("t1 c=1 align=1 len=64") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("classify: the infinity sequence has no match, exit 3") {
    auto values = eval_recurrence(
        [] {
            dcgf::DCRecurrence rec;
            rec.base[0] = 0;
            rec.even = {.on_half = -1, .min_n = 1};
            rec.odd = {.on_half = 1, .constant = 1};
            return rec;
        }(),
        64);
    auto path = write_temp("dcgf_cli_norgard.txt", dcgf::to_bfile({0, values}));

    auto r = run("classify " + path.string(), true);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("no match") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("classify: short samples exit 2, unreadable input exits 1") {
    auto path = write_temp("dcgf_cli_short.txt", "0 1\n1 2\n2 3\n3 4\n");
    auto r = run("classify " + path.string(), true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("too short") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run("classify /nonexistent/series.txt").exit_code == 1);

    auto junk = write_temp("dcgf_cli_junk.txt", "0 1\n5 2\n");
    CHECK(run("classify " + junk.string()).exit_code == 1);
    std::filesystem::remove(junk);
}

TEST_CASE("mahler: worked identities pass from fixture equation files") {
    auto ones = run("mahler " + fixture("equations/ones_count_identity.eq") +
                    " --family t4 --alpha 1 --c 0 --d 1 --n 300");
    CHECK(ones.exit_code == 0);
    CHECK(ones.output.find("PASS") != std::string::npos);

    auto tm = run("mahler " + fixture("equations/thue_morse.eq") +
                  " --family t3 --c -1 --n 300");
    CHECK(tm.exit_code == 0);
    CHECK(tm.output.find("PASS") != std::string::npos);

    auto e0 = run("mahler " + fixture("equations/two_pow_e0.eq") +
                  " --oracle two-pow-e0 --n 300");
    CHECK(e0.exit_code == 0);
    CHECK(e0.output.find("PASS") != std::string::npos);
}

TEST_CASE("mahler: a wrong series fails with the first offending exponent") {
    auto r = run("mahler " + fixture("equations/two_pow_e0.eq") +
                 " --family t3 --c 2 --n 64");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL at z^") != std::string::npos);
}

TEST_CASE("mahler: malformed equation files exit 1") {
    auto path = write_temp("dcgf_cli_bad.eq", "depth 1\nc0 what\n");
    CHECK(run("mahler " + path.string() + " --family t3 --c -1").exit_code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("tworat: values and --check") {
    auto naturals = run("tworat --alpha 2 --c 0 --d 1 --range 0..8 --check");
    CHECK(naturals.exit_code == 0);
    CHECK(naturals.output == "0\n1\n2\n3\n4\n5\n6\n7\nPASS\n");

    auto popcount7 = run("tworat --alpha 1 --c 0 --d 1 --range 7..8");
    CHECK(popcount7.exit_code == 0);
    CHECK(popcount7.output == "3\n");

    auto alternating = run("tworat --alpha -1 --c 0 --d 1 --range 0..8 --check");
    CHECK(alternating.exit_code == 0);
    CHECK(alternating.output.find("PASS") != std::string::npos);

    CHECK(run("tworat --alpha 0 --c 1 --d 1").exit_code == 2);
    CHECK(run("tworat --alpha 2 --range 8..2").exit_code == 2);
}

TEST_CASE("verify: families pass; t6 names its convention") {
    auto t5 = run("verify --family t5 --c 1 --tail 1 --n 256");
    CHECK(t5.exit_code == 0);
    CHECK(t5.output.find("PASS") != std::string::npos);

    auto t6 = run("verify --family t6 --tail 1,1 --n 256");
    CHECK(t6.exit_code == 0);
    CHECK(t6.output.find("PASS") != std::string::npos);
    CHECK(t6.output.find("convention") != std::string::npos);

    CHECK(run("verify --family t4 --alpha 0 --c 1 --d 1").exit_code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("gen --help").exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <dcgf-binary>\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
