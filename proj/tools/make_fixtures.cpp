// Regenerates tests/fixtures/bfiles/*.txt and the fixture manifest.
//
// Every sequence is produced by a standalone oracle (digit statistics, BFS,
// or the classical recurrence), written independently of the library so the
// fixture corpus stays a second route to the same values. The n=0 entries
// follow the catalog's conventions, which treat 0 as the one-digit string
// "0"; where that disagrees with the empty-expansion convention used by the
// generators, the manifest starts the comparison at n=1 and says why.

#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using std::int64_t;
using json = nlohmann::ordered_json;

int popcount(int64_t n) {
    int c = 0;
    for (; n; n >>= 1) c += n & 1;
    return c;
}

int bitlen(int64_t n) {
    int c = 0;
    for (; n; n >>= 1) ++c;
    return c;
}

int zeros(int64_t n) { return bitlen(n) - popcount(n); }

int v2(int64_t n) {
    int c = 0;
    while (n % 2 == 0) {
        ++c;
        n /= 2;
    }
    return c;
}

int64_t pow3(int exp) {
    int64_t r = 1;
    while (exp--) r *= 3;
    return r;
}

// Digits of n in binary, re-read in the given base.
int64_t bits_in_base(int64_t n, int64_t base) {
    int64_t r = 0, place = 1;
    for (; n; n >>= 1, place *= base)
        if (n & 1) r += place;
    return r;
}

int64_t alternating_bit_sum(int64_t n) {
    int64_t r = 0, sign = 1;
    for (; n; n >>= 1, sign = -sign) r += sign * (n & 1);
    return r;
}

// Fold over the bits of n, most significant first.
int64_t digit_fold(int64_t n, int64_t alpha, int64_t on_zero, int64_t on_one) {
    int64_t acc = 0;
    for (int i = bitlen(n) - 1; i >= 0; --i)
        acc = alpha * acc + (((n >> i) & 1) ? on_one : on_zero);
    return acc;
}

// Minimal number of steps from 1 to n using x -> x-1 and x -> 2x.
std::vector<int64_t> min_steps_to(int64_t max_n) {
    const int64_t limit = 4 * max_n;
    std::vector<int64_t> dist(static_cast<size_t>(limit) + 1, -1);
    std::deque<int64_t> queue{1};
    dist[1] = 0;
    while (!queue.empty()) {
        int64_t x = queue.front();
        queue.pop_front();
        for (int64_t y : {x - 1, 2 * x}) {
            if (y < 0 || y > limit || dist[static_cast<size_t>(y)] != -1) continue;
            dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::vector<int64_t> stern(int64_t count) {
    std::vector<int64_t> a{0, 1};
    for (int64_t n = 2; n < count; ++n)
        a.push_back(n % 2 == 0 ? a[static_cast<size_t>(n / 2)]
                               : a[static_cast<size_t>(n / 2)] +
                                     a[static_cast<size_t>(n / 2 + 1)]);
    a.resize(static_cast<size_t>(count));
    return a;
}

std::vector<int64_t> fractal_a005590(int64_t count) {
    std::vector<int64_t> a{0, 1};
    for (int64_t n = 2; n < count; ++n)
        a.push_back(n % 2 == 0 ? a[static_cast<size_t>(n / 2)]
                               : a[static_cast<size_t>(n / 2 + 1)] -
                                     a[static_cast<size_t>(n / 2)]);
    a.resize(static_cast<size_t>(count));
    return a;
}

struct Entry {
    std::string anum;
    std::string description;
    int64_t offset;  // first b-file index
    std::function<int64_t(int64_t)> value;
    json family;
    int64_t generated_offset;  // b-file index where generated value 0 sits
    int64_t compare_from;      // first b-file index used in comparisons
    std::string note;
};

constexpr int64_t kTerms = 200;

std::vector<Entry> entries() {
    auto steps = min_steps_to(kTerms + 2);
    auto a2487 = stern(kTerms + 2);
    auto a5590 = fractal_a005590(kTerms + 2);

    std::vector<Entry> list;
    list.push_back({"A001511", "ruler sequence, v2(n)+1", 1,
                    [](int64_t n) { return v2(n) + 1; },
                    {{"kind", "t1"}, {"c", 1}}, 0, 1, ""});
    list.push_back({"A038712", "n XOR n-1", 1,
                    [](int64_t n) { return n ^ (n - 1); },
                    {{"kind", "t1"}, {"c", 2}}, 0, 1, ""});
    list.push_back({"A035263", "first Feigenbaum symbolic sequence", 1,
                    [](int64_t n) { return v2(n) % 2 == 0 ? 1 : 0; },
                    {{"kind", "t1"}, {"c", -1}}, 0, 1, ""});
    list.push_back({"A006519", "highest power of 2 dividing n", 1,
                    [](int64_t n) { return n & -n; },
                    {{"kind", "t2"}, {"c", 2}}, 0, 1, ""});
    list.push_back({"A001316", "Gould's sequence, 2^e1(n)", 0,
                    [](int64_t n) { return int64_t(1) << popcount(n); },
                    {{"kind", "t3"}, {"c", 2}}, 0, 0, ""});
    list.push_back({"A048883", "3^e1(n)", 0,
                    [](int64_t n) { return pow3(popcount(n)); },
                    {{"kind", "t3"}, {"c", 3}}, 0, 0, ""});
    list.push_back({"A000120", "number of ones in binary expansion", 0,
                    [](int64_t n) { return popcount(n); },
                    {{"kind", "t4"}, {"alpha", 1}, {"c", 0}, {"d", 1}}, 0, 0, ""});
    list.push_back({"A023416", "number of zeros in binary expansion", 0,
                    [](int64_t n) { return n == 0 ? 1 : zeros(n); },
                    {{"kind", "t4"}, {"alpha", 1}, {"c", 1}, {"d", 0}}, 0, 1,
                    "catalog counts one zero in \"0\"; generators use the "
                    "empty expansion, so comparison starts at n=1"});
    list.push_back({"A070939", "binary length", 0,
                    [](int64_t n) { return n == 0 ? 1 : bitlen(n); },
                    {{"kind", "t4"}, {"alpha", 1}, {"c", 1}, {"d", 1}}, 0, 1,
                    "catalog sets length(0)=1; generators use length(0)=0, so "
                    "comparison starts at n=1"});
    list.push_back({"A037861", "e0(n) - e1(n)", 0,
                    [](int64_t n) { return n == 0 ? 1 : zeros(n) - popcount(n); },
                    {{"kind", "t4"}, {"alpha", 1}, {"c", 1}, {"d", -1}}, 0, 1,
                    "catalog counts one zero in \"0\"; comparison starts at n=1"});
    list.push_back({"A061313", "minimal steps from 1 to n via x-1 and 2x", 1,
                    [steps](int64_t n) { return steps[static_cast<size_t>(n)]; },
                    {{"kind", "t4"}, {"alpha", 1}, {"c", 2}, {"d", 1}}, 1, 1, ""});
    list.push_back({"A000027", "the natural numbers", 1,
                    [](int64_t n) { return n; },
                    {{"kind", "t4"}, {"alpha", 2}, {"c", 0}, {"d", 1}}, 0, 1, ""});
    list.push_back({"A035327", "binary complement within the length", 0,
                    [](int64_t n) {
                        return n == 0 ? 1 : ((int64_t(1) << bitlen(n)) - 1) ^ n;
                    },
                    {{"kind", "t4"}, {"alpha", 2}, {"c", 1}, {"d", 0}}, 0, 1,
                    "catalog complements \"0\" to 1; comparison starts at n=1"});
    list.push_back({"A003817", "2^(binary length) - 1", 0,
                    [](int64_t n) {
                        return n == 0 ? 0 : (int64_t(1) << bitlen(n)) - 1;
                    },
                    {{"kind", "t4"}, {"alpha", 2}, {"c", 1}, {"d", 1}}, 0, 0, ""});
    list.push_back({"A065359", "alternating bit sum", 0, alternating_bit_sum,
                    {{"kind", "t4"}, {"alpha", -1}, {"c", 0}, {"d", 1}}, 0, 0, ""});
    list.push_back({"A083905", "alternating-sign zero count (MSB fold)", 0,
                    [](int64_t n) { return digit_fold(n, -1, 1, 0); },
                    {{"kind", "t4"}, {"alpha", -1}, {"c", 1}, {"d", 0}}, 0, 0, ""});
    list.push_back({"A030300", "1 if the binary length of n is odd", 1,
                    [](int64_t n) { return bitlen(n) % 2 == 1 ? 1 : 0; },
                    {{"kind", "t4"}, {"alpha", -1}, {"c", 1}, {"d", 1}}, 0, 1, ""});
    list.push_back({"A005836", "ternary expansion contains no 2", 1,
                    [](int64_t n) { return bits_in_base(n - 1, 3); },
                    {{"kind", "t4"}, {"alpha", 3}, {"c", 0}, {"d", 1}}, 1, 1, ""});
    list.push_back({"A000695", "Moser-de Bruijn sequence (sums of distinct powers of 4)", 0,
                    [](int64_t n) { return bits_in_base(n, 4); },
                    {{"kind", "t4"}, {"alpha", 4}, {"c", 0}, {"d", 1}}, 0, 0, ""});
    list.push_back({"A002487", "Stern-Brocot (Carlitz) sequence", 0,
                    [a2487](int64_t n) { return a2487[static_cast<size_t>(n)]; },
                    {{"kind", "t5"}, {"c", 1}, {"tail", {1}}}, 1, 1,
                    "generated values are the n>=1 part of the catalog sequence"});
    list.push_back({"A005590", "fractal sequence a(2n)=a(n), a(2n+1)=a(n+1)-a(n)", 0,
                    [a5590](int64_t n) { return a5590[static_cast<size_t>(n)]; },
                    {{"kind", "t5"}, {"c", 1}, {"tail", {-1}}}, 1, 1,
                    "generated values are the n>=1 part of the catalog sequence"});
    list.push_back({"A006046", "total odd entries in rows 0..n-1 of Pascal's triangle", 0,
                    [](int64_t n) {
                        int64_t s = 0;
                        for (int64_t k = 0; k < n; ++k) s += int64_t(1) << popcount(k);
                        return s;
                    },
                    {{"kind", "t5"}, {"c", 3}, {"tail", {2}}}, 1, 1,
                    "generated values are the n>=1 part of the catalog sequence"});
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/fixtures";
    std::filesystem::create_directories(dir / "bfiles");

    json manifest = json::array();
    for (const Entry& e : entries()) {
        std::ofstream out(dir / "bfiles" / (e.anum + ".txt"));
        for (int64_t n = e.offset; n < e.offset + kTerms; ++n)
            out << n << " " << e.value(n) << "\n";

        json m;
        m["anum"] = e.anum;
        m["file"] = "bfiles/" + e.anum + ".txt";
        m["description"] = e.description;
        m["family"] = e.family;
        m["offset"] = e.offset;
        m["generated_offset"] = e.generated_offset;
        m["compare_from"] = e.compare_from;
        if (!e.note.empty()) m["note"] = e.note;
        manifest.push_back(std::move(m));
    }
    std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";

    // The infinity-sequence sample used as the classifier's negative case:
    // a_0 = 0, a_{2n} = -a_n, a_{2n+1} = a_n + 1.
    std::vector<int64_t> norgard{0};
    for (int64_t n = 1; n < 64; ++n)
        norgard.push_back(n % 2 == 0 ? -norgard[static_cast<size_t>(n / 2)]
                                     : norgard[static_cast<size_t>(n / 2)] + 1);
    std::ofstream nf(dir / "bfiles" / "norgard.txt");
    for (int64_t n = 0; n < 64; ++n) nf << n << " " << norgard[static_cast<size_t>(n)] << "\n";

    std::cout << "wrote fixtures to " << dir << "\n";
    return 0;
}
