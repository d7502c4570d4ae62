#include "dcgf/fit.hpp"

#include <algorithm>

#include "dcgf/recurrence.hpp"

namespace dcgf {

namespace {

constexpr long long kMinSampleLength = 8;
constexpr long long kMinOverlap = 8;

// All tails c_1..c_D with D <= max_depth, |c_i| <= max_tail, c_D != 0, in
// lexicographic order per depth.
std::vector<std::vector<Int>> enumerate_tails(const FitBounds& b) {
    std::vector<std::vector<Int>> tails;
    for (int depth = 1; depth <= b.max_depth; ++depth) {
        std::vector<long long> cur(static_cast<size_t>(depth), -b.max_tail);
        while (true) {
            if (cur.back() != 0) {
                std::vector<Int> tail(cur.begin(), cur.end());
                tails.push_back(std::move(tail));
            }
            int i = depth - 1;
            while (i >= 0 && cur[static_cast<size_t>(i)] == b.max_tail) {
                cur[static_cast<size_t>(i)] = -b.max_tail;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
        }
    }
    return tails;
}

std::vector<FamilySpec> enumerate_candidates(const FitBounds& b) {
    std::vector<FamilySpec> out;
    for (long long c = -b.max_c; c <= b.max_c; ++c)
        if (c != 0) out.push_back(FamilySpec::make_t1(c));
    for (long long c = -b.max_c; c <= b.max_c; ++c)
        if (c != 0) out.push_back(FamilySpec::make_t2(c));
    for (long long c = -b.max_c; c <= b.max_c; ++c)
        if (c != 0) out.push_back(FamilySpec::make_t3(c));
    for (long long alpha = -b.max_alpha; alpha <= b.max_alpha; ++alpha) {
        if (alpha == 0) continue;
        for (long long c = -b.max_c; c <= b.max_c; ++c)
            for (long long d = -b.max_d; d <= b.max_d; ++d)
                out.push_back(FamilySpec::make_t4(alpha, c, d));
    }
    auto tails = enumerate_tails(b);
    for (long long c = -b.max_c; c <= b.max_c; ++c)
        for (const auto& tail : tails) out.push_back(FamilySpec::make_t5(c, tail));
    for (const auto& tail : tails) out.push_back(FamilySpec::make_t6(tail));
    return out;
}

// Does `values` (family indices 0..) reproduce the sample when the sample's
// first value sits at family index `align`? Positions that fall below family
// index 0 are outside the overlap.
bool matches_at(const SequenceSample& sample, const std::vector<Int>& values,
                long long align, long long* overlap_out) {
    long long overlap = 0;
    for (size_t j = 0; j < sample.values.size(); ++j) {
        long long idx = align + static_cast<long long>(j);
        if (idx < 0) continue;
        if (idx >= static_cast<long long>(values.size())) return false;
        if (values[static_cast<size_t>(idx)] != sample.values[j]) return false;
        ++overlap;
    }
    *overlap_out = overlap;
    return overlap >= kMinOverlap;
}

}  // namespace

FitReport classify(const SequenceSample& sample, const FitBounds& bounds) {
    if (static_cast<long long>(sample.values.size()) < kMinSampleLength)
        throw std::invalid_argument("sample too short: need at least " +
                                    std::to_string(kMinSampleLength) + " values");
    if (bounds.max_c < 1 || bounds.max_alpha < 1 || bounds.max_d < 0 ||
        bounds.max_depth < 1 || bounds.max_tail < 1)
        throw std::invalid_argument("empty bounds box");

    const long long needed = std::max<long long>(
        sample.offset + static_cast<long long>(sample.values.size()) + 2, 8);

    FitReport report;
    report.bounds = bounds;
    for (const FamilySpec& spec : enumerate_candidates(bounds)) {
        auto values = eval_recurrence(family_recurrence(spec), needed);
        for (long long delta = -1; delta <= 1; ++delta) {
            long long align = sample.offset + delta;
            long long overlap = 0;
            if (!matches_at(sample, values, align, &overlap)) continue;
            // Re-verify through the independent evaluation path before
            // reporting; a report entry must reproduce the sample.
            auto check = eval_recurrence(family_recurrence(spec), needed,
                                         EvalStrategy::memoized_top_down);
            long long check_overlap = 0;
            if (!matches_at(sample, check, align, &check_overlap) ||
                check_overlap != overlap)
                continue;
            report.matches.push_back({spec, align, overlap});
        }
    }
    return report;
}

}  // namespace dcgf
