#include "dcgf/recurrence.hpp"

#include <functional>
#include <string>

namespace dcgf {

std::vector<Int> eval_linear(const LinearRecurrence& lr, long long order) {
    if (lr.coeffs.empty()) throw std::invalid_argument("linear recurrence needs D >= 1");
    if (lr.init.size() != lr.coeffs.size())
        throw std::invalid_argument("linear recurrence needs exactly D initial values");
    if (order < 1) throw std::invalid_argument("order must be positive");

    std::vector<Int> b;
    b.reserve(static_cast<size_t>(order));
    for (long long n = 0; n < order; ++n) {
        if (n < static_cast<long long>(lr.init.size())) {
            b.push_back(lr.init[static_cast<size_t>(n)]);
            continue;
        }
        Int acc = 0;
        for (size_t i = 0; i < lr.coeffs.size(); ++i)
            acc += lr.coeffs[i] * b[static_cast<size_t>(n) - i - 1];
        b.push_back(std::move(acc));
    }
    return b;
}

namespace {

struct Coverage {
    enum Kind { base, even, odd } kind;
};

// Exactly-one-rule coverage for an index, or a CoverageError naming it.
Coverage coverage_for(const DCRecurrence& rec, long long idx) {
    int hits = 0;
    Coverage cov{Coverage::base};
    if (rec.base.count(idx)) {
        ++hits;
        cov.kind = Coverage::base;
    }
    if (idx % 2 == 0 && idx / 2 >= rec.even.min_n) {
        ++hits;
        cov.kind = Coverage::even;
    }
    if (idx % 2 == 1 && idx / 2 >= rec.odd.min_n) {
        ++hits;
        cov.kind = Coverage::odd;
    }
    if (hits == 0)
        throw CoverageError("index " + std::to_string(idx) +
                                " is not covered by any base case or rule",
                            idx);
    if (hits > 1)
        throw CoverageError("index " + std::to_string(idx) +
                                " is covered more than once (base case overlaps a rule)",
                            idx);
    return cov;
}

bool uses_aux(const DCRecurrence& rec) {
    return rec.even.on_aux != 0 || rec.odd.on_aux != 0;
}

}  // namespace

std::vector<Int> eval_recurrence(const DCRecurrence& rec, long long order,
                                 EvalStrategy strategy) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (uses_aux(rec) && !rec.aux)
        throw std::invalid_argument("recurrence reads b_n but has no auxiliary sequence");

    std::vector<Int> b;
    if (rec.aux) b = eval_linear(*rec.aux, order);

    auto apply = [&](const AffineRule& rule, long long idx,
                     const std::function<const Int&(long long)>& get) {
        long long n = idx / 2;
        Int acc = rule.constant;
        if (rule.on_half != 0) acc += rule.on_half * get(n);
        for (size_t i = 0; i < rule.on_back.size(); ++i)
            if (rule.on_back[i] != 0)
                acc += rule.on_back[i] * get(n - static_cast<long long>(i) - 1);
        if (rule.on_aux != 0) acc += rule.on_aux * b[static_cast<size_t>(idx)];
        return acc;
    };

    static const Int zero = 0;

    if (strategy == EvalStrategy::bottom_up) {
        std::vector<Int> a(static_cast<size_t>(order));
        std::function<const Int&(long long)> get = [&](long long j) -> const Int& {
            return j < 0 ? zero : a[static_cast<size_t>(j)];
        };
        for (long long idx = 0; idx < order; ++idx) {
            Coverage cov = coverage_for(rec, idx);
            switch (cov.kind) {
                case Coverage::base: a[static_cast<size_t>(idx)] = rec.base.at(idx); break;
                case Coverage::even: a[static_cast<size_t>(idx)] = apply(rec.even, idx, get); break;
                case Coverage::odd: a[static_cast<size_t>(idx)] = apply(rec.odd, idx, get); break;
            }
        }
        return a;
    }

    // Memoized top-down. Dependencies (n/2 and n-i) are strictly decreasing,
    // so a dense table of size `order` suffices.
    std::vector<std::optional<Int>> memo(static_cast<size_t>(order));
    std::function<const Int&(long long)> value = [&](long long idx) -> const Int& {
        if (idx < 0) return zero;
        auto& slot = memo[static_cast<size_t>(idx)];
        if (slot) return *slot;
        Coverage cov = coverage_for(rec, idx);
        Int v;
        switch (cov.kind) {
            case Coverage::base: v = rec.base.at(idx); break;
            case Coverage::even: v = apply(rec.even, idx, value); break;
            case Coverage::odd: v = apply(rec.odd, idx, value); break;
        }
        slot = std::move(v);
        return *slot;
    };
    std::vector<Int> a;
    a.reserve(static_cast<size_t>(order));
    for (long long idx = order - 1; idx >= 0; --idx) value(idx);
    for (long long idx = 0; idx < order; ++idx) a.push_back(*memo[static_cast<size_t>(idx)]);
    return a;
}

DCRecurrence family_recurrence(const FamilySpec& raw) {
    FamilySpec spec = resolve(raw);
    DCRecurrence rec;
    switch (spec.kind) {
        case FamilyKind::t1:
            rec.base[0] = 0;
            rec.even = {.on_half = spec.c, .constant = 1, .min_n = 1};
            rec.odd = {.constant = 1};
            break;
        case FamilyKind::t2:
            rec.base[0] = 0;
            rec.even = {.on_half = spec.c, .min_n = 1};
            rec.odd = {.constant = 1};
            break;
        case FamilyKind::t3:
            rec.base[0] = 1;
            rec.even = {.on_half = 1, .min_n = 1};
            rec.odd = {.on_half = spec.c};
            break;
        case FamilyKind::t4:
            rec.base[0] = 0;
            rec.even = {.on_half = spec.alpha, .constant = spec.c, .min_n = 1};
            rec.odd = {.on_half = spec.alpha, .constant = spec.d};
            break;
        case FamilyKind::t5:
            rec.base[0] = 1;
            rec.even = {.on_half = 1, .on_back = spec.tail, .min_n = 1};
            rec.odd = {.on_half = spec.c};
            break;
        case FamilyKind::t6: {
            if (!spec.t6_regularized)
                throw std::invalid_argument(
                    "t6 needs an explicit constant-term convention; set "
                    "t6_regularized (summands less their constant 1, a_0 = 0)");
            rec.base[0] = 0;
            rec.even = {.on_half = 1, .on_aux = 1, .min_n = 1};
            rec.odd = {.on_aux = 1};
            // b is the expansion of 1/(1 - sum c_i z^i): b_0 = 1, then the
            // recurrence itself supplies b_1..b_{D-1}.
            LinearRecurrence lr;
            lr.coeffs = spec.tail;
            lr.init.resize(spec.tail.size());
            lr.init[0] = 1;
            for (size_t n = 1; n < lr.init.size(); ++n) {
                Int acc = 0;
                for (size_t i = 1; i <= n; ++i)
                    acc += spec.tail[i - 1] * lr.init[n - i];
                lr.init[n] = std::move(acc);
            }
            rec.aux = std::move(lr);
            break;
        }
        default:
            throw std::invalid_argument("unresolved family kind");
    }
    return rec;
}

BitStats bit_stats(unsigned long long n) {
    BitStats s;
    if (n == 0) return s;
    int v2 = 0;
    unsigned long long m = n;
    while ((m & 1ULL) == 0) {
        ++v2;
        m >>= 1;
    }
    s.v2 = v2;
    for (m = n; m != 0; m >>= 1) {
        ++s.len;
        if (m & 1ULL)
            ++s.e1;
        else
            ++s.e0;
    }
    return s;
}

int v2_of(unsigned long long n) {
    if (n == 0) throw std::invalid_argument("v2(0) is undefined");
    return *bit_stats(n).v2;
}

TruncatedSeries two_pow_e0_series(long long order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    std::vector<Int> c(static_cast<size_t>(order));
    for (long long i = 0; i < order; ++i) {
        Int v = 1;
        v <<= bit_stats(static_cast<unsigned long long>(i)).e0;
        c[static_cast<size_t>(i)] = std::move(v);
    }
    return TruncatedSeries{std::move(c)};
}

}  // namespace dcgf
