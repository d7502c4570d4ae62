#include "dcgf/tworational.hpp"

namespace dcgf {

void validate(const LinearRepresentation& rep) {
    size_t n = rep.lambda.size();
    if (n == 0) throw std::invalid_argument("representation dimension must be >= 1");
    auto square = [n](const std::vector<std::vector<Int>>& m) {
        if (m.size() != n) return false;
        for (const auto& row : m)
            if (row.size() != n) return false;
        return true;
    };
    if (!square(rep.a0) || !square(rep.a1) || rep.gamma.size() != n)
        throw std::invalid_argument("representation matrices have inconsistent dimensions");
}

namespace {

std::vector<Int> mat_vec(const std::vector<std::vector<Int>>& m,
                         const std::vector<Int>& v) {
    std::vector<Int> r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) r[i] += m[i][j] * v[j];
    return r;
}

}  // namespace

Int eval_linear_rep(const LinearRepresentation& rep, unsigned long long n) {
    validate(rep);
    std::vector<Int> v = rep.gamma;
    // Rightmost factor first: A_{n_0} (the least significant bit) acts on
    // gamma before any other factor.
    for (unsigned long long m = n; m != 0; m >>= 1)
        v = mat_vec((m & 1ULL) ? rep.a1 : rep.a0, v);
    Int u = 0;
    for (size_t j = 0; j < v.size(); ++j)
        if (rep.lambda[j] != 0) u += rep.lambda[j] * v[j];
    return u;
}

LinearRepresentation rep_for_affine(const Int& alpha, const Int& c, const Int& d) {
    if (alpha == 0) throw std::invalid_argument("t4 requires |alpha| > 0");
    LinearRepresentation rep;
    rep.lambda = {0, 1};
    rep.a0 = {{alpha, 0}, {c, 1}};
    rep.a1 = {{alpha, 0}, {d, 1}};
    rep.gamma = {1, 0};
    return rep;
}

}  // namespace dcgf
