#pragma once

#include <vector>

#include "syt/bigint.hpp"

namespace syt {

using Matrix = std::vector<std::vector<BigInt>>;
using Vector = std::vector<BigInt>;

inline Matrix identity_matrix(size_t n) {
    Matrix m(n, Vector(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = BigInt(1);
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Matrix r(n, Vector(p));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

inline Vector mat_vec(const Matrix& a, const Vector& v) {
    Vector r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero()) r[i] += a[i][j] * v[j];
    return r;
}

inline Matrix mat_pow(Matrix base, unsigned long long e) {
    Matrix r = identity_matrix(base.size());
    while (e) {
        if (e & 1) r = mat_mul(r, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return r;
}

inline BigInt dot(const Vector& a, const Vector& b) {
    BigInt r;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

} // namespace syt
