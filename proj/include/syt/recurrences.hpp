#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "syt/matrix.hpp"

namespace syt {

// Coefficients highest degree first; leading coefficient nonzero unless the
// polynomial is zero (empty list).
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.front() == BigInt(1); }

    void trim() {
        size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
};

// det(xI - M) by the Faddeev-LeVerrier trace iteration. Every division is
// by a step index and is exact over the integers; a nonzero remainder would
// mean corrupted arithmetic, and div_exact raises on it.
inline IntPolynomial char_poly(const Matrix& m) {
    size_t n = m.size();
    if (n == 0) fail(errc::not_square, "empty matrix");
    for (const auto& row : m)
        if (row.size() != n) fail(errc::not_square, "matrix is not square");

    IntPolynomial chi;
    chi.coeffs.assign(n + 1, BigInt());
    chi.coeffs[0] = BigInt(1);
    Matrix a = m;
    for (size_t k = 1; k <= n; ++k) {
        BigInt trace;
        for (size_t i = 0; i < n; ++i) trace += a[i][i];
        BigInt c = BigInt::div_exact(-trace, BigInt(static_cast<long long>(k)));
        chi.coeffs[k] = c;
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) a[i][i] += c;
        a = mat_mul(m, a);
    }
    return chi;
}

// Cofactor expansion over polynomial entries; exponential, for cross-checks
// on small matrices only.
inline IntPolynomial char_poly_cofactor(const Matrix& m) {
    size_t n = m.size();
    if (n == 0) fail(errc::not_square, "empty matrix");
    if (n > 8) fail(errc::shape_too_large, "cofactor route supports dim <= 8");
    using Poly = std::vector<BigInt>;  // low degree first here
    auto add = [](Poly a, const Poly& b) {
        if (b.size() > a.size()) a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        return a;
    };
    auto mul = [](const Poly& a, const Poly& b) {
        Poly r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    // entries of xI - M as degree<=1 polynomials
    std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            e[i][j] = {-m[i][j]};
            if (i == j) e[i][j].push_back(BigInt(1));
        }
    std::function<Poly(std::vector<size_t>, size_t)> det = [&](std::vector<size_t> cols,
                                                               size_t row) -> Poly {
        if (cols.size() == 1) return e[row][cols[0]];
        Poly total{BigInt()};
        for (size_t k = 0; k < cols.size(); ++k) {
            std::vector<size_t> rest;
            for (size_t t = 0; t < cols.size(); ++t)
                if (t != k) rest.push_back(cols[t]);
            Poly sub = mul(e[row][cols[k]], det(rest, row + 1));
            if (k % 2) for (auto& c : sub) c = -c;
            total = add(std::move(total), sub);
        }
        return total;
    };
    std::vector<size_t> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = i;
    Poly p = det(cols, 0);
    IntPolynomial chi;
    chi.coeffs.assign(p.rbegin(), p.rend());
    chi.trim();
    return chi;
}

// p(M), exact, by Horner over matrices.
inline Matrix poly_eval_matrix(const IntPolynomial& p, const Matrix& m) {
    size_t n = m.size();
    Matrix acc(n, Vector(n));
    for (const auto& c : p.coeffs) {
        acc = mat_mul(acc, m);
        for (size_t i = 0; i < n; ++i) acc[i][i] += c;
    }
    return acc;
}

// a(n) = coeffs[0]*a(n-1) + ... + coeffs[order-1]*a(n-order), exact integers.
struct Recurrence {
    int order = 0;
    std::vector<BigInt> coeffs;
    int trailing_zeros = 0;  // zero tail dropped from a characteristic polynomial
    long long valid_from = 0;

    int effective_order() const { return order - trailing_zeros; }
};

// Monic x^k + p_{k-1} x^{k-1} + ... + p_0 rearranges to
// a(n) = -p_{k-1} a(n-1) - ... - p_0 a(n-k); trailing zero coefficients are
// reported so callers can state the reduced order.
inline Recurrence recurrence_from_charpoly(const IntPolynomial& p, long long valid_from) {
    if (!p.is_monic()) fail(errc::not_monic, "characteristic polynomial must be monic");
    Recurrence r;
    r.order = p.degree();
    r.valid_from = valid_from;
    for (size_t i = 1; i < p.coeffs.size(); ++i) r.coeffs.push_back(-p.coeffs[i]);
    while (r.trailing_zeros < r.order &&
           r.coeffs[static_cast<size_t>(r.order - 1 - r.trailing_zeros)].is_zero())
        ++r.trailing_zeros;
    return r;
}

inline std::vector<BigInt> reduced_coeffs(const Recurrence& r) {
    return std::vector<BigInt>(r.coeffs.begin(),
                               r.coeffs.end() - r.trailing_zeros);
}

// True iff every full window at index >= max(valid_from, start+order)
// satisfies the recurrence exactly. terms[i] is the value at start_index+i.
inline bool verify_recurrence(const Recurrence& r, const std::vector<BigInt>& terms,
                              long long start_index) {
    if (static_cast<int>(terms.size()) <= r.order) return false;
    long long first = std::max(r.valid_from, start_index + r.order);
    bool any = false;
    for (long long n = first; n < start_index + static_cast<long long>(terms.size()); ++n) {
        BigInt predicted;
        for (int k = 1; k <= r.order; ++k)
            predicted += r.coeffs[static_cast<size_t>(k - 1)] *
                         terms[static_cast<size_t>(n - k - start_index)];
        if (predicted != terms[static_cast<size_t>(n - start_index)]) return false;
        any = true;
    }
    return any;
}

namespace detail {

// Solves the window system for a fixed order over the rationals; returns the
// coefficients when one solution fits every window.
inline std::optional<std::vector<Rational>> fit_order(const std::vector<BigInt>& terms, int k) {
    int rows = static_cast<int>(terms.size()) - k;
    int cols = k + 1;  // augmented
    std::vector<std::vector<Rational>> m(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        auto& row = m[static_cast<size_t>(r)];
        row.resize(static_cast<size_t>(cols));
        for (int c = 0; c < k; ++c)
            row[static_cast<size_t>(c)] = Rational(terms[static_cast<size_t>(k + r - 1 - c)]);
        row[static_cast<size_t>(k)] = Rational(terms[static_cast<size_t>(k + r)]);
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < k && rank < rows; ++c) {
        int p = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(rank)]);
        Rational inv = Rational(1) / m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        for (int cc = c; cc < cols; ++cc)
            m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int cc = c; cc < cols; ++cc)
                m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                    f * m[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) return std::nullopt;
    std::vector<Rational> sol(static_cast<size_t>(k), Rational(0));  // free unknowns -> 0
    for (int r = 0; r < rank; ++r)
        sol[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
            m[static_cast<size_t>(r)][static_cast<size_t>(k)];
    return sol;
}

} // namespace detail

// Shortest recurrence reproducing every supplied term, by exact rational
// elimination on the sliding-window system, order by order. Searches only
// orders whose system is overdetermined (k <= len/2). Counting sequences
// derived from a monic integer characteristic polynomial always reduce to
// integer coefficients; a fractional minimal fit is skipped in favor of the
// next integral one.
inline std::optional<Recurrence> minimal_recurrence(const std::vector<BigInt>& terms,
                                                    long long first_index = 0) {
    if (terms.size() < 4) fail(errc::too_few_terms, "need at least 4 terms");
    int max_order = static_cast<int>(terms.size()) / 2;
    for (int k = 1; k <= max_order; ++k) {
        auto sol = detail::fit_order(terms, k);
        if (!sol) continue;
        bool integral = true;
        for (const auto& c : *sol)
            if (!c.is_integer()) { integral = false; break; }
        if (!integral) continue;
        Recurrence r;
        r.order = k;
        for (const auto& c : *sol) r.coeffs.push_back(c.num());
        r.valid_from = first_index + k;
        if (verify_recurrence(r, terms, first_index)) return r;
    }
    return std::nullopt;
}

} // namespace syt
