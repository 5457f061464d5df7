#include <doctest.h>

#include <random>

#include "syt/recurrences.hpp"
#include "syt/transfer.hpp"

using namespace syt;

namespace {

Matrix small(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (long long v : r) m.back().emplace_back(v);
    }
    return m;
}

IntPolynomial poly(std::initializer_list<long long> coeffs) {
    IntPolynomial p;
    for (long long c : coeffs) p.coeffs.emplace_back(c);
    return p;
}

Matrix random_matrix(std::mt19937& rng, size_t n, int span) {
    Matrix m(n, Vector(n));
    for (auto& row : m)
        for (auto& e : row) e = BigInt(static_cast<long long>(rng() % (2 * span + 1)) - span);
    return m;
}

bool is_zero_matrix(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt());
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

Shape row_shape(int len) {
    std::vector<Cell> cells;
    for (int c = 1; c <= len; ++c) cells.push_back({1, c});
    return Shape(std::move(cells));
}

std::vector<BigInt> transfer_terms(const TransferSystem& ts, int count) {
    std::vector<BigInt> terms;
    Vector v = ts.v0;
    for (int k = 0; k < count; ++k) {
        terms.push_back(dot(ts.weights, v));
        v = mat_vec(ts.matrix, v);
    }
    return terms;
}

} // namespace

TEST_CASE("characteristic polynomial fixtures") {
    CHECK(char_poly(small({{3, 4}, {2, 3}})) == poly({1, -6, 1}));
    CHECK(char_poly(identity_matrix(3)) == poly({1, -3, 3, -1}));
    CHECK(char_poly(small({{5}})) == poly({1, -5}));
    CHECK_THROWS_AS(char_poly(Matrix{{BigInt(1), BigInt(2)}}), error);
}

TEST_CASE("trace iteration agrees with cofactor expansion") {
    std::mt19937 rng(19);
    for (size_t n = 1; n <= 5; ++n)
        for (int round = 0; round < 20; ++round) {
            Matrix m = random_matrix(rng, n, 9);
            CHECK(char_poly(m) == char_poly_cofactor(m));
        }
}

TEST_CASE("a matrix annihilates its characteristic polynomial") {
    std::mt19937 rng(23);
    for (size_t n : {1, 2, 3, 5, 8, 13, 20}) {
        Matrix m = random_matrix(rng, n, 4);
        CHECK(is_zero_matrix(poly_eval_matrix(char_poly(m), m)));
    }
    Matrix m41 = small({{3, 4}, {2, 3}});
    CHECK(is_zero_matrix(poly_eval_matrix(char_poly(m41), m41)));
    auto m51 = build_transfer_system(validate_periodic(row_shape(5)), 1).matrix;
    CHECK(is_zero_matrix(poly_eval_matrix(char_poly(m51), m51)));
}

TEST_CASE("block triangular determinant multiplicativity") {
    std::mt19937 rng(29);
    for (int round = 0; round < 10; ++round) {
        Matrix a = random_matrix(rng, 3, 6);
        Matrix c = random_matrix(rng, 4, 6);
        Matrix block(7, Vector(7));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) block[i][j] = a[i][j];
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) block[i + 3][j + 3] = c[i][j];
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j)
                block[i][j + 3] = BigInt(static_cast<long long>(rng() % 13) - 6);
        CHECK(char_poly(block) == poly_mul(char_poly(a), char_poly(c)));
    }
}

TEST_CASE("recurrence extraction from monic polynomials") {
    Recurrence r1 = recurrence_from_charpoly(poly({1, -6, 1}), 4);
    CHECK(r1.order == 2);
    CHECK(r1.coeffs == std::vector<BigInt>{BigInt(6), BigInt(-1)});
    CHECK(r1.trailing_zeros == 0);
    CHECK(r1.valid_from == 4);

    Recurrence r2 = recurrence_from_charpoly(poly({1, -24, 40, 8, 0, 0, 0, 0}), 10);
    CHECK(r2.order == 7);
    CHECK(reduced_coeffs(r2) == std::vector<BigInt>{BigInt(24), BigInt(-40), BigInt(-8)});
    CHECK(r2.trailing_zeros == 4);
    CHECK(r2.effective_order() == 3);

    IntPolynomial big;
    big.coeffs.assign(67, BigInt());
    big.coeffs[0] = BigInt(1);
    big.coeffs[1] = BigInt(-120);
    big.coeffs[2] = BigInt(1672);
    big.coeffs[3] = BigInt(-544);
    big.coeffs[4] = BigInt(6672);
    big.coeffs[5] = BigInt(-256);
    Recurrence r3 = recurrence_from_charpoly(big, 0);
    CHECK(r3.trailing_zeros == 61);
    CHECK(reduced_coeffs(r3) == std::vector<BigInt>{BigInt(120), BigInt(-1672), BigInt(544),
                                                    BigInt(-6672), BigInt(256)});

    CHECK_THROWS_AS(recurrence_from_charpoly(poly({2, -6, 1}), 0), error);
}

TEST_CASE("shortest recurrence detection") {
    std::vector<BigInt> geometric{BigInt(1), BigInt(2), BigInt(4), BigInt(8), BigInt(16), BigInt(32)};
    auto r = minimal_recurrence(geometric);
    REQUIRE(r.has_value());
    CHECK(r->order == 1);
    CHECK(r->coeffs == std::vector<BigInt>{BigInt(2)});

    std::vector<BigInt> powers;
    BigInt v(1);
    for (int i = 0; i < 12; ++i) { powers.push_back(v); v *= BigInt(2); }
    auto r2 = minimal_recurrence(powers, 1);
    REQUIRE(r2.has_value());
    CHECK(r2->order == 1);

    auto ts = build_transfer_system(validate_periodic(row_shape(4)), 1);
    auto terms = transfer_terms(ts, 12);
    auto r3 = minimal_recurrence(terms, ts.n0);
    REQUIRE(r3.has_value());
    CHECK(r3->order == 2);
    CHECK(r3->coeffs == std::vector<BigInt>{BigInt(6), BigInt(-1)});

    // geometric run broken in the last term: every window system is inconsistent
    std::vector<BigInt> broken{BigInt(1), BigInt(2), BigInt(4), BigInt(8),
                               BigInt(16), BigInt(32), BigInt(64), BigInt(129)};
    CHECK_FALSE(minimal_recurrence(broken).has_value());
    CHECK_THROWS_AS(minimal_recurrence(std::vector<BigInt>{BigInt(1), BigInt(2)}), error);
}

TEST_CASE("recurrence verification") {
    Recurrence fib;
    fib.order = 2;
    fib.coeffs = {BigInt(1), BigInt(1)};
    fib.valid_from = 2;
    std::vector<BigInt> fibs{BigInt(0), BigInt(1), BigInt(1), BigInt(2), BigInt(3), BigInt(5),
                             BigInt(8)};
    CHECK(verify_recurrence(fib, fibs, 0));

    Recurrence wrong;
    wrong.order = 2;
    wrong.coeffs = {BigInt(6), BigInt(-1)};
    wrong.valid_from = 2;
    std::vector<BigInt> powers{BigInt(1), BigInt(2), BigInt(4), BigInt(8), BigInt(16)};
    CHECK_FALSE(verify_recurrence(wrong, powers, 0));

    Recurrence dbl;
    dbl.order = 1;
    dbl.coeffs = {BigInt(2)};
    dbl.valid_from = 1;
    CHECK(verify_recurrence(dbl, std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(4), BigInt(8)},
                            0));
}

TEST_CASE("trace recurrence is confirmed by generated terms, detector never longer") {
    for (int len : {3, 4, 5}) {
        auto ts = build_transfer_system(validate_periodic(row_shape(len)), 1);
        auto chi = char_poly(ts.matrix);
        Recurrence r = recurrence_from_charpoly(chi, ts.n0 + chi.degree());
        auto terms = transfer_terms(ts, chi.degree() + 12);
        CHECK(verify_recurrence(r, terms, ts.n0));
        auto detected = minimal_recurrence(terms, ts.n0);
        REQUIRE(detected.has_value());
        CHECK(detected->order <= r.effective_order());
    }
}
