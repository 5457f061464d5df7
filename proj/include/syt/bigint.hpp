#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "syt/error.hpp"

namespace syt {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Counting sequences and characteristic polynomial coefficients stay well
// under a few hundred limbs, so schoolbook arithmetic is enough.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) { negative_ = true; }
        unsigned long long m = negative_ ? 0ull - static_cast<unsigned long long>(v)
                                         : static_cast<unsigned long long>(v);
        while (m) { limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu)); m >>= 32; }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = (s[i] == '-'); ++i; }
        if (i == s.size()) fail(errc::parse_error, "empty integer literal");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail(errc::parse_error, "bad digit in integer literal");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.negative_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = mag_u64();
        return negative_ ? m <= 0x8000000000000000ull : m <= 0x7fffffffffffffffull;
    }
    long long to_int64() const {
        unsigned long long m = mag_u64();
        return negative_ ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.negative_ ? -c : c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.negative_ = !r.negative_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) { r.limbs_ = sub_mag(a.limbs_, b.limbs_); r.negative_ = a.negative_; }
        else       { r.limbs_ = sub_mag(b.limbs_, a.limbs_); r.negative_ = b.negative_; }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned long long carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned long long cur = r.limbs_[i + j] +
                    static_cast<unsigned long long>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                unsigned long long cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.negative_ = (a.negative_ != b.negative_);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated toward zero, like C++ integer division.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) fail(errc::internal_inconsistency, "division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) { q = BigInt(); r = a; return; }
        if (b.limbs_.size() == 1) {
            q = a;
            uint32_t rem = q.divmod_small(b.limbs_[0]);
            q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
            r = BigInt(static_cast<long long>(rem));
            if (a.negative_ && !r.is_zero()) r.negative_ = true;
            return;
        }
        divmod_knuth(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.trim(); r.trim();
        q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
        r.negative_ = a.negative_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return r;
    }

    // Quotient known to be exact; raises if a remainder shows up.
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) fail(errc::internal_inconsistency, "inexact division");
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.negative_ = false; b.negative_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.negative_ = false;
        }
        return a;
    }

    static BigInt abs(BigInt a) { a.negative_ = false; return a; }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt t = *this;
        std::string digits;
        while (!t.is_zero()) {
            uint32_t rem = t.divmod_small(1000000000u);
            std::string chunk = std::to_string(rem);
            if (!t.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return negative_ ? "-" + digits : digits;
    }

private:
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros
    bool negative_ = false;

    unsigned long long mag_u64() const {
        unsigned long long m = 0;
        if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }

    void trim() { while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back(); }

    void mul_small(uint32_t f) {
        unsigned long long carry = 0;
        for (auto& l : limbs_) {
            unsigned long long cur = static_cast<unsigned long long>(l) * f + carry;
            l = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
        trim();
    }

    void add_small(uint32_t v) {
        unsigned long long carry = v;
        for (size_t i = 0; carry && i < limbs_.size(); ++i) {
            unsigned long long cur = limbs_[i] + carry;
            limbs_[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }

    uint32_t divmod_small(uint32_t d) {
        unsigned long long rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size() + 1, 0);
        unsigned long long carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            unsigned long long cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        r[big.size()] = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        long long borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            long long cur = static_cast<long long>(r[i]) - borrow -
                            (i < b.size() ? static_cast<long long>(b[i]) : 0ll);
            if (cur < 0) { cur += 1ll << 32; borrow = 1; } else { borrow = 0; }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized limbs; |a| >= |b|, b has >= 2 limbs.
    static void divmod_knuth(std::vector<uint32_t> a, std::vector<uint32_t> b,
                             std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        int shift = 0;
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        a = shl_bits(a, shift);
        b = shl_bits(b, shift);
        size_t n = b.size(), m = a.size() - n;
        a.push_back(0);
        q.assign(m + 1, 0);
        const unsigned long long BASE = 1ull << 32;
        for (size_t j = m + 1; j-- > 0;) {
            unsigned long long num =
                (static_cast<unsigned long long>(a[j + n]) << 32) | a[j + n - 1];
            unsigned long long qhat = num / b[n - 1];
            unsigned long long rhat = num % b[n - 1];
            while (qhat >= BASE ||
                   qhat * b[n - 2] > ((rhat << 32) | a[j + n - 2])) {
                --qhat;
                rhat += b[n - 1];
                if (rhat >= BASE) break;
            }
            // multiply-subtract, may go negative by one qhat step
            long long borrow = 0;
            unsigned long long carry = 0;
            for (size_t i = 0; i < n; ++i) {
                unsigned long long p = qhat * b[i] + carry;
                carry = p >> 32;
                long long cur = static_cast<long long>(a[i + j]) - borrow -
                                static_cast<long long>(p & 0xffffffffu);
                if (cur < 0) { cur += 1ll << 32; borrow = 1; } else { borrow = 0; }
                a[i + j] = static_cast<uint32_t>(cur);
            }
            long long cur = static_cast<long long>(a[j + n]) - borrow -
                            static_cast<long long>(carry);
            bool negative = cur < 0;
            if (negative) cur += 1ll << 32;
            a[j + n] = static_cast<uint32_t>(cur);
            if (negative) {
                --qhat;
                unsigned long long c = 0;
                for (size_t i = 0; i < n; ++i) {
                    unsigned long long s = static_cast<unsigned long long>(a[i + j]) + b[i] + c;
                    a[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                    c = s >> 32;
                }
                a[j + n] = static_cast<uint32_t>(a[j + n] + c);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        a.resize(n);
        r = shr_bits(a, shift);
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& v, int s) {
        if (s == 0) return v;
        std::vector<uint32_t> r(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] |= v[i] << s;
            r[i + 1] = v[i] >> (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& v, int s) {
        if (s == 0) return v;
        std::vector<uint32_t> r(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            r[i] = v[i] >> s;
            if (i + 1 < v.size()) r[i] |= v[i + 1] << (32 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational with reduced normal form; denominator always positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(errc::internal_inconsistency, "rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) fail(errc::internal_inconsistency, "zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = BigInt::div_exact(num_, g);
        den_ = BigInt::div_exact(den_, g);
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    }
};

} // namespace syt
