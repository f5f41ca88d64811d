// Copyright (c) 2026 the eisheights developers
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EISH_RATIONAL_HPP
#define EISH_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eish {

// Exact rational on int64 with __int128 intermediates. Overflow of a
// normalized result is an error, never wraparound.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { set(n, d); }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return from_i128(-(__int128)num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                         (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // a^e for integer e (e < 0 inverts).
    Rational pow(int e) const {
        if (e < 0) return (Rational(1) / *this).pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    double to_double() const { return (double)num_ / (double)den_; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void set(long long n, long long d) {
        *this = from_i128(n, d);
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    long long num_;
    long long den_;
};

inline Rational rational_pow_int(long long base, int e) {
    return Rational(base).pow(e);
}

} // namespace eish

#endif
