#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "adejac/error.hpp"

namespace adejac {

using Int = std::int64_t;

// Exact rational number on 64-bit integers.  All arithmetic in this project
// is desk-scale; intermediates go through 128 bits and overflow of the
// reduced result is a hard error, never silent wraparound.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(Int n, Int d) { assign(n, d); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        require(b.num_ != 0, "DivisionByZero", "rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Smallest integer >= *this, computed without ever leaving integers.
    Int ceil() const
    {
        Int q = num_ / den_;
        Int r = num_ % den_;
        return r > 0 ? q + 1 : q;
    }

    std::string str() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    void assign(Int n, Int d)
    {
        require(d != 0, "DivisionByZero", "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Int g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static Rational from128(i128 n, i128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 a = n < 0 ? -n : n;
        i128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lim = INT64_MAX;
        require(n <= lim && n >= -lim && d <= lim, "Overflow", "rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<Int>(n);
        r.den_ = static_cast<Int>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b)
    {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    Int num_;
    Int den_;
};

} // namespace adejac
