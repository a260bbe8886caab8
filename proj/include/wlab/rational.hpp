#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "wlab/errors.hpp"

namespace wlab {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always reduced, denominator > 0.
/// Canonical zero is 0/1. Wraps GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long long n) : v_(BigInt(std::to_string(n))) {}
    Rational(long num, long den);
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "num", "num/den", optional leading '-'.
    static Rational parse(std::string_view s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Serializes as "num/den", den omitted when 1.
    std::string str() const;

    // Exact conversion to long; throws UsageError if not representable.
    long to_long() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { Rational r; r.v_ = ::abs(a.v_); return r; }

private:
    mpq_class v_;
};

BigInt factorial(unsigned long n);
BigInt double_factorial(unsigned long n); // n!! with 0!! = 1!! = 1
BigInt binomial(const BigInt& n, unsigned long k);

} // namespace wlab
