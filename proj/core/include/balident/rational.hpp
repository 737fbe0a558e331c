#pragma once

#include "balident/bigint.hpp"
#include "balident/errors.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace balident {

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator. Zero is canonically 0/1. All arithmetic is exact.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw DivisionByZeroError("rational with zero denominator");
    normalize();
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_integer(BigInt n) { return Rational(std::move(n)); }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational inverse() const {
    if (is_zero())
      throw DivisionByZeroError("inverse of zero");
    return Rational(den_, num_);
  }

  friend Rational operator-(const Rational& a) { return raw(-a.num_, a.den_); }

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
    if (b.is_zero())
      throw DivisionByZeroError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "-691/2730", "3"; never a float.
  std::string str() const;

  /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

private:
  static Rational raw(BigInt num, BigInt den) {
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_; // > 0
};

/// Exact power; negative exponents require a nonzero base.
inline Rational pow(const Rational& base, long long e) {
  if (e < 0)
    return pow(base.inverse(), -e);
  Rational r = Rational::one();
  Rational b = base;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1ULL)
      r *= b;
    b *= b;
    k >>= 1ULL;
  }
  return r;
}

/// Exact square root when the argument is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& v);

} // namespace balident
