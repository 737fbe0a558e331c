#pragma once

#include "balident/rational.hpp"

#include <string>
#include <utility>

namespace balident {

/// Element a + b*sqrt(D) of the quadratic field Q(sqrt(D)). The discriminant
/// is a compile-time parameter of the field, not per-element state; values
/// from different fields do not mix (there is no cross-field operator, so a
/// mismatch is a compile error rather than a silent coercion).
template <int D>
class Quadratic {
  static_assert(D != 0 && D != 1, "discriminant must be a non-square integer");

public:
  static constexpr int discriminant = D;

  Quadratic() : rat_(), surd_() {}
  Quadratic(Rational rat) : rat_(std::move(rat)), surd_() {}
  Quadratic(long long n) : rat_(n), surd_() {}
  Quadratic(Rational rat, Rational surd) : rat_(std::move(rat)), surd_(std::move(surd)) {}

  static Quadratic zero() { return Quadratic(); }
  static Quadratic one() { return Quadratic(Rational::one()); }
  static Quadratic from_integer(BigInt n) { return Quadratic(Rational(std::move(n))); }
  /// sqrt(D) itself.
  static Quadratic surd_unit() { return Quadratic(Rational::zero(), Rational::one()); }

  const Rational& rat_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }

  bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }
  bool is_one() const { return rat_.is_one() && surd_.is_zero(); }
  bool is_rational() const { return surd_.is_zero(); }

  Quadratic conjugate() const { return Quadratic(rat_, -surd_); }

  /// a^2 - D*b^2; multiplicative, zero only at zero.
  Rational norm() const { return rat_ * rat_ - Rational(D) * surd_ * surd_; }

  Quadratic inverse() const {
    Rational n = norm();
    if (n.is_zero())
      throw DivisionByZeroError("inverse of zero-norm quadratic number");
    Rational inv = n.inverse();
    return Quadratic(rat_ * inv, -surd_ * inv);
  }

  friend Quadratic operator-(const Quadratic& a) { return Quadratic(-a.rat_, -a.surd_); }

  friend Quadratic operator+(const Quadratic& a, const Quadratic& b) {
    return Quadratic(a.rat_ + b.rat_, a.surd_ + b.surd_);
  }
  friend Quadratic operator-(const Quadratic& a, const Quadratic& b) {
    return Quadratic(a.rat_ - b.rat_, a.surd_ - b.surd_);
  }
  friend Quadratic operator*(const Quadratic& a, const Quadratic& b) {
    // (a1 + b1 sqrtD)(a2 + b2 sqrtD) = a1 a2 + D b1 b2 + (a1 b2 + b1 a2) sqrtD
    return Quadratic(a.rat_ * b.rat_ + Rational(D) * a.surd_ * b.surd_,
                     a.rat_ * b.surd_ + a.surd_ * b.rat_);
  }
  friend Quadratic operator/(const Quadratic& a, const Quadratic& b) { return a * b.inverse(); }

  Quadratic& operator+=(const Quadratic& o) { return *this = *this + o; }
  Quadratic& operator-=(const Quadratic& o) { return *this = *this - o; }
  Quadratic& operator*=(const Quadratic& o) { return *this = *this * o; }
  Quadratic& operator/=(const Quadratic& o) { return *this = *this / o; }

  friend bool operator==(const Quadratic& a, const Quadratic& b) {
    return a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }
  friend bool operator!=(const Quadratic& a, const Quadratic& b) { return !(a == b); }

  /// "1/2 + 3/2*sqrt5", "-sqrt5", "3"; for D = -1 the surd symbol is "i".
  std::string str() const {
    const std::string sym = surd_symbol();
    if (surd_.is_zero())
      return rat_.str();
    std::string surd_term;
    if (surd_.is_one())
      surd_term = sym;
    else if ((-surd_).is_one())
      surd_term = "-" + sym;
    else
      surd_term = surd_.str() + "*" + sym;
    if (rat_.is_zero())
      return surd_term;
    if (surd_.is_negative()) {
      Rational mag = -surd_;
      std::string m = mag.is_one() ? sym : mag.str() + "*" + sym;
      return rat_.str() + " - " + m;
    }
    return rat_.str() + " + " + surd_term;
  }

private:
  static std::string surd_symbol() {
    if constexpr (D == 5)
      return "sqrt5";
    else if constexpr (D == -1)
      return "i";
    else
      return "sqrt(" + std::to_string(D) + ")";
  }

  Rational rat_;
  Rational surd_;
};

using QSqrt5 = Quadratic<5>;
using QGauss = Quadratic<-1>;

inline QSqrt5 sqrt5() { return QSqrt5::surd_unit(); }
/// Golden ratio (1 + sqrt5)/2.
inline QSqrt5 golden_alpha() { return QSqrt5(Rational(1, 2), Rational(1, 2)); }
/// Conjugate root (1 - sqrt5)/2 = -1/alpha.
inline QSqrt5 golden_beta() { return QSqrt5(Rational(1, 2), Rational(-1, 2)); }
inline QGauss imaginary_unit() { return QGauss::surd_unit(); }

template <int D>
Quadratic<D> pow(const Quadratic<D>& base, long long e) {
  if (e < 0)
    return pow(base.inverse(), -e);
  Quadratic<D> r = Quadratic<D>::one();
  Quadratic<D> b = base;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1ULL)
      r *= b;
    b *= b;
    k >>= 1ULL;
  }
  return r;
}

} // namespace balident
