#pragma once

#include "balident/poly.hpp"
#include "balident/quadratic.hpp"
#include "balident/rational.hpp"

#include <string>
#include <utility>

namespace balident {

/// Element u(x) + v(x)*s of Q[x][s]/(s^2 - (9x^2 - 1)): rational-coefficient
/// polynomials extended by a formal square root s of 9x^2 - 1. Every product
/// is reduced back to the (plain, surd) basis via s^2 = 9x^2 - 1.
class SqrtExt {
public:
  SqrtExt() = default;
  explicit SqrtExt(Poly<Rational> plain) : plain_(std::move(plain)) {}
  SqrtExt(Poly<Rational> plain, Poly<Rational> surd)
      : plain_(std::move(plain)), surd_(std::move(surd)) {}

  /// 9x^2 - 1, the fixed modulus of the extension.
  static const Poly<Rational>& modulus();

  static SqrtExt zero() { return SqrtExt(); }
  static SqrtExt one() { return SqrtExt(Poly<Rational>::one()); }
  static SqrtExt s() { return SqrtExt(Poly<Rational>::zero(), Poly<Rational>::one()); }
  static SqrtExt x() { return SqrtExt(Poly<Rational>::x()); }
  static SqrtExt from_integer(BigInt n) { return SqrtExt(Poly<Rational>::from_integer(std::move(n))); }
  static SqrtExt embed(const Poly<Rational>& p) { return SqrtExt(p); }

  const Poly<Rational>& plain() const { return plain_; }
  const Poly<Rational>& surd() const { return surd_; }

  bool is_zero() const { return plain_.is_zero() && surd_.is_zero(); }
  bool is_one() const { return plain_.is_one() && surd_.is_zero(); }
  bool is_plain() const { return surd_.is_zero(); }

  friend SqrtExt operator-(const SqrtExt& a) { return SqrtExt(-a.plain_, -a.surd_); }

  friend SqrtExt operator+(const SqrtExt& a, const SqrtExt& b) {
    return SqrtExt(a.plain_ + b.plain_, a.surd_ + b.surd_);
  }
  friend SqrtExt operator-(const SqrtExt& a, const SqrtExt& b) {
    return SqrtExt(a.plain_ - b.plain_, a.surd_ - b.surd_);
  }
  friend SqrtExt operator*(const SqrtExt& a, const SqrtExt& b);

  SqrtExt& operator+=(const SqrtExt& o) { return *this = *this + o; }
  SqrtExt& operator-=(const SqrtExt& o) { return *this = *this - o; }
  SqrtExt& operator*=(const SqrtExt& o) { return *this = *this * o; }

  friend bool operator==(const SqrtExt& a, const SqrtExt& b) {
    return a.plain_ == b.plain_ && a.surd_ == b.surd_;
  }
  friend bool operator!=(const SqrtExt& a, const SqrtExt& b) { return !(a == b); }

  /// Evaluation at a point (x0, s0) with s0^2 = 9*x0^2 - 1; the consistency
  /// precondition is checked and a violation reports both sides.
  template <int D>
  Quadratic<D> eval(const Quadratic<D>& x0, const Quadratic<D>& s0) const {
    Quadratic<D> want = Quadratic<D>(Rational(9)) * x0 * x0 - Quadratic<D>::one();
    Quadratic<D> got = s0 * s0;
    if (got != want)
      throw RootConsistencyError("root consistency violated: s0^2 = " + got.str() +
                                 " but 9*x0^2 - 1 = " + want.str());
    return plain_.template eval_as<Quadratic<D>>(x0) +
           surd_.template eval_as<Quadratic<D>>(x0) * s0;
  }

  /// "u(x) + v(x)*s", e.g. "(216*x^3 - 12*x) + (-72*x^2)*s".
  std::string str() const;

private:
  Poly<Rational> plain_;
  Poly<Rational> surd_;
};

SqrtExt pow(const SqrtExt& base, unsigned long long e);

} // namespace balident
