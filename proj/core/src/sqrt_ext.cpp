#include "balident/sqrt_ext.hpp"

namespace balident {

const Poly<Rational>& SqrtExt::modulus() {
  static const Poly<Rational> kMod(
      std::vector<Rational>{Rational(-1), Rational(0), Rational(9)});
  return kMod;
}

SqrtExt operator*(const SqrtExt& a, const SqrtExt& b) {
  // (u1 + v1 s)(u2 + v2 s) = u1 u2 + v1 v2 (9x^2-1) + (u1 v2 + v1 u2) s
  Poly<Rational> plain = a.plain_ * b.plain_ + a.surd_ * b.surd_ * SqrtExt::modulus();
  Poly<Rational> surd = a.plain_ * b.surd_ + a.surd_ * b.plain_;
  return SqrtExt(std::move(plain), std::move(surd));
}

SqrtExt pow(const SqrtExt& base, unsigned long long e) {
  SqrtExt r = SqrtExt::one();
  SqrtExt b = base;
  while (e > 0) {
    if (e & 1ULL)
      r *= b;
    b *= b;
    e >>= 1ULL;
  }
  return r;
}

std::string SqrtExt::str() const {
  if (surd_.is_zero())
    return plain_.str();
  std::string surd_term = "(" + surd_.str() + ")*s";
  if (plain_.is_zero())
    return surd_term;
  return "(" + plain_.str() + ") + " + surd_term;
}

} // namespace balident
