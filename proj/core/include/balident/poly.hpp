#pragma once

#include "balident/bigint.hpp"
#include "balident/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace balident {

/// Dense univariate polynomial over a coefficient field K. Coefficient k of
/// x^k sits at index k; trailing zeros are trimmed, so the zero polynomial
/// has an empty coefficient vector and degree() == -1 (the "-infinity"
/// sentinel: over a field, degree(p*q) == degree(p) + degree(q) whenever
/// both factors are nonzero).
template <class K>
class Poly {
public:
  Poly() = default;
  explicit Poly(K constant) {
    coeffs_.push_back(std::move(constant));
    trim();
  }
  explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(K::one()); }
  static Poly x() { return monomial(K::one(), 1); }
  static Poly from_integer(BigInt n) { return Poly(K::from_integer(std::move(n))); }

  static Poly monomial(K coeff, std::size_t deg) {
    Poly p;
    if (coeff.is_zero())
      return p;
    p.coeffs_.assign(deg + 1, K::zero());
    p.coeffs_[deg] = std::move(coeff);
    return p;
  }

  /// Lifts a rational-coefficient polynomial into this coefficient field.
  static Poly embed(const Poly<Rational>& p) {
    std::vector<K> cs;
    cs.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients())
      cs.push_back(K(c));
    return Poly(std::move(cs));
  }

  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  const K& coeff(std::size_t k) const {
    static const K kZero = K::zero();
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }
  const std::vector<K>& coefficients() const { return coeffs_; }

  friend Poly operator-(const Poly& a) {
    std::vector<K> cs;
    cs.reserve(a.coeffs_.size());
    for (const K& c : a.coeffs_)
      cs.push_back(-c);
    return Poly(std::move(cs));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), K::zero());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i < a.coeffs_.size())
        cs[i] += a.coeffs_[i];
      if (i < b.coeffs_.size())
        cs[i] += b.coeffs_[i];
    }
    return Poly(std::move(cs));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
      return Poly();
    std::vector<K> cs(a.coeffs_.size() + b.coeffs_.size() - 1, K::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero())
        continue; // the families here are parity-graded; skipping zeros halves the work
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero())
          continue;
        cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(cs));
  }

  friend Poly operator*(const Poly& a, const K& s) {
    if (s.is_zero())
      return Poly();
    std::vector<K> cs;
    cs.reserve(a.coeffs_.size());
    for (const K& c : a.coeffs_)
      cs.push_back(c * s);
    return Poly(std::move(cs));
  }
  friend Poly operator*(const K& s, const Poly& a) { return a * s; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Horner evaluation in the coefficient field.
  K eval(const K& x0) const { return eval_as<K>(x0); }

  /// Horner evaluation in an extension L of the coefficient field
  /// (L must be constructible from K).
  template <class L>
  L eval_as(const L& x0) const {
    L acc = L(K::zero());
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * x0 + L(coeffs_[i]);
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1)
      return Poly();
    std::vector<K> cs;
    cs.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      cs.push_back(coeffs_[k] * K::from_integer(BigInt(k)));
    return Poly(std::move(cs));
  }

  /// Exact antiderivative difference over [a, b].
  K definite_integral(const K& a, const K& b) const {
    K at_b = K::zero();
    K at_a = K::zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      K c = coeffs_[k] / K::from_integer(BigInt(k + 1));
      at_b = at_b * b + c;
      at_a = at_a * a + c;
    }
    return at_b * b - at_a * a;
  }

  /// "216*x^3 - 12*x"; compound coefficients are parenthesized.
  std::string str(std::string_view var = "x") const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const K& c = coeffs_[k];
      if (c.is_zero())
        continue;
      std::string piece = c.str();
      bool compound = piece.find(' ') != std::string::npos;
      char sign = '+';
      if (!compound && piece.size() > 1 && piece[0] == '-') {
        sign = '-';
        piece = piece.substr(1);
      }
      if (compound)
        piece = "(" + piece + ")";
      std::string term;
      if (k == 0) {
        term = piece;
      } else {
        std::string xs = (k == 1) ? std::string(var) : std::string(var) + "^" + std::to_string(k);
        term = (piece == "1") ? xs : piece + "*" + xs;
      }
      if (out.empty())
        out = (sign == '-') ? "-" + term : term;
      else
        out += std::string(" ") + sign + " " + term;
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
      coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

template <class K>
Poly<K> pow(const Poly<K>& base, unsigned long long e) {
  Poly<K> r = Poly<K>::one();
  Poly<K> b = base;
  while (e > 0) {
    if (e & 1ULL)
      r *= b;
    b *= b;
    e >>= 1ULL;
  }
  return r;
}

} // namespace balident
