#pragma once

#include "balident/bigint.hpp"
#include "balident/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace balident {

/// Order-N truncated exponential generating function over a ring R. The
/// stored coefficient c_n is the EGF-normalized one, f(z) = sum c_n z^n / n!,
/// so the product rule is exactly the binomial convolution
/// (f*g)_n = sum_k C(n,k) f_k g_{n-k} and no factorial denominators appear.
template <class R>
class TruncSeries {
public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1, R::zero()) {}

  /// Series of e^{p z}: c_n = p^n.
  static TruncSeries exp_linear(const R& p, std::size_t order) {
    TruncSeries f(order);
    R pw = R::one();
    for (std::size_t n = 0; n <= order; ++n) {
      f.coeffs_[n] = pw;
      if (n < order)
        pw = pw * p;
    }
    return f;
  }

  /// Series of sinh(q z): c_n = q^n for odd n, else 0.
  static TruncSeries sinh_linear(const R& q, std::size_t order) {
    TruncSeries f(order);
    R pw = R::one();
    for (std::size_t n = 0; n <= order; ++n) {
      if (n % 2 == 1)
        f.coeffs_[n] = pw;
      if (n < order)
        pw = pw * q;
    }
    return f;
  }

  /// Series of cosh(q z): c_n = q^n for even n, else 0.
  static TruncSeries cosh_linear(const R& q, std::size_t order) {
    TruncSeries f(order);
    R pw = R::one();
    for (std::size_t n = 0; n <= order; ++n) {
      if (n % 2 == 0)
        f.coeffs_[n] = pw;
      if (n < order)
        pw = pw * q;
    }
    return f;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& coeff(std::size_t n) const { return coeffs_.at(n); }
  void set_coeff(std::size_t n, R v) { coeffs_.at(n) = std::move(v); }

  friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
    check_orders(f, g);
    TruncSeries h(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n)
      h.coeffs_[n] = f.coeffs_[n] + g.coeffs_[n];
    return h;
  }
  friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
    check_orders(f, g);
    TruncSeries h(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n)
      h.coeffs_[n] = f.coeffs_[n] - g.coeffs_[n];
    return h;
  }

  /// Binomial convolution, truncated to the common order.
  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
    check_orders(f, g);
    const std::size_t N = f.order();
    // Pascal rows up to N
    std::vector<std::vector<BigInt>> binom(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      binom[n].assign(n + 1, 1);
      for (std::size_t k = 1; k < n; ++k)
        binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    TruncSeries h(N);
    for (std::size_t n = 0; n <= N; ++n) {
      R acc = R::zero();
      for (std::size_t k = 0; k <= n; ++k) {
        if (f.coeffs_[k].is_zero() || g.coeffs_[n - k].is_zero())
          continue;
        acc = acc + R::from_integer(binom[n][k]) * (f.coeffs_[k] * g.coeffs_[n - k]);
      }
      h.coeffs_[n] = acc;
    }
    return h;
  }

  /// Ring-scalar multiple.
  TruncSeries scaled(const R& s) const {
    TruncSeries h(order());
    for (std::size_t n = 0; n <= order(); ++n)
      h.coeffs_[n] = coeffs_[n] * s;
    return h;
  }

  /// Multiplication by z: c_0 = 0, c_n = n * a_{n-1}.
  TruncSeries shifted_z() const {
    TruncSeries h(order());
    for (std::size_t n = 1; n <= order(); ++n)
      h.coeffs_[n] = R::from_integer(BigInt(n)) * coeffs_[n - 1];
    return h;
  }

  /// Substitution z -> f z: c_n -> f^n c_n.
  TruncSeries scaled_z(const R& f) const {
    TruncSeries h(order());
    R pw = R::one();
    for (std::size_t n = 0; n <= order(); ++n) {
      h.coeffs_[n] = coeffs_[n] * pw;
      if (n < order())
        pw = pw * f;
    }
    return h;
  }

  friend bool operator==(const TruncSeries& f, const TruncSeries& g) {
    return f.coeffs_ == g.coeffs_;
  }
  friend bool operator!=(const TruncSeries& f, const TruncSeries& g) { return !(f == g); }

private:
  static void check_orders(const TruncSeries& f, const TruncSeries& g) {
    if (f.order() != g.order())
      throw OrderMismatchError("series order mismatch: " + std::to_string(f.order()) +
                               " vs " + std::to_string(g.order()));
  }

  std::vector<R> coeffs_;
};

} // namespace balident
