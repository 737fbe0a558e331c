#pragma once

#include "balident/poly.hpp"
#include "balident/quadratic.hpp"
#include "balident/rational.hpp"
#include "balident/sequences.hpp"
#include "balident/sqrt_ext.hpp"
#include "balident/trunc_series.hpp"

#include <cstddef>

namespace balident::egf {

// Closed-form exponential generating functions of the balancing families,
// built from exp/sinh/cosh products with SqrtExt coefficients. The 1/s
// prefactor of the sinh-family generators is exact parity bookkeeping:
// odd powers of s carry exactly one s, so sinh(c*s*z)/s has plain
// coefficients c^n (9x^2-1)^{(n-1)/2} and s is never inverted (it has zero
// divisors at 9x^2 = 1).

/// sum B*_{2n+1}(x) z^n/n!
TruncSeries<SqrtExt> balancing_odd(std::size_t order);
/// sum B*_{2n}(x) z^n/n!
TruncSeries<SqrtExt> balancing_even(std::size_t order);
/// sum C_{2n+1}(x) z^n/n!
TruncSeries<SqrtExt> lucas_balancing_odd(std::size_t order);
/// sum C_{2n}(x) z^n/n!
TruncSeries<SqrtExt> lucas_balancing_even(std::size_t order);
/// sum B*_n(x) z^n/n!
TruncSeries<SqrtExt> balancing_all(std::size_t order);
/// sum C_n(x) z^n/n!
TruncSeries<SqrtExt> lucas_balancing_all(std::size_t order);

/// sinh(c * s * z) / s for a plain polynomial multiplier c.
TruncSeries<SqrtExt> sinh_div_s(const Poly<Rational>& c, std::size_t order);

enum class BernoulliArg { Zero, Half, SymbolicX };

/// Series with c_n = scale^n * B_n(arg); SymbolicX keeps B_n(x) embedded
/// as the plain polynomial part of the ring.
template <class R>
TruncSeries<R> bernoulli_series(BernoulliArg arg, const R& scale, std::size_t order,
                                SequenceCache& cache) {
  TruncSeries<R> f(order);
  R pw = R::one();
  for (std::size_t n = 0; n <= order; ++n) {
    Poly<Rational> value;
    switch (arg) {
    case BernoulliArg::Zero:
      value = Poly<Rational>(cache.bernoulli_number(n));
      break;
    case BernoulliArg::Half:
      value = Poly<Rational>(cache.bernoulli_poly(n).eval(Rational(1, 2)));
      break;
    case BernoulliArg::SymbolicX:
      value = cache.bernoulli_poly(n);
      break;
    }
    f.set_coeff(n, pw * R::embed(value));
    if (n < order)
      pw = pw * scale;
  }
  return f;
}

/// Even part only: c_n = scale^n * B_n for even n, 0 for odd n.
template <class R>
TruncSeries<R> bernoulli_even_series(const R& scale, std::size_t order, SequenceCache& cache) {
  TruncSeries<R> f(order);
  R pw = R::one();
  for (std::size_t n = 0; n <= order; ++n) {
    if (n % 2 == 0)
      f.set_coeff(n, pw * R::embed(Poly<Rational>(cache.bernoulli_number(n))));
    if (n < order)
      pw = pw * scale;
  }
  return f;
}

/// sum F_{jn} z^n/n! over Q(sqrt5)-coefficient polynomials (Theorem 5 route).
TruncSeries<Poly<QSqrt5>> fibonacci_multiples(long long j, std::size_t order,
                                              SequenceCache& cache);

} // namespace balident::egf
