#include "balident/egf.hpp"

namespace balident::egf {

namespace {

Poly<Rational> rpoly(std::initializer_list<Rational> coeffs) {
  return Poly<Rational>(std::vector<Rational>(coeffs));
}

// 18x^2 - 1, the exponent of the common e^{(18x^2-1)z} prefactor.
Poly<Rational> even_square_arg() { return rpoly({Rational(-1), Rational(0), Rational(18)}); }

Poly<Rational> six_x() { return Poly<Rational>::monomial(Rational(6), 1); }
Poly<Rational> three_x() { return Poly<Rational>::monomial(Rational(3), 1); }

// cosh(c*s*z) with plain multiplier c: even coefficients c^n (9x^2-1)^{n/2}.
TruncSeries<SqrtExt> cosh_of_cs(const Poly<Rational>& c, std::size_t order) {
  return TruncSeries<SqrtExt>::cosh_linear(SqrtExt(Poly<Rational>::zero(), c), order);
}

// s * sinh(c*s*z): odd coefficients are plain c^n (9x^2-1)^{(n+1)/2}.
TruncSeries<SqrtExt> s_times_sinh_of_cs(const Poly<Rational>& c, std::size_t order) {
  return TruncSeries<SqrtExt>::sinh_linear(SqrtExt(Poly<Rational>::zero(), c), order)
      .scaled(SqrtExt::s());
}

} // namespace

TruncSeries<SqrtExt> sinh_div_s(const Poly<Rational>& c, std::size_t order) {
  // Odd powers of s carry exactly one s: (c s)^n = c^n (9x^2-1)^{(n-1)/2} s
  // for odd n, so dividing by s is coefficient surgery, never a polynomial
  // division.
  TruncSeries<SqrtExt> f(order);
  Poly<Rational> pw = Poly<Rational>::one(); // c^n * modulus^((n-1)/2) for odd n
  for (std::size_t n = 0; n <= order; ++n) {
    if (n % 2 == 1)
      f.set_coeff(n, SqrtExt(pw));
    if (n < order)
      pw = (n % 2 == 1) ? pw * c * SqrtExt::modulus() : pw * c;
  }
  return f;
}

TruncSeries<SqrtExt> balancing_even(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(even_square_arg()), order);
  return pre * sinh_div_s(six_x(), order);
}

TruncSeries<SqrtExt> balancing_odd(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(even_square_arg()), order);
  auto bracket =
      sinh_div_s(six_x(), order).scaled(SqrtExt(three_x())) + cosh_of_cs(six_x(), order);
  return pre * bracket;
}

TruncSeries<SqrtExt> lucas_balancing_even(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(even_square_arg()), order);
  return pre * cosh_of_cs(six_x(), order);
}

TruncSeries<SqrtExt> lucas_balancing_odd(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(even_square_arg()), order);
  auto bracket =
      cosh_of_cs(six_x(), order).scaled(SqrtExt(three_x())) + s_times_sinh_of_cs(six_x(), order);
  return pre * bracket;
}

TruncSeries<SqrtExt> balancing_all(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(three_x()), order);
  return pre * sinh_div_s(Poly<Rational>::one(), order);
}

TruncSeries<SqrtExt> lucas_balancing_all(std::size_t order) {
  auto pre = TruncSeries<SqrtExt>::exp_linear(SqrtExt(three_x()), order);
  return pre * cosh_of_cs(Poly<Rational>::one(), order);
}

TruncSeries<Poly<QSqrt5>> fibonacci_multiples(long long j, std::size_t order,
                                              SequenceCache& cache) {
  TruncSeries<Poly<QSqrt5>> f(order);
  for (std::size_t n = 0; n <= order; ++n)
    f.set_coeff(n, Poly<QSqrt5>(QSqrt5(Rational(cache.fibonacci(
                       static_cast<std::size_t>(j) * n)))));
  return f;
}

} // namespace balident::egf
