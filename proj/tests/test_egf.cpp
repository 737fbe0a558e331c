#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "balident/egf.hpp"

using namespace balident;

namespace {

using PolyQ = Poly<Rational>;

SqrtExt plain(const PolyQ& p) { return SqrtExt(p); }

} // namespace

TEST_CASE("closed-form generators match the recurrences") {
  const std::size_t N = 25;
  SequenceCache c;
  auto b1 = egf::balancing_odd(N);
  auto b2 = egf::balancing_even(N);
  auto c1 = egf::lucas_balancing_odd(N);
  auto c2 = egf::lucas_balancing_even(N);
  auto b = egf::balancing_all(N);
  auto lc = egf::lucas_balancing_all(N);
  for (std::size_t n = 0; n <= N; ++n) {
    CHECK(b1.coeff(n) == plain(c.balancing_poly(2 * n + 1)));
    CHECK(b2.coeff(n) == plain(c.balancing_poly(2 * n)));
    CHECK(c1.coeff(n) == plain(c.lucas_balancing_poly(2 * n + 1)));
    CHECK(c2.coeff(n) == plain(c.lucas_balancing_poly(2 * n)));
    CHECK(b.coeff(n) == plain(c.balancing_poly(n)));
    CHECK(lc.coeff(n) == plain(c.lucas_balancing_poly(n)));
  }
}

TEST_CASE("generator coefficients stay in the plain subring") {
  auto b2 = egf::balancing_even(10);
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(b2.coeff(n).is_plain());
}

TEST_CASE("sinh_div_s spot values") {
  auto f = egf::sinh_div_s(PolyQ::monomial(Rational(6), 1), 5);
  CHECK(f.coeff(0).is_zero());
  CHECK(f.coeff(1) == plain(PolyQ::monomial(Rational(6), 1)));
  CHECK(f.coeff(2).is_zero());
  // (6x)^3 (9x^2-1)
  CHECK(f.coeff(3) == plain(PolyQ::monomial(Rational(216), 3) * SqrtExt::modulus()));
}

TEST_CASE("bernoulli series") {
  SequenceCache c;
  auto plain_series = egf::bernoulli_series(egf::BernoulliArg::Zero, SqrtExt::one(), 6, c);
  CHECK(plain_series.coeff(0) == SqrtExt::one());
  CHECK(plain_series.coeff(1) == plain(PolyQ(Rational(-1, 2))));
  CHECK(plain_series.coeff(2) == plain(PolyQ(Rational(1, 6))));

  SqrtExt twelve_xs(PolyQ::zero(), PolyQ::monomial(Rational(12), 1));
  auto scaled = egf::bernoulli_series(egf::BernoulliArg::Zero, twelve_xs, 6, c);
  CHECK(scaled.coeff(2) ==
        plain(PolyQ::monomial(Rational(144, 6), 2) * SqrtExt::modulus()));

  auto zero_scale = egf::bernoulli_series(egf::BernoulliArg::Zero, SqrtExt::zero(), 6, c);
  CHECK(zero_scale.coeff(0) == SqrtExt::one());
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(zero_scale.coeff(n).is_zero());

  // arg = 1/2 agrees with the halving identity B_n(1/2) = (2^(1-n)-1) B_n
  auto half = egf::bernoulli_series(egf::BernoulliArg::Half, SqrtExt::one(), 10, c);
  for (std::size_t n = 0; n <= 10; ++n) {
    Rational expected =
        (pow(Rational(2), 1 - static_cast<long long>(n)) - Rational(1)) * c.bernoulli_number(n);
    CHECK(half.coeff(n) == plain(PolyQ(expected)));
  }

  auto even = egf::bernoulli_even_series(SqrtExt::one(), 8, c);
  for (std::size_t n = 0; n <= 8; ++n) {
    if (n % 2 == 0)
      CHECK(even.coeff(n) == plain(PolyQ(c.bernoulli_number(n))));
    else
      CHECK(even.coeff(n).is_zero());
  }
}

TEST_CASE("symbolic bernoulli series embeds the polynomials") {
  SequenceCache c;
  auto f = egf::bernoulli_series(egf::BernoulliArg::SymbolicX, SqrtExt::one(), 5, c);
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(f.coeff(n) == SqrtExt::embed(c.bernoulli_poly(n)));
}

TEST_CASE("convolution reproduces the first even-index theorem coefficient") {
  SequenceCache c;
  const std::size_t N = 4;
  SqrtExt twelve_xs(PolyQ::zero(), PolyQ::monomial(Rational(12), 1));
  auto lhs = egf::balancing_even(N) *
             egf::bernoulli_series(egf::BernoulliArg::Zero, twelve_xs, N, c);
  // coefficient 2 equals 12x (C_2(x) - s B*_2(x))
  PolyQ twelve_x = PolyQ::monomial(Rational(12), 1);
  SqrtExt expected = SqrtExt(twelve_x) *
                     (plain(c.lucas_balancing_poly(2)) - SqrtExt::s() * plain(c.balancing_poly(2)));
  CHECK(lhs.coeff(2) == expected);
}

TEST_CASE("fibonacci EGF coefficients") {
  SequenceCache c;
  auto f = egf::fibonacci_multiples(3, 6, c);
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(f.coeff(n) == Poly<QSqrt5>(QSqrt5(Rational(c.fibonacci(3 * n)))));
}
