#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "balident/quadratic.hpp"
#include "balident/sequences.hpp"

#include <vector>

using namespace balident;

namespace {

using PolyQ = Poly<Rational>;

// --- independent oracles, deliberately on different routes than the library ---

// Worpitzky-style double sum; fixes the B_1 = -1/2 convention on its own.
Rational bernoulli_oracle(unsigned n) {
  SequenceCache c; // binomials only
  Rational acc = Rational::zero();
  for (unsigned k = 0; k <= n; ++k) {
    Rational inner = Rational::zero();
    for (unsigned v = 0; v <= k; ++v) {
      BigInt vpow = (v == 0 && n == 0) ? BigInt(1) : int_pow(BigInt(v), n);
      Rational term = Rational(c.binomial(k, static_cast<std::ptrdiff_t>(v)) * vpow);
      inner += (v % 2 == 0) ? term : -term;
    }
    acc += inner / Rational(BigInt(k + 1));
  }
  return acc;
}

// Fast doubling: F(2m) = F(m)(2F(m+1)-F(m)), F(2m+1) = F(m)^2+F(m+1)^2.
std::pair<BigInt, BigInt> fib_doubling(unsigned long long n) {
  if (n == 0)
    return {BigInt(0), BigInt(1)};
  auto [a, b] = fib_doubling(n / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (n % 2 == 0)
    return {c, d};
  return {d, c + d};
}

// Closed form B*_n(x) = sum_k (-1)^k C(n-1-k, k) (6x)^(n-1-2k), n >= 1.
PolyQ balancing_oracle(unsigned n, SequenceCache& c) {
  if (n == 0)
    return PolyQ::zero();
  PolyQ acc = PolyQ::zero();
  for (unsigned k = 0; 2 * k <= n - 1; ++k) {
    Rational coeff = Rational(c.binomial(n - 1 - k, static_cast<std::ptrdiff_t>(k)) *
                              int_pow(BigInt(6), n - 1 - 2 * k));
    if (k % 2 == 1)
      coeff = -coeff;
    acc += PolyQ::monomial(coeff, n - 1 - 2 * k);
  }
  return acc;
}

// Closed form C_n(x) = (n/2) sum_k ((-1)^k/(n-k)) C(n-k, k) (6x)^(n-2k), n >= 1.
PolyQ lucas_balancing_oracle(unsigned n, SequenceCache& c) {
  if (n == 0)
    return PolyQ::one();
  PolyQ acc = PolyQ::zero();
  for (unsigned k = 0; 2 * k <= n; ++k) {
    Rational coeff = Rational(BigInt(n), BigInt(2)) *
                     Rational(c.binomial(n - k, static_cast<std::ptrdiff_t>(k)), BigInt(n - k)) *
                     Rational(int_pow(BigInt(6), n - 2 * k));
    if (k % 2 == 1)
      coeff = -coeff;
    acc += PolyQ::monomial(coeff, n - 2 * k);
  }
  return acc;
}

// --- substitution helpers for the functional-equation invariants ---

PolyQ subst_linear(const PolyQ& p, const Rational& scale, const Rational& shift) {
  // p(scale*x + shift)
  PolyQ arg(std::vector<Rational>{shift, scale});
  PolyQ acc = PolyQ::zero();
  for (std::size_t k = p.coefficients().size(); k-- > 0;)
    acc = acc * arg + PolyQ(p.coeff(k));
  return acc;
}

} // namespace

TEST_CASE("Bernoulli numbers: frozen values and the independent oracle") {
  SequenceCache c;
  const std::vector<Rational> expected = {
      Rational(1),        Rational(-1, 2), Rational(1, 6),  Rational(0), Rational(-1, 30),
      Rational(0),        Rational(1, 42), Rational(0),     Rational(-1, 30),
      Rational(0),        Rational(5, 66), Rational(0),     Rational(-691, 2730),
      Rational(0),        Rational(7, 6)};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(c.bernoulli_number(n) == expected[n]);
  CHECK(c.bernoulli_number(30) == Rational(BigInt("8615841276005"), BigInt(14322)));
  for (unsigned n = 0; n <= 16; ++n)
    CHECK(c.bernoulli_number(n) == bernoulli_oracle(n));
}

TEST_CASE("odd Bernoulli numbers vanish") {
  SequenceCache c;
  for (std::size_t n = 1; n <= 20; ++n)
    CHECK(c.bernoulli_number(2 * n + 1).is_zero());
}

TEST_CASE("Bernoulli polynomials") {
  SequenceCache c;
  CHECK(c.bernoulli_poly(0) == PolyQ::one());
  CHECK(c.bernoulli_poly(2) ==
        PolyQ(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
  CHECK(c.bernoulli_poly(3).eval(Rational(1, 2)) == Rational(0));
  // B_n(1/2) = (2^(1-n) - 1) B_n
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(c.bernoulli_poly(n).eval(Rational(1, 2)) ==
          (pow(Rational(2), 1 - static_cast<long long>(n)) - Rational(1)) * c.bernoulli_number(n));
  // B_n(0) = B_n
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(c.bernoulli_poly(n).eval(Rational(0)) == c.bernoulli_number(n));
}

TEST_CASE("Bernoulli polynomial functional equations") {
  SequenceCache c;
  for (std::size_t n = 0; n <= 30; ++n) {
    const PolyQ& b = c.bernoulli_poly(n);
    // reflection: B_n(1-x) = (-1)^n B_n(x)
    PolyQ reflected = subst_linear(b, Rational(-1), Rational(1));
    CHECK(reflected == (n % 2 == 0 ? b : -b));
    // difference equation: B_n(x+1) - B_n(x) = n x^(n-1)
    PolyQ diff = subst_linear(b, Rational(1), Rational(1)) - b;
    PolyQ want = n == 0 ? PolyQ::zero() : PolyQ::monomial(Rational(BigInt(n)), n - 1);
    CHECK(diff == want);
    // derivative rule: B_n' = n B_(n-1)
    if (n >= 1)
      CHECK(b.derivative() == c.bernoulli_poly(n - 1) * Rational(BigInt(n)));
  }
}

TEST_CASE("multiplication theorem") {
  SequenceCache c;
  for (std::size_t n = 0; n <= 20; ++n) {
    for (long long q = 2; q <= 5; ++q) {
      PolyQ sum = PolyQ::zero();
      for (long long r = 0; r < q; ++r)
        sum += subst_linear(c.bernoulli_poly(n), Rational(1), Rational(r, q));
      PolyQ lhs = sum * Rational(1, q);
      PolyQ rhs = subst_linear(c.bernoulli_poly(n), Rational(q), Rational(0)) *
                  pow(Rational(q), -static_cast<long long>(n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Fibonacci and Lucas numbers") {
  SequenceCache c;
  const long long f[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  const long long l[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123};
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(c.fibonacci(n) == BigInt(f[n]));
    CHECK(c.lucas(n) == BigInt(l[n]));
  }
  CHECK(c.lucas(6) * c.lucas(6) - 5 * c.fibonacci(6) * c.fibonacci(6) == BigInt(4));
  for (unsigned long long n = 0; n <= 64; ++n)
    CHECK(c.fibonacci(n) == fib_doubling(n).first);
}

TEST_CASE("Fibonacci/Lucas identities") {
  SequenceCache c;
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(c.fibonacci(n) * c.lucas(n) == c.fibonacci(2 * n));
    BigInt sign = (n % 2 == 0) ? BigInt(4) : BigInt(-4);
    CHECK(c.lucas(n) * c.lucas(n) == 5 * c.fibonacci(n) * c.fibonacci(n) + sign);
  }
  for (std::size_t j = 1; j <= 40; ++j)
    CHECK(c.fibonacci(j) + 2 * c.fibonacci(j - 1) == c.lucas(j));
  // alpha^j = alpha F_j + F_(j-1), beta^j = beta F_j + F_(j-1)
  for (std::size_t j = 1; j <= 20; ++j) {
    QSqrt5 fj(Rational(c.fibonacci(j)));
    QSqrt5 fjm1(Rational(c.fibonacci(j - 1)));
    CHECK(pow(golden_alpha(), static_cast<long long>(j)) == golden_alpha() * fj + fjm1);
    CHECK(pow(golden_beta(), static_cast<long long>(j)) == golden_beta() * fj + fjm1);
  }
}

TEST_CASE("balancing polynomials: frozen values and closed-form oracle") {
  SequenceCache c;
  CHECK(c.balancing_poly(0) == PolyQ::zero());
  CHECK(c.balancing_poly(1) == PolyQ::one());
  CHECK(c.balancing_poly(2) == PolyQ::monomial(Rational(6), 1));
  CHECK(c.balancing_poly(4) ==
        PolyQ(std::vector<Rational>{Rational(0), Rational(-12), Rational(0), Rational(216)}));
  CHECK(c.lucas_balancing_poly(2) ==
        PolyQ(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}));
  CHECK(c.lucas_balancing_poly(3) ==
        PolyQ(std::vector<Rational>{Rational(0), Rational(-9), Rational(0), Rational(108)}));
  for (unsigned n = 0; n <= 15; ++n) {
    CHECK(c.balancing_poly(n) == balancing_oracle(n, c));
    CHECK(c.lucas_balancing_poly(n) == lucas_balancing_oracle(n, c));
  }
}

TEST_CASE("balancing numbers match the catalogued prefixes") {
  SequenceCache c;
  const long long b[] = {0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214};
  const long long cb[] = {1, 3, 17, 99, 577, 3363, 19601, 114243, 665857, 3880899, 22619537};
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(c.balancing_poly(n).eval(Rational(1)) == Rational(b[n]));
    CHECK(c.lucas_balancing_poly(n).eval(Rational(1)) == Rational(cb[n]));
  }
}

TEST_CASE("balancing polynomial symmetries and cross-recurrences") {
  SequenceCache c;
  for (std::size_t n = 0; n <= 40; ++n) {
    // B*_n(-x) = (-1)^(n+1) B*_n(x)
    PolyQ neg = subst_linear(c.balancing_poly(n), Rational(-1), Rational(0));
    CHECK(neg == (n % 2 == 0 ? -c.balancing_poly(n) : c.balancing_poly(n)));
  }
  const PolyQ mod(std::vector<Rational>{Rational(-1), Rational(0), Rational(9)});
  const PolyQ three_x = PolyQ::monomial(Rational(3), 1);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(c.lucas_balancing_poly(n) ==
          three_x * c.lucas_balancing_poly(n - 1) + mod * c.balancing_poly(n - 1));
    CHECK(c.lucas_balancing_poly(n) ==
          c.balancing_poly(n + 1) - three_x * c.balancing_poly(n));
  }
}

TEST_CASE("link equations") {
  SequenceCache c;
  // F_2m B*_n(L_2m/6) = F_2mn and 2 C_n(L_2m/6) = L_2mn
  for (std::size_t m = 0; m <= 4; ++m) {
    Rational pt(c.lucas(2 * m), BigInt(6));
    for (std::size_t n = 0; n <= 12; ++n) {
      CHECK(Rational(c.fibonacci(2 * m)) * c.balancing_poly(n).eval(pt) ==
            Rational(c.fibonacci(2 * m * n)));
      CHECK(Rational(2) * c.lucas_balancing_poly(n).eval(pt) == Rational(c.lucas(2 * m * n)));
    }
  }
  // in Q(i): F_(2m+1) B*_n(i L_(2m+1)/6) = i^(n-1) F_((2m+1)n), 2 C_n(...) = i^n L_((2m+1)n)
  for (std::size_t m = 0; m <= 3; ++m) {
    QGauss pt(Rational(0), Rational(c.lucas(2 * m + 1), BigInt(6)));
    for (std::size_t n = 0; n <= 12; ++n) {
      QGauss lhs_b = QGauss(Rational(c.fibonacci(2 * m + 1))) *
                     c.balancing_poly(n).eval_as<QGauss>(pt);
      CHECK(lhs_b == pow(imaginary_unit(), static_cast<long long>(n) - 1) *
                         QGauss(Rational(c.fibonacci((2 * m + 1) * n))));
      QGauss lhs_c = QGauss(Rational(2)) * c.lucas_balancing_poly(n).eval_as<QGauss>(pt);
      CHECK(lhs_c == pow(imaginary_unit(), static_cast<long long>(n)) *
                         QGauss(Rational(c.lucas((2 * m + 1) * n))));
    }
  }
}

TEST_CASE("Faulhaber integral form") {
  // sum_{s=0}^{N} s^n = integral_0^{N+1} B_n(x) dx
  SequenceCache c;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (long long N = 0; N <= 8; ++N) {
      Rational power_sum = Rational::zero();
      for (long long s = 0; s <= N; ++s)
        power_sum += (s == 0 && n == 0) ? Rational(1) : Rational(int_pow(BigInt(s), n));
      CHECK(c.bernoulli_poly(n).definite_integral(Rational(0), Rational(N + 1)) == power_sum);
    }
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Rational(7), 0) == Rational(1));
  CHECK(falling_factorial(Rational(5), 3) == Rational(60));
  CHECK(falling_factorial(Rational(2), 3) == Rational(0));
  CHECK(falling_factorial(QSqrt5(Rational(1, 2)), 2) == QSqrt5(Rational(-1, 4)));
}

TEST_CASE("binomial coefficients") {
  SequenceCache c;
  CHECK(c.binomial(5, 2) == BigInt(10));
  CHECK(c.binomial(7, 0) == BigInt(1));
  CHECK(c.binomial(10, 5) == BigInt(252));
  CHECK(c.binomial(4, -1) == BigInt(0));
  CHECK(c.binomial(4, 5) == BigInt(0));
}

TEST_CASE("bernoulli override replaces exactly one value") {
  SequenceCache c;
  CHECK(c.bernoulli_number(4) == Rational(-1, 30)); // populate past index 2
  c.override_bernoulli(2, Rational(7, 6));
  CHECK(c.bernoulli_number(2) == Rational(7, 6));
  CHECK(c.bernoulli_number(4) == Rational(-1, 30)); // neighbours stay clean
  CHECK(c.bernoulli_number(6) == Rational(1, 42));
  // polynomials rebuilt from the overridden table pick the poisoned value up
  CHECK(c.bernoulli_poly(2).coeff(0) == Rational(7, 6));
}
