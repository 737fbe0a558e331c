#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "balident/sqrt_ext.hpp"

#include <random>
#include <string>

using namespace balident;

namespace {

std::mt19937 rng(77);
using PolyQ = Poly<Rational>;

Rational random_rational() {
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 8);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

PolyQ random_poly(int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int d = deg(rng);
  std::vector<Rational> cs;
  for (int i = 0; i <= d; ++i)
    cs.push_back(random_rational());
  return PolyQ(std::move(cs));
}

SqrtExt random_elem(int max_degree) { return SqrtExt(random_poly(max_degree), random_poly(max_degree)); }

QSqrt5 random_q5() {
  return QSqrt5(random_rational(), random_rational());
}

} // namespace

TEST_CASE("defining relation and products") {
  PolyQ mod = SqrtExt::modulus();
  CHECK(mod == PolyQ(std::vector<Rational>{Rational(-1), Rational(0), Rational(9)}));
  SqrtExt s = SqrtExt::s();
  CHECK(s * s == SqrtExt(mod));
  CHECK((SqrtExt::one() + s) * (SqrtExt::one() - s) ==
        SqrtExt(PolyQ(std::vector<Rational>{Rational(2), Rational(0), Rational(-9)})));
  SqrtExt twelve_xs(PolyQ::zero(), PolyQ::monomial(Rational(12), 1));
  CHECK(twelve_xs * twelve_xs == SqrtExt(PolyQ::monomial(Rational(144), 2) * mod));
}

TEST_CASE("powers") {
  SqrtExt s = SqrtExt::s();
  PolyQ mod = SqrtExt::modulus();
  CHECK(pow(s, 3) == SqrtExt(PolyQ::zero(), mod));
  SqrtExt twelve_xs(PolyQ::zero(), PolyQ::monomial(Rational(12), 1));
  CHECK(pow(twelve_xs, 3) == SqrtExt(PolyQ::zero(), PolyQ::monomial(Rational(1728), 3) * mod));
  SqrtExt thm2_base(PolyQ(std::vector<Rational>{Rational(-1), Rational(0), Rational(18)}),
                    PolyQ(std::vector<Rational>{Rational(0), Rational(-6), Rational(12)}));
  CHECK(pow(thm2_base, 0) == SqrtExt::one());
}

TEST_CASE("ring axioms on random elements") {
  for (int t = 0; t < 500; ++t) {
    SqrtExt a = random_elem(6);
    SqrtExt b = random_elem(6);
    SqrtExt c = random_elem(6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (b + c) == (a + b) + c);
  }
}

TEST_CASE("evaluation at a consistent point") {
  // x0 = L_2/6 = 1/2, s0 = (F_2/2) sqrt5 = sqrt5/2; 9/4 - 1 = 5/4 = s0^2
  QSqrt5 x0(Rational(1, 2));
  QSqrt5 s0(Rational(0), Rational(1, 2));
  CHECK(SqrtExt::s().eval(x0, s0) == s0);
  CHECK(SqrtExt::one().eval(x0, s0) == QSqrt5::one());
  SqrtExt mod_elem(SqrtExt::modulus());
  CHECK(mod_elem.eval(x0, s0) == QSqrt5(Rational(5, 4)));
}

TEST_CASE("evaluation rejects inconsistent roots, naming both sides") {
  QSqrt5 x0(Rational(1));
  QSqrt5 s0(Rational(1));
  try {
    SqrtExt::s().eval(x0, s0);
    FAIL("expected RootConsistencyError");
  } catch (const RootConsistencyError& e) {
    std::string msg = e.what();
    CHECK(msg.find("s0^2 = 1") != std::string::npos);
    CHECK(msg.find("9*x0^2 - 1 = 8") != std::string::npos);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  // (x0, s0) with s0^2 = 9 x0^2 - 1: x0 = (t + 1/t)/6, s0 = (t - 1/t)/2
  int done = 0;
  for (int t = 0; done < 300; ++t) {
    QSqrt5 u = random_q5();
    if (u.is_zero() || u.norm().is_zero())
      continue;
    QSqrt5 inv = u.inverse();
    QSqrt5 x0 = (u + inv) * QSqrt5(Rational(1, 6));
    QSqrt5 s0 = (u - inv) * QSqrt5(Rational(1, 2));
    SqrtExt a = random_elem(4);
    SqrtExt b = random_elem(4);
    CHECK((a * b).eval(x0, s0) == a.eval(x0, s0) * b.eval(x0, s0));
    CHECK((a + b).eval(x0, s0) == a.eval(x0, s0) + b.eval(x0, s0));
    ++done;
  }
}

TEST_CASE("rendering") {
  PolyQ plain(std::vector<Rational>{Rational(0), Rational(-12), Rational(0), Rational(216)});
  PolyQ surd(std::vector<Rational>{Rational(0), Rational(0), Rational(-72)});
  CHECK(SqrtExt(plain, surd).str() == "(216*x^3 - 12*x) + (-72*x^2)*s");
  CHECK(SqrtExt(plain).str() == "216*x^3 - 12*x");
  CHECK(SqrtExt(PolyQ::zero(), surd).str() == "(-72*x^2)*s");
  CHECK(SqrtExt::zero().str() == "0");
}
