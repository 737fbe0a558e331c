#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "balident/rational.hpp"

#include <random>

using namespace balident;

namespace {

std::mt19937 rng(20240811);

BigInt random_int(long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return BigInt(dist(rng));
}

Rational random_rational() {
  BigInt den = random_int(1, 400);
  return Rational(random_int(-400, 400), den);
}

} // namespace

TEST_CASE("basic arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 6) * Rational(6) == Rational(1));
  CHECK(Rational(-1, 30) / Rational(1, 42) == Rational(-7, 5));
  CHECK((Rational(2, 4)).numerator() == 1);
  CHECK((Rational(2, 4)).denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
}

TEST_CASE("normalization invariants") {
  for (int i = 0; i < 2000; ++i) {
    BigInt num = random_int(-10000, 10000);
    BigInt den = random_int(1, 10000);
    Rational r(num, den);
    CHECK(r.denominator() >= 1);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()),
                                     r.denominator()) == 1);
    if (r.is_zero())
      CHECK(r.denominator() == 1);
  }
}

TEST_CASE("exactness: (a/b + c/d)(b d) = a d + c b") {
  for (int i = 0; i < 1000; ++i) {
    BigInt a = random_int(-500, 500);
    BigInt b = random_int(1, 500);
    BigInt c = random_int(-500, 500);
    BigInt d = random_int(1, 500);
    Rational sum = Rational(a, b) + Rational(c, d);
    CHECK(sum * Rational(b * d) == Rational(a * d + c * b));
  }
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
}

TEST_CASE("inverse round-trips") {
  for (int i = 0; i < 1000; ++i) {
    Rational r = random_rational();
    if (r.is_zero())
      continue;
    CHECK(r.inverse().inverse() == r);
    CHECK(r * r.inverse() == Rational(1));
  }
}

TEST_CASE("pow handles negative exponents") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(7), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), DivisionByZeroError);
}

TEST_CASE("rendering and parsing") {
  CHECK(Rational(-691, 2730).str() == "-691/2730");
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZeroError);
  for (int i = 0; i < 200; ++i) {
    Rational r = random_rational();
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 10) <= Rational(1, 2));
}
