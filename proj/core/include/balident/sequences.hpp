#pragma once

#include "balident/bigint.hpp"
#include "balident/poly.hpp"
#include "balident/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace balident {

/// Append-only memo tables for all concrete sequence and polynomial families.
/// One cache per verification task; generators are pure given a cache, so a
/// confined cache needs no locking.
class SequenceCache {
public:
  /// Bernoulli number under the EGF convention forced by z e^{xz}/(e^z - 1),
  /// i.e. B_1 = -1/2; computed by sum_{k=0}^{n} C(n+1,k) B_k = 0 with B_0 = 1.
  const Rational& bernoulli_number(std::size_t n);

  /// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
  const Poly<Rational>& bernoulli_poly(std::size_t n);

  const BigInt& fibonacci(std::size_t n);
  const BigInt& lucas(std::size_t n);

  /// Balancing polynomials: B*_n = 6x B*_{n-1} - B*_{n-2}, B*_0 = 0, B*_1 = 1.
  const Poly<Rational>& balancing_poly(std::size_t n);
  /// Lucas-balancing polynomials: C_n = 6x C_{n-1} - C_{n-2}, C_0 = 1, C_1 = 3x.
  const Poly<Rational>& lucas_balancing_poly(std::size_t n);

  /// C(n,k); 0 for k < 0 or k > n.
  BigInt binomial(std::size_t n, std::ptrdiff_t k);

  /// Pins B_n to a different value at lookup time, leaving every other index
  /// on the clean recurrence. Exists so the verification suite can prove it
  /// is not vacuous: a single corrupted Bernoulli number must break
  /// identities. Clears the Bernoulli-polynomial table.
  void override_bernoulli(std::size_t n, Rational value);

private:
  const std::vector<BigInt>& pascal_row(std::size_t n);

  std::map<std::size_t, Rational> bernoulli_overrides_;
  std::vector<Rational> bernoulli_;
  std::vector<Poly<Rational>> bernoulli_polys_;
  std::vector<BigInt> fibonacci_;
  std::vector<BigInt> lucas_;
  std::vector<Poly<Rational>> balancing_;
  std::vector<Poly<Rational>> lucas_balancing_;
  std::vector<std::vector<BigInt>> pascal_;
};

/// Falling factorial (y)_m = y (y-1) ... (y-m+1), (y)_0 = 1.
template <class K>
K falling_factorial(const K& y, unsigned m) {
  K r = K::one();
  K factor = y;
  for (unsigned i = 0; i < m; ++i) {
    r = r * factor;
    factor = factor - K::one();
  }
  return r;
}

} // namespace balident
