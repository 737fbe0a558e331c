#include "balident/sequences.hpp"

namespace balident {

const std::vector<BigInt>& SequenceCache::pascal_row(std::size_t n) {
  while (pascal_.size() <= n) {
    std::size_t m = pascal_.size();
    std::vector<BigInt> row(m + 1, 1);
    for (std::size_t k = 1; k < m; ++k)
      row[k] = pascal_[m - 1][k - 1] + pascal_[m - 1][k];
    pascal_.push_back(std::move(row));
  }
  return pascal_[n];
}

BigInt SequenceCache::binomial(std::size_t n, std::ptrdiff_t k) {
  if (k < 0 || static_cast<std::size_t>(k) > n)
    return 0;
  return pascal_row(n)[static_cast<std::size_t>(k)];
}

const Rational& SequenceCache::bernoulli_number(std::size_t n) {
  if (auto it = bernoulli_overrides_.find(n); it != bernoulli_overrides_.end())
    return it->second;
  if (bernoulli_.empty())
    bernoulli_.push_back(Rational::one());
  while (bernoulli_.size() <= n) {
    std::size_t m = bernoulli_.size();
    const std::vector<BigInt>& row = pascal_row(m + 1);
    Rational acc = Rational::zero();
    for (std::size_t k = 0; k < m; ++k)
      acc += Rational(row[k]) * bernoulli_[k];
    bernoulli_.push_back(acc * Rational(BigInt(-1), BigInt(m + 1)));
  }
  return bernoulli_[n];
}

const Poly<Rational>& SequenceCache::bernoulli_poly(std::size_t n) {
  while (bernoulli_polys_.size() <= n) {
    std::size_t m = bernoulli_polys_.size();
    const std::vector<BigInt>& row = pascal_row(m);
    std::vector<Rational> coeffs(m + 1, Rational::zero());
    for (std::size_t k = 0; k <= m; ++k)
      coeffs[m - k] = Rational(row[k]) * bernoulli_number(k);
    bernoulli_polys_.push_back(Poly<Rational>(std::move(coeffs)));
  }
  return bernoulli_polys_[n];
}

const BigInt& SequenceCache::fibonacci(std::size_t n) {
  if (fibonacci_.empty()) {
    fibonacci_.push_back(0);
    fibonacci_.push_back(1);
  }
  while (fibonacci_.size() <= n)
    fibonacci_.push_back(fibonacci_[fibonacci_.size() - 1] + fibonacci_[fibonacci_.size() - 2]);
  return fibonacci_[n];
}

const BigInt& SequenceCache::lucas(std::size_t n) {
  if (lucas_.empty()) {
    lucas_.push_back(2);
    lucas_.push_back(1);
  }
  while (lucas_.size() <= n)
    lucas_.push_back(lucas_[lucas_.size() - 1] + lucas_[lucas_.size() - 2]);
  return lucas_[n];
}

const Poly<Rational>& SequenceCache::balancing_poly(std::size_t n) {
  if (balancing_.empty()) {
    balancing_.push_back(Poly<Rational>::zero());
    balancing_.push_back(Poly<Rational>::one());
  }
  const Poly<Rational> six_x = Poly<Rational>::monomial(Rational(6), 1);
  while (balancing_.size() <= n) {
    std::size_t m = balancing_.size();
    balancing_.push_back(six_x * balancing_[m - 1] - balancing_[m - 2]);
  }
  return balancing_[n];
}

const Poly<Rational>& SequenceCache::lucas_balancing_poly(std::size_t n) {
  if (lucas_balancing_.empty()) {
    lucas_balancing_.push_back(Poly<Rational>::one());
    lucas_balancing_.push_back(Poly<Rational>::monomial(Rational(3), 1));
  }
  const Poly<Rational> six_x = Poly<Rational>::monomial(Rational(6), 1);
  while (lucas_balancing_.size() <= n) {
    std::size_t m = lucas_balancing_.size();
    lucas_balancing_.push_back(six_x * lucas_balancing_[m - 1] - lucas_balancing_[m - 2]);
  }
  return lucas_balancing_[n];
}

void SequenceCache::override_bernoulli(std::size_t n, Rational value) {
  bernoulli_overrides_[n] = std::move(value);
  bernoulli_polys_.clear();
}

} // namespace balident
