#include "balident/rational.hpp"

#include <cctype>

namespace balident {

std::string Rational::str() const {
  if (den_ == 1)
    return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
    --e;
  std::string_view body = text.substr(b, e - b);
  if (body.empty())
    throw ParseError("empty rational literal");

  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty())
      throw ParseError("empty integer literal");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-')
      ++i;
    if (i == s.size())
      throw ParseError("sign without digits");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParseError("invalid integer literal: '" + std::string(s) + "'");
    return BigInt(std::string(s));
  };

  std::size_t slash = body.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(body));
  BigInt num = parse_int(body.substr(0, slash));
  BigInt den = parse_int(body.substr(slash + 1));
  return Rational(std::move(num), std::move(den));
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v.is_negative())
    return std::nullopt;
  if (v.is_zero())
    return Rational::zero();
  BigInt ns = boost::multiprecision::sqrt(v.numerator());
  BigInt ds = boost::multiprecision::sqrt(v.denominator());
  if (ns * ns != v.numerator() || ds * ds != v.denominator())
    return std::nullopt;
  return Rational(std::move(ns), std::move(ds));
}

} // namespace balident
