#include "balident/value_parse.hpp"

#include "balident/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace balident {
namespace {

struct Term {
  Rational coeff;
  bool surd = false;
};

// term := rational | rational '*' sym | sym ; expression := term (('+'|'-') term)*
std::vector<Term> split_terms(std::string_view text, const std::string& sym) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty value literal");

  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-')
      ++i;
    std::string piece = s.substr(start, i - start);
    if (piece.empty())
      throw ParseError("dangling sign in value literal: '" + std::string(text) + "'");

    Term t;
    std::size_t star = piece.find('*');
    if (star != std::string::npos) {
      if (piece.substr(star + 1) != sym)
        throw ParseError("unknown symbol in value literal: '" + piece.substr(star + 1) + "'");
      t.surd = true;
      t.coeff = Rational::parse(piece.substr(0, star));
    } else if (piece == sym) {
      t.surd = true;
      t.coeff = Rational::one();
    } else {
      t.coeff = Rational::parse(piece);
    }
    if (sign < 0)
      t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  }
  return terms;
}

template <int D>
Quadratic<D> assemble(const std::vector<Term>& terms) {
  Quadratic<D> v = Quadratic<D>::zero();
  for (const Term& t : terms)
    v += t.surd ? Quadratic<D>(Rational::zero(), t.coeff) : Quadratic<D>(t.coeff);
  return v;
}

} // namespace

ParsedPoint parse_point(std::string_view text) {
  std::string s(text);
  if (s.find("sqrt5") != std::string::npos)
    return assemble<5>(split_terms(text, "sqrt5"));
  if (s.find('i') != std::string::npos)
    return assemble<-1>(split_terms(text, "i"));
  return Rational::parse(text);
}

} // namespace balident
