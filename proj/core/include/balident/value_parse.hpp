#pragma once

#include "balident/quadratic.hpp"
#include "balident/rational.hpp"

#include <string_view>
#include <variant>

namespace balident {

/// Evaluation-point text: "3", "-1/2", "1/2 + 3/2*sqrt5", "-i", "2/3*i".
/// The surd symbol picks the field; plain rationals stay rational.
using ParsedPoint = std::variant<Rational, QSqrt5, QGauss>;

ParsedPoint parse_point(std::string_view text); // throws ParseError

} // namespace balident
