#pragma once

#include <stdexcept>
#include <string>

namespace balident {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Division by an exact zero (rational zero, zero-norm quadratic number).
class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

// Extension-ring evaluation asked for a point (x0, s0) with s0^2 != 9*x0^2 - 1.
class RootConsistencyError : public Error {
public:
  using Error::Error;
};

// Series arithmetic on operands of different truncation orders.
class OrderMismatchError : public Error {
public:
  using Error::Error;
};

class UnknownIdentityError : public Error {
public:
  using Error::Error;
};

class ParamRangeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace balident
