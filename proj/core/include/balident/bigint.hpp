#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace balident {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt int_pow(const BigInt& base, unsigned long long e) {
  BigInt r = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1ULL)
      r *= b;
    b *= b;
    e >>= 1ULL;
  }
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace balident
