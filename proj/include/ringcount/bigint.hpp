#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ringcount {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(BigInt base, unsigned long exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1UL) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ringcount
