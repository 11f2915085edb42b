#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace innerrate {

// Exact arithmetic only. No floating point appears anywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Caller guarantees is_integer(x).
inline Int to_int(const Rat& x) { return numerator(x); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Rationals render as "a/b", integers as "a"; never decimals.
inline std::string rat_str(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

}  // namespace innerrate
