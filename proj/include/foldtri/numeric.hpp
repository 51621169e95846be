#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace foldtri {

// All geometry and certification runs on exact integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow2(unsigned long k) {
  Int v = 1;
  v <<= k;
  return v;
}

inline bool is_odd(const Int& v) { return boost::multiprecision::bit_test(v, 0); }

inline int signum(const Int& v) { return v.sign(); }
inline int signum(const Rat& v) { return v.sign(); }

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Serialized as "p" for integers and "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Parses "p" or "p/q" with optional leading '-'. Throws Error(parse_error) on
// malformed input or a zero denominator.
Rat rat_from_string(std::string_view text);

Int int_from_string(std::string_view text);

// Checked conversion for JSON emission; throws Error(invalid_argument) when out of range.
long long to_int64(const Int& v);

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace foldtri
