#include "foldtri/numeric.hpp"

#include <limits>

#include "foldtri/error.hpp"

namespace foldtri {

std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace {

bool valid_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Int int_from_string(std::string_view text) {
  if (!valid_decimal(text)) fail(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

Rat rat_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(int_from_string(text));
  Int num = int_from_string(text.substr(0, slash));
  Int den = int_from_string(text.substr(slash + 1));
  if (den == 0) fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

long long to_int64(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    fail(Errc::invalid_argument, "integer out of 64-bit range: " + v.str());
  return v.convert_to<long long>();
}

}  // namespace foldtri
