#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hypercert/errors.hpp"

namespace hypercert::poly {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator; the canonical zero is 0/1.  All of those invariants are
/// maintained by the backing type itself.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) {
  if (rat_is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parse "p" or "p/q" (optional sign, surrounding whitespace tolerated).
inline Rat rat_parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  if (!is_int(num) || !is_int(den))
    throw ParseError("malformed rational literal: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);  // cpp_int rejects a leading '+'
  if (den.front() == '+') den.remove_prefix(1);
  Int d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
  return Rat(Int{std::string(num)}, d);
}

/// Narrow an integral Rat to long; the caller asserts both properties.
inline long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw Error("rat_to_long on non-integer " + rat_str(r));
  return static_cast<long>(rat_num(r));
}

inline Rat rat_pow(const Rat& x, long n) {
  if (n < 0) throw UsageError("rat_pow: negative exponent");
  Rat out = 1;
  for (long i = 0; i < n; ++i) out *= x;
  return out;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact: product of i consecutive integers divisible by i!
  }
  return result;
}

}  // namespace hypercert::poly
