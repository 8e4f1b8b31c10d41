#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "hbcells/errors.hpp"

namespace hbcells {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
// GMP keeps mpq values canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "n" or "n/d" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw parse_error("bad rational: '" + s + "'");
      return Rational(Integer(s[0] == '+' ? s.substr(1) : s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
      throw parse_error("bad rational: '" + s + "'");
    Integer d(den);
    if (d == 0) throw parse_error("zero denominator in '" + s + "'");
    return Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
  } catch (const std::runtime_error&) {
    throw parse_error("bad rational: '" + s + "'");
  }
}

inline Rational pow(const Rational& base, long long exponent) {
  if (exponent < 0) {
    if (base == 0) throw division_error("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1, b = base;
  auto e = static_cast<unsigned long long>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

}  // namespace hbcells
