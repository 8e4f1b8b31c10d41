#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "hbcells/polynomial.hpp"

namespace hbcells {

// Canonical rendering: descending graded-lex terms, "p/q" coefficients,
// "^" for powers and "*" between factors, e.g. "x^2 - 3/2*x*y*a[2,1,1] + 1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      out << mag.str();
      wrote = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) out << '*';
      out << p.ring().name(v);
      if (m[v] > 1) out << '^' << m[v];
      wrote = true;
    }
  }
  return out.str();
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableSet& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    skip();
    if (at_end()) throw parse_error("empty polynomial expression");
    Polynomial p = expr();
    skip();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  Polynomial expr() {
    skip();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      if (peek() == '+') {
        get();
        acc = acc + term();
      } else if (peek() == '-') {
        get();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        get();
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip();
    if (peek() == '-') {
      get();
      return -factor();
    }
    Polynomial base = primary();
    skip();
    if (peek() == '^') {
      get();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial inner = expr();
      skip();
      if (get() != ')') fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        get();
        num += "/" + digits();
      }
      return Polynomial::constant(ring_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
      if (peek() == '[') {
        while (!at_end() && peek() != ']') {
          char ch = get();
          if (!std::isspace(static_cast<unsigned char>(ch))) name += ch;
        }
        if (get() != ']') fail("unterminated parameter tag");
        name += ']';
      }
      if (!ring_.contains(name)) throw parse_error("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, name);
    }
    fail("expected a number, variable or '('");
  }

  bool starts_factor() const {
    char c = peek();
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw parse_error(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  const VariableSet& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableSet& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace hbcells
