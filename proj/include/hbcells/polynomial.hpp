#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hbcells/errors.hpp"
#include "hbcells/monomial.hpp"
#include "hbcells/rational.hpp"
#include "hbcells/variables.hpp"

namespace hbcells {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted in
// descending graded-lex order with no zero coefficients and no repeated
// monomials, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VariableSet ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const VariableSet& ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring.size()), c});
    return p;
  }

  static Polynomial variable(const VariableSet& ring, std::string_view name,
                             Monomial::exponent_type power = 1) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::unit(ring.size(), ring.index(name), power), Rational(1)});
    return p;
  }

  static Polynomial monomial(const VariableSet& ring, Monomial m, const Rational& c = 1) {
    if (m.size() != ring.size()) throw ambient_mismatch("monomial length differs from ring size");
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  // Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(const VariableSet& ring, std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.monomial.size() != ring.size())
        throw ambient_mismatch("monomial length differs from ring size");
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const VariableSet& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  Rational constant_value() const {
    if (!is_constant()) throw validation_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }

  // Leading term under graded-lex; precondition: non-zero.
  const Term& leading_term() const { return terms_.front(); }

  std::int64_t total_degree() const {
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.front().monomial.degree());
  }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return 0;
  }

  // Does any term carry a positive power of variable `var`?
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.monomial[var] > 0) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1 || b.size() == 1) {
      const auto& mono = a.size() == 1 ? a : b;
      const auto& other = a.size() == 1 ? b : a;
      const auto& [m, c] = mono.terms_.front();
      r.terms_.reserve(other.size());
      // multiplying by a monomial preserves the term order
      for (const auto& t : other.terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
      return r;
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
        if (!inserted) it->second += s.coeff * t.coeff;
      }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    r.sort_terms();
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, 1), base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!(a.ring_ == b.ring_)) throw ambient_mismatch();
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_ring(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare_grlex(a.terms_[i].monomial, b.terms_[j].monomial);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({b.terms_[j].monomial, subtract ? Rational(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Rational c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (c != 0) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare_grlex(a.monomial, b.monomial) > 0; });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
  }

  VariableSet ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Substitution and ring changes

// Variable name -> replacement polynomial (over the same ring as the target).
using Bindings = std::map<std::string, Polynomial, std::less<>>;

inline Bindings bind_constants(const VariableSet& ring, const std::map<std::string, Rational, std::less<>>& values) {
  Bindings b;
  for (const auto& [name, v] : values) b.emplace(name, Polynomial::constant(ring, v));
  return b;
}

// Simultaneous substitution; unbound variables pass through unchanged.
inline Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  const auto& ring = p.ring();
  std::vector<std::optional<Polynomial>> image(ring.size());
  bool all_constant = true;
  for (const auto& [name, value] : bindings) {
    if (!(value.ring() == ring)) throw ambient_mismatch("binding for '" + name + "' lives over another ring");
    image[ring.index(name)] = value;
    all_constant = all_constant && value.is_constant();
  }

  if (all_constant) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      auto e = t.monomial.exponents();
      for (std::size_t v = 0; v < e.size() && c != 0; ++v) {
        if (!image[v] || e[v] == 0) continue;
        c *= hbcells::pow(image[v]->constant_value(), e[v]);
        e[v] = 0;
      }
      if (c != 0) out.push_back({Monomial(std::move(e)), std::move(c)});
    }
    return Polynomial::from_terms(ring, std::move(out));
  }

  // cache of powers per bound variable
  std::vector<std::vector<Polynomial>> powers(ring.size());
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[v]);
    return cache[e];
  };
  Polynomial result(ring);
  std::vector<Term> passthrough;
  for (const auto& t : p.terms()) {
    auto e = t.monomial.exponents();
    std::vector<std::pair<std::size_t, unsigned>> bound;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (image[v] && e[v] > 0) {
        bound.emplace_back(v, e[v]);
        e[v] = 0;
      }
    if (bound.empty()) {
      passthrough.push_back(t);
      continue;
    }
    Polynomial term = Polynomial::monomial(ring, Monomial(std::move(e)), t.coeff);
    for (auto [v, k] : bound) term = term * power_of(v, k);
    result += term;
  }
  return result + Polynomial::from_terms(ring, std::move(passthrough));
}

// Re-expresses p over `target`, matching variables by name. Every variable p
// actually uses must exist in `target`.
inline Polynomial rebase(const Polynomial& p, const VariableSet& target) {
  if (p.ring() == target) return p;
  const auto& src = p.ring();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t v = 0; v < src.size(); ++v) map[v] = target.find(src.name(v));
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::exponent_type> e(target.size(), 0);
    for (std::size_t v = 0; v < src.size(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (!map[v]) throw ambient_mismatch("variable '" + src.name(v) + "' has no counterpart in the target ring");
      e[*map[v]] = t.monomial[v];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Calculus and univariate views

inline Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  const auto v = p.ring().index(var);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.monomial[v];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(v, e - 1);
    out.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

struct DegreeCoefficients {
  // nullopt encodes the degree of the zero polynomial (minus infinity)
  std::optional<unsigned> degree;
  // exponent -> coefficient polynomial in the remaining variables
  std::map<unsigned, Polynomial> coefficients;
};

inline DegreeCoefficients degree_and_coeff(const Polynomial& p, std::string_view var) {
  const auto v = p.ring().index(var);
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[v];
    m.set(v, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  DegreeCoefficients out;
  for (auto& [e, terms] : buckets) out.coefficients.emplace(e, Polynomial::from_terms(p.ring(), std::move(terms)));
  if (!out.coefficients.empty()) out.degree = out.coefficients.rbegin()->first;
  return out;
}

// Exact quotient p / q; throws division_error when q does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  if (!(p.ring() == q.ring())) throw ambient_mismatch();
  if (q.is_zero()) throw division_error("division by the zero polynomial");
  if (q.is_constant()) return (Rational(1) / q.constant_value()) * p;
  if (p.is_zero()) return p;

  struct Greater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) > 0; }
  };
  std::map<Monomial, Rational, Greater> rem;
  for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coeff);
  const auto& [qm, qc] = q.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!qm.divides(lead->first))
      throw division_error("inexact polynomial division");
    Monomial m = lead->first / qm;
    Rational c = lead->second / qc;
    for (const auto& t : q.terms()) {
      auto key = t.monomial * m;
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(std::move(key), -c * t.coeff);
      } else {
        it->second -= c * t.coeff;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(p.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Z^2 weights

struct Weight {
  long long wx = 0;
  long long wy = 0;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend Weight operator+(Weight a, Weight b) { return {a.wx + b.wx, a.wy + b.wy}; }
};

// Per-variable Z^2 weight covering the whole ambient ring.
class WeightAssignment {
 public:
  WeightAssignment(const VariableSet& ring, const std::map<std::string, Weight, std::less<>>& weights)
      : ring_(ring), weights_(ring.size()) {
    std::vector<bool> seen(ring.size(), false);
    for (const auto& [name, w] : weights) {
      auto i = ring.index(name);
      weights_[i] = w;
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw validation_error("no weight given for variable '" + ring.name(i) + "'");
  }

  const VariableSet& ring() const { return ring_; }
  const Weight& operator[](std::size_t var) const { return weights_[var]; }

  Weight of(const Monomial& m) const {
    Weight w;
    for (std::size_t i = 0; i < m.size(); ++i) {
      w.wx += static_cast<long long>(m[i]) * weights_[i].wx;
      w.wy += static_cast<long long>(m[i]) * weights_[i].wy;
    }
    return w;
  }

 private:
  VariableSet ring_;
  std::vector<Weight> weights_;
};

struct WeightCheck {
  bool homogeneous = false;
  // empty for the zero polynomial, which is homogeneous of every weight
  std::optional<Weight> weight;
};

inline WeightCheck weight_check(const Polynomial& p, const WeightAssignment& w) {
  if (!(p.ring() == w.ring())) throw ambient_mismatch();
  if (p.is_zero()) return {true, std::nullopt};
  Weight first = w.of(p.terms().front().monomial);
  for (const auto& t : p.terms())
    if (!(w.of(t.monomial) == first)) return {false, std::nullopt};
  return {true, first};
}

}  // namespace hbcells
