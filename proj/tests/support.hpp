#pragma once

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hbcells.hpp"

namespace hbcells::test {

inline Polynomial P(const VariableSet& ring, const std::string& text) { return parse_polynomial(text, ring); }

// Equality up to one global sign.
inline bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

inline ::testing::AssertionResult SameUpToSign(const Polynomial& a, const Polynomial& b) {
  if (equal_up_to_sign(a, b)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_string(a) << " != +-(" << to_string(b) << ")";
}

// Small random polynomial: up to `terms` terms, exponents < max_exp, integer
// coefficients in [-5, 5].
inline Polynomial random_polynomial(const VariableSet& ring, std::mt19937_64& rng, int terms = 4, unsigned max_exp = 3) {
  std::uniform_int_distribution<int> coef(-5, 5), count(0, terms);
  std::uniform_int_distribution<unsigned> expo(0, max_exp - 1);
  std::vector<Term> out;
  for (int i = count(rng); i > 0; --i) {
    Monomial m(ring.size());
    for (std::size_t v = 0; v < ring.size(); ++v) m.set(v, expo(rng));
    out.push_back({m, Rational(coef(rng))});
  }
  return Polynomial::from_terms(ring, out);
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(num(rng)) / Rational(den(rng));
}

inline SpreadOutMatrix spread(std::vector<unsigned> m) { return SpreadOutMatrix(Staircase::from_m(std::move(m))); }

inline std::vector<bool> mask_of(const SpreadOutMatrix& m, const std::vector<ParamKey>& keys) {
  std::vector<bool> mask(m.registry().size(), false);
  for (const auto& k : keys) mask[m.slot(k)] = true;
  return mask;
}

}  // namespace hbcells::test
