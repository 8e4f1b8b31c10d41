#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hbcells/groebner.hpp"
#include "hbcells/polynomial.hpp"

namespace hbcells {

// Monomial ideal E = (x^t, x^{t-1} y^{m_1}, ..., x y^{m_{t-1}}, y^{m_t}) encoded
// by its non-decreasing exponent sequence. Indices below are 1-based with the
// convention m_0 = 0, matching the layout of the Hilbert-Burch matrix.
class Staircase {
 public:
  static Staircase from_m(std::vector<unsigned> m) {
    if (m.empty()) throw validation_error("staircase needs at least one exponent");
    for (std::size_t i = 1; i < m.size(); ++i)
      if (m[i] < m[i - 1]) throw validation_error("staircase exponents must be non-decreasing");
    if (m.back() < 1) throw validation_error("the last staircase exponent must be at least 1");
    return Staircase(std::move(m));
  }

  const std::vector<unsigned>& m() const { return m_; }
  unsigned t() const { return static_cast<unsigned>(m_.size()); }
  unsigned m_at(unsigned i) const { return i == 0 ? 0 : m_.at(i - 1); }
  unsigned d(unsigned i) const { return m_at(i) - m_at(i - 1); }
  std::vector<unsigned> d() const {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= t(); ++i) out.push_back(d(i));
    return out;
  }
  std::uint64_t colength() const { return std::accumulate(m_.begin(), m_.end(), std::uint64_t{0}); }
  unsigned top_degree() const { return t() * m_.back(); }  // t * m_t

  // x^{t-i} y^{m_i} for i = 0..t over a ring containing x and y.
  std::vector<Polynomial> generators(const VariableSet& ring) const {
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i <= t(); ++i) {
      Polynomial g = Polynomial::constant(ring, 1);
      if (t() - i > 0) g = g * Polynomial::variable(ring, "x", t() - i);
      if (m_at(i) > 0) g = g * Polynomial::variable(ring, "y", m_at(i));
      gens.push_back(g);
    }
    return gens;
  }

  Ideal ideal(const VariableSet& ring) const { return Ideal(ring, generators(ring)); }

  // Monomials x^a y^b outside E.
  std::vector<Monomial> standard_monomials(const VariableSet& ring) const {
    const auto xi = ring.index("x"), yi = ring.index("y");
    std::vector<Monomial> out;
    for (unsigned a = 0; a < t(); ++a)
      for (unsigned b = 0; b < m_at(t() - a); ++b) {
        Monomial mono(ring.size());
        mono.set(xi, a);
        mono.set(yi, b);
        out.push_back(mono);
      }
    std::sort(out.begin(), out.end(), [](const Monomial& p, const Monomial& q) { return compare_grlex(p, q) < 0; });
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + std::to_string(m_[i]);
    return s + ")";
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  explicit Staircase(std::vector<unsigned> m) : m_(std::move(m)) {}
  std::vector<unsigned> m_;
};

// All staircases with first exponent >= 1 and colength exactly d, i.e. the
// partitions of d read as column heights.
inline std::vector<Staircase> staircases_of_colength(unsigned d) {
  std::vector<Staircase> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned min_part) -> void {
    if (remaining == 0) {
      out.push_back(Staircase::from_m(current));
      return;
    }
    for (unsigned part = min_part; part <= remaining; ++part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (d > 0) rec(rec, d, 1);
  return out;
}

inline std::vector<Staircase> staircases_up_to(unsigned max_colength) {
  std::vector<Staircase> out;
  for (unsigned d = 1; d <= max_colength; ++d)
    for (auto& s : staircases_of_colength(d)) out.push_back(std::move(s));
  return out;
}

}  // namespace hbcells
