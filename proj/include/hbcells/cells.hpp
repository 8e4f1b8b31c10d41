#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbcells/cocharacter.hpp"
#include "hbcells/groebner.hpp"
#include "hbcells/resultant.hpp"
#include "hbcells/spread_out.hpp"

namespace hbcells {

// plus: the family cut out by the maximal minors. minus: the same family
// intersected with the thickened x-axis y^{t m_t} = 0, used when psi gives y
// negative degree.
enum class Mode { plus, minus };

inline const char* to_string(Mode m) { return m == Mode::plus ? "plus" : "minus"; }

struct CellRestriction {
  Cocharacter psi;
  std::vector<bool> kept;         // by registry slot: pairing >= 0
  std::vector<long long> pairing; // by registry slot
  bool isolated_origin = true;    // no kept parameter has pairing exactly 0
  Mode mode = Mode::plus;         // plus iff deg_psi(y) = beta >= 0

  std::vector<std::size_t> kept_slots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (kept[i]) out.push_back(i);
    return out;
  }
};

inline CellRestriction cell_restrict(const SpreadOutMatrix& m, const Cocharacter& psi) {
  CellRestriction r{psi, {}, {}, true, psi.beta() >= 0 ? Mode::plus : Mode::minus};
  for (const auto& p : m.registry()) {
    long long pr = psi.pair(p.weight);
    r.pairing.push_back(pr);
    r.kept.push_back(pr >= 0);
    if (pr == 0) r.isolated_origin = false;
  }
  return r;
}

// Maximal minors of the symbolic matrix, optionally with the parameters
// outside a cell set to zero.
inline std::vector<Polynomial> symbolic_minors(const SpreadOutMatrix& m, const std::vector<bool>* keep = nullptr) {
  return maximal_minors(keep ? m.restricted(*keep) : m.symbolic());
}

// Ideal of maximal minors at a rational point of the base, over k[x, y]. In
// minus mode y^{t m_t} is appended.
inline Ideal minors_ideal(const SpreadOutMatrix& m, const Assignment& values, Mode mode = Mode::plus) {
  auto minors = maximal_minors(m.specialized(values));
  if (mode == Mode::minus) minors.push_back(Polynomial::variable(m.plane(), "y", m.staircase().top_degree()));
  return Ideal(m.plane(), minors);
}

// Torus action, the one convention used throughout. lambda = (l1, l2) acts on
// the base by a[p] -> l1^{w_x} l2^{w_y} a[p] and on the plane by
// (x, y) -> (l1 x, l2 y), so on functions f(x, y) -> f(x/l1, y/l2). With
// these choices the origin is fixed and minors_ideal(lambda.a) is the image of
// minors_ideal(a) under x -> x/l1, y -> y/l2.
inline Assignment act_on_assignment(const SpreadOutMatrix& m, const Rational& l1, const Rational& l2,
                                    const Assignment& values) {
  if (l1 == 0 || l2 == 0) throw validation_error("torus element must have nonzero coordinates");
  Assignment out;
  for (const auto& [key, value] : values) {
    const Weight w = m.registry()[m.slot(key)].weight;
    out[key] = value * pow(l1, w.wx) * pow(l2, w.wy);
  }
  return out;
}

inline Ideal act_on_ideal(const Ideal& ideal, const Rational& l1, const Rational& l2) {
  if (l1 == 0 || l2 == 0) throw validation_error("torus element must have nonzero coordinates");
  const auto& ring = ideal.ring();
  Bindings b;
  if (ring.find("x")) b.emplace("x", (Rational(1) / l1) * Polynomial::variable(ring, "x"));
  if (ring.find("y")) b.emplace("y", (Rational(1) / l2) * Polynomial::variable(ring, "y"));
  Ideal out(ring);
  for (const auto& g : ideal.generators()) out.add(substitute(g, b));
  return out;
}

// res_E: resultant in x of the minor without the first row (normalized to be
// monic, +x^t) and the minor without the last row.
inline Polynomial resultant_res_e(const SpreadOutMatrix& m, const std::vector<bool>* keep = nullptr) {
  PolyMatrix mat = keep ? m.restricted(*keep) : m.symbolic();
  const unsigned t = m.staircase().t();
  Polynomial first = determinant(mat.without_row(0));
  Polynomial last = determinant(mat.without_row(t));
  auto fc = degree_and_coeff(first, "x");
  if (!fc.degree || *fc.degree != t || !fc.coefficients.at(t).is_constant())
    throw validation_error("first maximal minor is not monic of degree t in x");
  if (fc.coefficients.at(t).constant_value() < 0) first = -first;
  return sylvester_resultant(first, last, "x");
}

inline Polynomial resultant_res_e(const SpreadOutMatrix& m, const CellRestriction& r) {
  return resultant_res_e(m, &r.kept);
}

// Homogeneity of res_E without expanding it. With f = first minor (monic of
// weight (t,0)) and g = last minor of weight w_g, entry (e, i) of the
// multiplication matrix of g mod f must be zero or homogeneous of weight
// w_g + (i - e, 0). Every term of the determinant then has weight t * w_g.
// Returns that weight, or nullopt if some entry breaks the pattern.
inline std::optional<Weight> res_e_weight_certificate(const SpreadOutMatrix& m, const std::vector<bool>* keep = nullptr) {
  PolyMatrix mat = keep ? m.restricted(*keep) : m.symbolic();
  const unsigned t = m.staircase().t();
  Polynomial first = determinant(mat.without_row(0));
  const Polynomial last = determinant(mat.without_row(t));
  if (degree_and_coeff(first, "x").coefficients.at(t).constant_value() < 0) first = -first;
  const auto w = m.weights();
  auto wf = weight_check(first, w);
  auto wg = weight_check(last, w);
  if (!wf.homogeneous || !wg.homogeneous || !wf.weight || !wg.weight) return std::nullopt;
  if (!(*wf.weight == Weight{static_cast<long long>(t), 0})) return std::nullopt;
  const PolyMatrix mult = multiplication_matrix(first, last, "x");
  for (std::size_t e = 0; e < t; ++e)
    for (std::size_t i = 0; i < t; ++i) {
      auto check = weight_check(mult(e, i), w);
      if (!check.homogeneous) return std::nullopt;
      const Weight expected{wg.weight->wx + static_cast<long long>(i) - static_cast<long long>(e), wg.weight->wy};
      if (check.weight && !(*check.weight == expected)) return std::nullopt;
    }
  return Weight{static_cast<long long>(t) * wg.weight->wx, static_cast<long long>(t) * wg.weight->wy};
}

enum class TheoremApplied { none, abb, abb_minus };
enum class Verdict { yes, no, unknown };

inline const char* to_string(TheoremApplied t) {
  switch (t) {
    case TheoremApplied::abb:
      return "abb";
    case TheoremApplied::abb_minus:
      return "abb-minus";
    default:
      return "none";
  }
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

struct CriterionReport {
  Polynomial res;
  std::optional<unsigned> deg_y;    // nullopt when res = 0
  std::optional<unsigned> low_deg_y;
  unsigned target = 0;              // t * m_t
  Polynomial top_coefficient;       // coefficient u of y^{t m_t}
  Polynomial leading_coefficient;   // coefficient of y^{deg_y}
  bool flat_locus_nonempty = false;
  bool finiteness_degree_met = false;
  TheoremApplied theorem = TheoremApplied::none;
  Verdict isomorphism_onto_cell = Verdict::unknown;
};

// Resultant, its y-degree against t m_t and the top coefficient. `keep`
// restricts to a parameter subset; no theorem is attached to that.
inline CriterionReport criterion_report(const SpreadOutMatrix& m, const std::vector<bool>* keep) {
  CriterionReport r;
  r.res = resultant_res_e(m, keep);
  r.target = m.staircase().top_degree();
  auto dc = degree_and_coeff(r.res, "y");
  r.deg_y = dc.degree;
  r.top_coefficient = Polynomial(m.ring());
  r.leading_coefficient = Polynomial(m.ring());
  if (auto it = dc.coefficients.find(r.target); it != dc.coefficients.end()) r.top_coefficient = it->second;
  if (r.deg_y) {
    r.leading_coefficient = dc.coefficients.at(*r.deg_y);
    r.low_deg_y = dc.coefficients.begin()->first;
  }
  r.flat_locus_nonempty = !r.res.is_zero();
  r.finiteness_degree_met = r.deg_y && *r.deg_y == r.target && !r.top_coefficient.is_zero();
  return r;
}

inline CriterionReport criterion_report(const SpreadOutMatrix& m) { return criterion_report(m, nullptr); }

inline CriterionReport criterion_report(const SpreadOutMatrix& m, const CellRestriction& restriction) {
  CriterionReport r = criterion_report(m, &restriction.kept);
  r.theorem = restriction.mode == Mode::plus ? TheoremApplied::abb : TheoremApplied::abb_minus;
  if (restriction.isolated_origin) {
    bool unit_top = r.top_coefficient == Polynomial::constant(m.ring(), 1);
    r.isomorphism_onto_cell = unit_top ? Verdict::yes : Verdict::no;
  }
  return r;
}

struct PointReport {
  Ideal ideal;
  std::optional<std::uint64_t> colength;  // nullopt: infinite
  std::optional<Ideal> limit;             // only computed under a cocharacter
  bool colength_ok = false;
  bool limit_ok = false;
  std::string details;

  bool passed() const { return colength_ok && limit_ok; }
};

namespace detail {

inline PointReport check_point(const SpreadOutMatrix& m, const CellRestriction* restriction, const Assignment& values,
                               Mode mode) {
  if (restriction)
    for (const auto& [key, value] : values)
      if (value != 0 && !restriction->kept[m.slot(key)])
        throw validation_error("assignment uses " + key.name() + ", which lies outside the cell");
  if (restriction) mode = restriction->mode;
  PointReport r{minors_ideal(m, values, mode), std::nullopt, std::nullopt, false, false, {}};
  const auto d = m.staircase().colength();
  r.colength = colength(r.ideal);
  r.colength_ok = r.colength && *r.colength == d;
  if (!r.colength) {
    r.details = "fibre has infinite colength";
    return r;
  }
  r.details = "colength " + std::to_string(*r.colength) + " (expected " + std::to_string(d) + ")";
  if (!restriction) return r;
  r.limit = gm_limit(r.ideal, restriction->psi);
  r.limit_ok = ideal_equal(*r.limit, m.staircase().ideal(m.plane()));
  r.details += r.limit_ok ? ", limit equals E" : ", limit differs from E";
  return r;
}

}  // namespace detail

// Builds the fibre ideal in the restriction's mode, then checks colength = d
// and that the psi-limit of the fibre is E. Infinite or wrong colength is
// reported, not thrown.
inline PointReport verify_point(const SpreadOutMatrix& m, const CellRestriction& restriction, const Assignment& values) {
  return detail::check_point(m, &restriction, values, restriction.mode);
}

// Without a cocharacter only the colength is checked; limit_ok stays false.
inline PointReport verify_point(const SpreadOutMatrix& m, const Assignment& values, Mode mode = Mode::plus) {
  return detail::check_point(m, nullptr, values, mode);
}

}  // namespace hbcells
