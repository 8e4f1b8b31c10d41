#pragma once

#include <vector>

#include "hbcells/poly_matrix.hpp"
#include "hbcells/spread_out.hpp"

namespace hbcells {

// Coefficients of p on the standard monomials of E, i.e. of p mod E.
inline std::vector<Rational> standard_coordinates(const Polynomial& p, const Staircase& e) {
  const auto& ring = p.ring();
  const auto monos = e.standard_monomials(ring);
  std::vector<Rational> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(p.coefficient(m));
  return out;
}

// One row per registry parameter: for every maximal minor, the first-order
// change of that minor in the parameter's direction at the origin of the
// base, read modulo E. By Jacobi's formula the derivative of det(S) in the
// direction y^k at entry (r, c) is y^k times the (r, c) cofactor of S.
inline std::vector<std::vector<Rational>> tangent_matrix(const Staircase& e) {
  const auto ring = plane_ring();
  const PolyMatrix base = hilbert_burch_matrix(e, ring);
  const std::size_t t = e.t();

  std::vector<std::vector<Rational>> rows;
  for (const auto& p : parameter_registry(e)) {
    const std::size_t pr = p.key.i - 1, pc = p.key.j - 1;
    const Polynomial shift = Polynomial::variable(ring, "y", p.key.k);
    std::vector<Rational> row;
    for (std::size_t deleted = 0; deleted <= t; ++deleted) {
      Polynomial derivative(ring);
      if (deleted != pr) {
        const PolyMatrix s = base.without_row(deleted);
        const std::size_t r = pr < deleted ? pr : pr - 1;
        Polynomial cof = t == 1 ? Polynomial::constant(ring, 1) : determinant(s.without(r, pc));
        if ((r + pc) % 2 == 1) cof = -cof;
        derivative = shift * cof;
      }
      auto coords = standard_coordinates(derivative, e);
      row.insert(row.end(), coords.begin(), coords.end());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Rank of the first-order map from the base to deformations of E; expected
// to equal 2d.
inline std::size_t tangent_map_rank(const Staircase& e) { return rank(tangent_matrix(e)); }

}  // namespace hbcells
