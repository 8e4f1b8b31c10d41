#pragma once

#include <string>
#include <string_view>

#include "hbcells/poly_matrix.hpp"

namespace hbcells {

struct SylvesterMatrix {
  PolyMatrix matrix;
  unsigned deg_f = 0;
  unsigned deg_g = 0;
};

// Rows: deg_g shifts of f's coefficients, then deg_f shifts of g's, highest
// power of `var` leftmost. Formal degrees are the exact degrees in `var`.
inline SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, std::string_view var) {
  if (!(f.ring() == g.ring())) throw ambient_mismatch();
  auto fc = degree_and_coeff(f, var);
  auto gc = degree_and_coeff(g, var);
  if (!fc.degree || *fc.degree == 0)
    throw degenerate_resultant("first resultant argument is constant in " + std::string(var));
  if (!gc.degree) throw degenerate_resultant("second resultant argument is zero");

  const unsigned n = *fc.degree, m = *gc.degree;
  SylvesterMatrix s{PolyMatrix(f.ring(), n + m, n + m), n, m};
  auto coeff = [](const DegreeCoefficients& dc, unsigned e, const VariableSet& ring) {
    auto it = dc.coefficients.find(e);
    return it == dc.coefficients.end() ? Polynomial(ring) : it->second;
  };
  for (unsigned r = 0; r < m; ++r)
    for (unsigned s_ = 0; s_ <= n; ++s_) s.matrix(r, r + s_) = coeff(fc, n - s_, f.ring());
  for (unsigned r = 0; r < n; ++r)
    for (unsigned s_ = 0; s_ <= m; ++s_) s.matrix(m + r, r + s_) = coeff(gc, m - s_, f.ring());
  return s;
}

// Matrix of multiplication by g on k[..][var]/(f) in the basis 1, var, ...,
// var^{n-1}; f must have leading coefficient 1 in `var`. Column i holds the
// coefficients of var^i g mod f.
inline PolyMatrix multiplication_matrix(const Polynomial& f, const Polynomial& g, std::string_view var) {
  const auto& ring = f.ring();
  auto fc = degree_and_coeff(f, var);
  if (!fc.degree || *fc.degree == 0 || fc.coefficients.at(*fc.degree) != Polynomial::constant(ring, 1))
    throw degenerate_resultant("multiplication matrix needs a monic modulus in " + std::string(var));
  const unsigned n = *fc.degree;
  auto reduce = [&](Polynomial p) {
    for (;;) {
      auto dc = degree_and_coeff(p, var);
      if (!dc.degree || *dc.degree < n) return p;
      p -= dc.coefficients.at(*dc.degree) * Polynomial::variable(ring, var, *dc.degree - n) * f;
    }
  };
  PolyMatrix m(ring, n, n);
  Polynomial column = reduce(g);
  const Polynomial shift = Polynomial::variable(ring, var);
  for (unsigned i = 0; i < n; ++i) {
    for (auto& [e, c] : degree_and_coeff(column, var).coefficients) m(e, i) = std::move(c);
    if (i + 1 < n) column = reduce(column * shift);
  }
  return m;
}

// Determinant of the Sylvester matrix, evaluated directly. Used as the
// reference for sylvester_resultant.
inline Polynomial sylvester_determinant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  auto s = sylvester_matrix(f, g, var);
  if (s.deg_g == 0) return g.pow(s.deg_f);
  return determinant(s.matrix);
}

// Resultant with respect to `var`, equal to the determinant of the Sylvester
// matrix with the formal degrees above. When g is free of `var` this is
// g^deg(f). When f has a constant leading coefficient c the value is computed
// as c^{deg g} det(multiplication by g mod f/c), a much smaller determinant.
// Stability under specialization needs that constant leading coefficient;
// that is the caller's responsibility.
inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::string_view var) {
  auto fc = degree_and_coeff(f, var);
  auto gc = degree_and_coeff(g, var);
  if (!(f.ring() == g.ring())) throw ambient_mismatch();
  if (!fc.degree || *fc.degree == 0)
    throw degenerate_resultant("first resultant argument is constant in " + std::string(var));
  if (!gc.degree) throw degenerate_resultant("second resultant argument is zero");
  if (*gc.degree == 0) return g.pow(*fc.degree);
  const Polynomial& lead = fc.coefficients.at(*fc.degree);
  if (!lead.is_constant()) return sylvester_determinant(f, g, var);
  const Rational c = lead.constant_value();
  Polynomial res = expansion_determinant(multiplication_matrix((1 / c) * f, g, var));
  return c == 1 ? res : pow(c, *gc.degree) * res;
}

}  // namespace hbcells
