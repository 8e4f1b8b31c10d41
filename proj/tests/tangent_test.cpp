#include "support.hpp"

namespace hbcells {
namespace {

// Row of the tangent matrix recomputed by perturbing the Hilbert-Burch matrix
// with e * y^k at the parameter's slot, differentiating each minor in e at
// e = 0 and reducing modulo E with a Groebner basis.
std::vector<Rational> epsilon_row(const Staircase& s, const ParamIndex& p) {
  const VariableSet R{"x", "y", "e"};
  PolyMatrix m = hilbert_burch_matrix(s, R);
  m(p.key.i - 1, p.key.j - 1) += Polynomial::variable(R, "e") * Polynomial::variable(R, "y", p.key.k);
  const VariableSet XY{"x", "y"};
  const GroebnerBasis gb(s.ideal(XY), MonomialOrder::deglex(XY));
  const Bindings at_zero{{"e", Polynomial(R)}};
  std::vector<Rational> row;
  for (const auto& minor : maximal_minors(m)) {
    auto first_order = rebase(substitute(partial_derivative(minor, "e"), at_zero), XY);
    auto reduced = gb.normal_form(first_order);
    for (const auto& mono : s.standard_monomials(XY)) row.push_back(reduced.coefficient(mono));
  }
  return row;
}

TEST(Tangent, SmallRanks) {
  EXPECT_EQ(tangent_map_rank(Staircase::from_m({1})), 2u);
  EXPECT_EQ(tangent_map_rank(Staircase::from_m({1, 1, 3})), 10u);
  EXPECT_EQ(tangent_map_rank(Staircase::from_m({2, 2, 2})), 12u);
  EXPECT_EQ(tangent_map_rank(Staircase::from_m({3, 3})), 12u);
}

TEST(Tangent, MatrixShape) {
  auto s = Staircase::from_m({1, 2});
  auto rows = tangent_matrix(s);
  EXPECT_EQ(rows.size(), 2 * s.colength());
  for (const auto& r : rows) EXPECT_EQ(r.size(), (s.t() + 1) * s.colength());
}

TEST(Tangent, StandardCoordinates) {
  const VariableSet XY{"x", "y"};
  auto s = Staircase::from_m({1, 2});
  auto coords = standard_coordinates(test::P(XY, "3*x*y + 5 + x^2 + y^4"), s);
  // standard monomials 1, x, y in grlex order
  EXPECT_EQ(coords, (std::vector<Rational>{5, 0, 0}));
}

TEST(Tangent, MatchesEpsilonOracle) {
  for (const auto& s : staircases_up_to(6)) {
    auto rows = tangent_matrix(s);
    auto reg = parameter_registry(s);
    ASSERT_EQ(rows.size(), reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i) EXPECT_EQ(rows[i], epsilon_row(s, reg[i])) << s.to_string() << " " << reg[i].name();
  }
}

TEST(Tangent, RankIs2dUpTo6) {
  for (const auto& s : staircases_up_to(6)) EXPECT_EQ(tangent_map_rank(s), 2 * s.colength()) << s.to_string();
}

TEST(Rank, Basics) {
  EXPECT_EQ(rank({}), 0u);
  EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank({{0, 1}, {1, 0}, {1, 1}}), 2u);
  EXPECT_EQ(rank({{Rational(1) / 3, 0, 1}, {0, 0, 0}, {1, 0, 3}}), 1u);
}

}  // namespace
}  // namespace hbcells
