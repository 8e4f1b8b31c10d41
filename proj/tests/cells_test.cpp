#include <random>

#include "support.hpp"
#include "hbcells/sampling.hpp"

namespace hbcells {
namespace {

using test::P;
using test::SameUpToSign;

bool is_monomial_ideal(const Ideal& ideal) {
  for (const auto& g : reduced_groebner(ideal).basis())
    if (g.size() != 1) return false;
  return true;
}

std::vector<std::string> kept_names(const SpreadOutMatrix& m, const CellRestriction& r) {
  std::vector<std::string> out;
  for (auto s : r.kept_slots()) out.push_back(m.registry()[s].name());
  return out;
}

// ---- minors ideal ----------------------------------------------------------

TEST(MinorsIdeal, NonInjectivityGenerators) {
  auto m = test::spread({3, 7, 13});
  const auto& R = m.plane();
  auto minors = maximal_minors(m.specialized({{{1, 2, 2}, Rational(1)}, {{4, 3, 5}, Rational(1)}}));
  ASSERT_EQ(minors.size(), 4u);
  EXPECT_TRUE(SameUpToSign(minors[0], P(R, "x^2*y^5 - x^3")));
  EXPECT_TRUE(SameUpToSign(minors[1], P(R, "-x*y^8 + x^2*y^3")));
  EXPECT_TRUE(SameUpToSign(minors[2], P(R, "y^12 + x*y^7 - x*y^7 - x^2*y^2")));
  EXPECT_TRUE(SameUpToSign(minors[3], P(R, "y^13 + x*y^8")));
}

TEST(MinorsIdeal, NonInjectivitySymbolicGenerators) {
  auto m = test::spread({3, 7, 13});
  auto keep = test::mask_of(m, {{1, 2, 2}, {4, 3, 5}});
  const auto& R = m.ring();
  auto minors = symbolic_minors(m, &keep);
  const char* printed[] = {"x^2*y^5*a[4,3,5] - x^3", "-x*y^8*a[4,3,5] + x^2*y^3",
                           "y^12*a[4,3,5] + x*y^7*a[1,2,2]*a[4,3,5] - x*y^7 - x^2*y^2*a[1,2,2]",
                           "y^13 + x*y^8*a[1,2,2]"};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(SameUpToSign(minors[i], P(R, printed[i]))) << i;
}

TEST(MinorsIdeal, MinusModeAppendsTopPower) {
  auto m = test::spread({1, 2});
  auto plus = minors_ideal(m, {}, Mode::plus), minus = minors_ideal(m, {}, Mode::minus);
  EXPECT_EQ(minus.generators().size(), plus.generators().size() + 1);
  EXPECT_EQ(minus.generators().back(), P(m.plane(), "y^4"));
  EXPECT_THROW(minors_ideal(m, {{{3, 3, 0}, Rational(1)}}), unknown_parameter);
}

// ---- res_E -----------------------------------------------------------------

TEST(ResE, NonFlatnessFamily) {
  auto m = test::spread({2, 2});
  auto keep = test::mask_of(m, {{1, 2, 1}, {2, 1, 1}});
  EXPECT_TRUE(SameUpToSign(resultant_res_e(m, &keep), P(m.ring(), "y^4*(1 - a[2,1,1]*a[1,2,1])")));
}

TEST(ResE, NonFinitenessFamily) {
  auto m = test::spread({3, 3});
  auto keep = test::mask_of(m, {{1, 2, 2}, {2, 1, 2}});
  EXPECT_TRUE(SameUpToSign(resultant_res_e(m, &keep), P(m.ring(), "y^7*a[1,2,2]*a[2,1,2] - y^6")));
}

TEST(ResE, MinusModeExample) {
  // E = (y^3, x*y, x^4): the 5x4 matrix needs m = (1,1,1,3)
  auto m = test::spread({1, 1, 1, 3});
  auto cell = cell_restrict(m, Cocharacter(-2, -3));
  EXPECT_EQ(kept_names(m, cell), (std::vector<std::string>{"a[1,3,0]", "a[5,4,1]"}));
  EXPECT_EQ(cell.mode, Mode::minus);
  EXPECT_TRUE(SameUpToSign(resultant_res_e(m, cell), P(m.ring(), "y^13*a[1,3,0]*a[5,4,1]^2 + y^12")));
}

TEST(ResE, OriginIsTopPower) {
  for (const auto& s : staircases_up_to(6)) {
    SpreadOutMatrix m(s);
    std::vector<bool> none(m.registry().size(), false);
    EXPECT_EQ(resultant_res_e(m, &none), Polynomial::variable(m.ring(), "y", s.top_degree())) << s.to_string();
  }
}

// ---- criterion report ------------------------------------------------------

TEST(Criterion, FlatStaircaseOverFullBase) {
  auto r = criterion_report(test::spread({2, 2, 2}));
  ASSERT_TRUE(r.deg_y);
  EXPECT_EQ(*r.deg_y, 6u);
  EXPECT_EQ(r.target, 6u);
  EXPECT_FALSE(r.top_coefficient.is_zero());
  EXPECT_TRUE(r.finiteness_degree_met);
  EXPECT_EQ(r.theorem, TheoremApplied::none);
}

TEST(Criterion, NonFinitenessFamilyExceedsTarget) {
  auto m = test::spread({3, 3});
  auto full = criterion_report(m);
  ASSERT_TRUE(full.deg_y);
  EXPECT_GT(*full.deg_y, 6u);
  EXPECT_FALSE(full.finiteness_degree_met);

  auto keep = test::mask_of(m, {{1, 2, 2}, {2, 1, 2}});
  auto r = criterion_report(m, &keep);
  EXPECT_EQ(*r.deg_y, 7u);
  EXPECT_TRUE(r.flat_locus_nonempty);
  // on ab = 0 the y^7 term disappears
  Bindings ab0{{"a[1,2,2]", Polynomial(m.ring())}};
  EXPECT_EQ(*degree_and_coeff(substitute(r.res, ab0), "y").degree, 6u);
}

TEST(Criterion, ZeroAssignmentMeetsTarget) {
  auto m = test::spread({1, 2, 2});
  std::vector<bool> none(m.registry().size(), false);
  auto r = criterion_report(m, &none);
  EXPECT_TRUE(r.finiteness_degree_met);
  EXPECT_EQ(r.top_coefficient, Polynomial::constant(m.ring(), 1));
}

TEST(Criterion, TheoremDispatch) {
  auto m = test::spread({1, 2});
  auto plus = criterion_report(m, cell_restrict(m, Cocharacter(-3, 2)));
  EXPECT_EQ(plus.theorem, TheoremApplied::abb);
  auto minus = criterion_report(m, cell_restrict(m, Cocharacter(1, -1)));
  EXPECT_EQ(minus.theorem, TheoremApplied::abb_minus);
  EXPECT_EQ(minus.isomorphism_onto_cell, Verdict::yes);
  auto square = test::spread({2, 2});
  auto fixed = criterion_report(square, cell_restrict(square, Cocharacter(1, 1)));
  EXPECT_EQ(fixed.isomorphism_onto_cell, Verdict::unknown);
}

// ---- cell restriction ------------------------------------------------------

TEST(Cell, MixedSignCocharacter) {
  auto m = test::spread({1, 2});
  auto r = cell_restrict(m, Cocharacter(1, -1));
  EXPECT_EQ(kept_names(m, r), (std::vector<std::string>{"a[2,1,0]", "a[3,1,0]", "a[3,2,0]"}));
  EXPECT_TRUE(r.isolated_origin);
  EXPECT_EQ(r.mode, Mode::minus);
}

TEST(Cell, OppositeWeightsGiveFixedLocus) {
  auto m = test::spread({3, 7, 13});
  auto r = cell_restrict(m, Cocharacter(5, 1));
  EXPECT_TRUE(r.kept[m.slot({1, 2, 2})]);
  EXPECT_TRUE(r.kept[m.slot({4, 3, 5})]);
  EXPECT_EQ(r.pairing[m.slot({1, 2, 2})], 0);
  EXPECT_FALSE(r.isolated_origin);
  // the printed subtorus (1,5) does not fix these parameters
  auto other = cell_restrict(m, Cocharacter(1, 5));
  EXPECT_NE(other.pairing[m.slot({1, 2, 2})], 0);
}

TEST(Cell, ModeFollowsSignOfBeta) {
  EXPECT_EQ(cell_restrict(test::spread({1, 1}), Cocharacter(0, 1)).mode, Mode::plus);
  EXPECT_EQ(cell_restrict(test::spread({1, 1}), Cocharacter(3, 0)).mode, Mode::plus);
  EXPECT_EQ(cell_restrict(test::spread({1, 1}), Cocharacter(3, -1)).mode, Mode::minus);
  EXPECT_THROW(Cocharacter(0, 0), validation_error);
}

TEST(Cell, SinglePoint) {
  auto m = test::spread({1});
  for (auto psi : {Cocharacter(1, 1), Cocharacter(-1, 2), Cocharacter(2, -1), Cocharacter(-1, -1)}) {
    auto r = cell_restrict(m, psi);
    EXPECT_EQ(r.kept[m.slot({1, 1, 0})], psi.beta() >= 0);
    EXPECT_EQ(r.kept[m.slot({2, 1, 0})], psi.alpha() >= 0);
  }
}

TEST(Cell, NegativeLexCocharacterIsMinus) {
  for (const auto& s : staircases_up_to(5)) {
    const long long M = 2 * static_cast<long long>(s.top_degree()) + 1;
    SpreadOutMatrix m(s);
    auto r = cell_restrict(m, Cocharacter(-M + 1, -M));
    EXPECT_EQ(r.mode, Mode::minus);
    EXPECT_TRUE(r.isolated_origin) << s.to_string();
  }
}

// ---- verify_point ----------------------------------------------------------

TEST(VerifyPoint, NonFinitePointFailsColength) {
  auto m = test::spread({3, 3});
  auto rep = verify_point(m, {{{1, 2, 2}, Rational(1)}, {{2, 1, 2}, Rational(1)}});
  EXPECT_FALSE(rep.colength_ok);
  ASSERT_TRUE(rep.colength);
  EXPECT_GE(*rep.colength, 7u);
}

TEST(VerifyPoint, NonFinitenessOffLocus) {
  auto m = test::spread({3, 3});
  const Assignment a{{{1, 2, 2}, Rational(1)}};
  auto ideal = minors_ideal(m, a);
  EXPECT_EQ(colength(ideal), 6u);
  // a[1,2,2] has weight (-1,1): the cell of (1,2) keeps it
  auto cell = cell_restrict(m, Cocharacter(1, 2));
  ASSERT_TRUE(cell.kept[m.slot({1, 2, 2})]);
  auto rep = verify_point(m, cell, a);
  EXPECT_TRUE(rep.passed()) << rep.details;
}

TEST(VerifyPoint, NonFlatnessLineHasInfiniteColength) {
  auto m = test::spread({2, 2});
  auto rep = verify_point(m, {{{1, 2, 1}, Rational(2)}, {{2, 1, 1}, Rational(1) / Rational(2)}});
  EXPECT_FALSE(rep.colength);
  EXPECT_FALSE(rep.colength_ok);
}

TEST(VerifyPoint, ZeroAssignmentPasses) {
  for (const auto& s : staircases_up_to(5)) {
    SpreadOutMatrix m(s);
    for (auto psi : {Cocharacter(-3, 2), Cocharacter(1, -1)}) {
      auto rep = verify_point(m, cell_restrict(m, psi), {});
      EXPECT_TRUE(rep.passed()) << s.to_string();
    }
  }
}

TEST(VerifyPoint, RejectsValuesOutsideCell) {
  auto m = test::spread({3, 3});
  auto cell = cell_restrict(m, Cocharacter(1, 2));
  EXPECT_THROW(verify_point(m, cell, {{{2, 1, 2}, Rational(1)}}), validation_error);
  EXPECT_NO_THROW(verify_point(m, cell, {{{2, 1, 2}, Rational(0)}}));
}

TEST(VerifyPoint, NonInjectivityPoint) {
  auto m = test::spread({3, 7, 13});
  const Assignment a{{{1, 2, 2}, Rational(1)}, {{4, 3, 5}, Rational(1)}};
  auto rep = verify_point(m, cell_restrict(m, Cocharacter(5, 1)), a);
  EXPECT_EQ(rep.colength, 23u);
  EXPECT_TRUE(rep.colength_ok);
  ASSERT_TRUE(rep.limit);
  // the point is fixed by (5,1), so its limit is itself rather than E
  EXPECT_TRUE(ideal_equal(*rep.limit, rep.ideal));
  EXPECT_FALSE(rep.limit_ok);
  // nearby cocharacters push it to a monomial ideal of the same colength
  for (auto psi : {Cocharacter(6, 1), Cocharacter(4, 1)}) {
    auto lim = gm_limit(rep.ideal, psi);
    EXPECT_TRUE(is_monomial_ideal(lim));
    EXPECT_EQ(colength(lim), 23u);
  }
}

TEST(VerifyPoint, MinusModeExampleLeavesTheAxis) {
  auto m = test::spread({1, 1, 1, 3});
  const Assignment ab{{{1, 3, 0}, Rational(1)}, {{5, 4, 1}, Rational(1)}};
  auto plus = verify_point(m, ab, Mode::plus);
  EXPECT_FALSE(plus.colength_ok);
  // the point (x, y) = (-1, -1) lies on the plus-mode fibre
  for (const auto& g : plus.ideal.generators())
    EXPECT_TRUE(substitute(g, Bindings{{"x", P(m.plane(), "-1")}, {"y", P(m.plane(), "-1")}}).is_zero());
  auto minus = verify_point(m, ab, Mode::minus);
  ASSERT_TRUE(minus.colength);
  EXPECT_TRUE(minus.colength_ok) << minus.details;
  auto cell = verify_point(m, cell_restrict(m, Cocharacter(-2, -3)), ab);
  EXPECT_TRUE(cell.passed()) << cell.details;
}

// ---- properties ------------------------------------------------------------

TEST(Properties, MinorsAreHomogeneousUpTo6) {
  for (const auto& s : staircases_up_to(6)) {
    SpreadOutMatrix m(s);
    auto w = m.weights();
    auto minors = symbolic_minors(m);
    for (unsigned i = 0; i <= s.t(); ++i) {
      auto check = weight_check(minors[i], w);
      ASSERT_TRUE(check.homogeneous) << s.to_string() << " minor " << i;
      EXPECT_EQ(*check.weight, (Weight{static_cast<long long>(s.t() - i), s.m_at(i)}))
          << s.to_string();
    }
  }
}

TEST(Properties, CertificateAgreesWithExpandedResultant) {
  for (const auto& s : staircases_up_to(5)) {
    SpreadOutMatrix m(s);
    auto cert = res_e_weight_certificate(m);
    ASSERT_TRUE(cert) << s.to_string();
    EXPECT_EQ(*cert, (Weight{0, s.top_degree()}));
    auto check = weight_check(resultant_res_e(m), m.weights());
    EXPECT_TRUE(check.homogeneous);
    EXPECT_EQ(*check.weight, *cert) << s.to_string();
  }
}

TEST(Properties, CertificateRejectsInhomogeneousInput) {
  // breaking the grading of one parameter must be detected
  auto m = test::spread({1, 2});
  auto w = m.weights();
  auto res = resultant_res_e(m);
  EXPECT_TRUE(weight_check(res, w).homogeneous);
  std::map<std::string, Weight, std::less<>> wrong{{"x", {1, 0}}, {"y", {0, 1}}, {"t", {0, 0}}, {"u", {0, 0}}};
  for (const auto& p : m.registry()) wrong.emplace(p.name(), p.weight + Weight{0, p.key.k == 0 ? 1 : 0});
  EXPECT_FALSE(weight_check(res, WeightAssignment(m.ring(), wrong)).homogeneous);
}

class CellProps : public ::testing::TestWithParam<int> {};

Cocharacter random_cochar(std::mt19937_64& rng, bool nonnegative_beta) {
  std::uniform_int_distribution<int> a(-6, 6), b(nonnegative_beta ? 0 : -6, 6);
  for (;;) {
    int alpha = a(rng), beta = b(rng);
    if (alpha != 0 || beta != 0) return Cocharacter(alpha, beta);
  }
}

TEST_P(CellProps, PlusCellsNeverExceedTarget) {
  std::mt19937_64 rng(77 + GetParam());
  auto all = staircases_up_to(5);
  const auto& s = all[rng() % all.size()];
  SpreadOutMatrix m(s);
  auto cell = cell_restrict(m, random_cochar(rng, true));
  auto r = criterion_report(m, cell);
  ASSERT_TRUE(r.deg_y);
  EXPECT_LE(*r.deg_y, r.target) << s.to_string();
  if (cell.isolated_origin) {
    EXPECT_EQ(r.top_coefficient, Polynomial::constant(m.ring(), 1)) << s.to_string();
  }
}

TEST_P(CellProps, EquivarianceAtRandomPoints) {
  std::mt19937_64 rng(91 + GetParam());
  auto all = staircases_up_to(4);
  const auto& s = all[rng() % all.size()];
  SpreadOutMatrix m(s);
  Assignment a = random_assignment(m, rng);
  Rational l1 = random_small_rational(rng), l2 = random_small_rational(rng);
  if (l1 == 0) l1 = 2;
  if (l2 == 0) l2 = Rational(-1) / Rational(3);
  auto lhs = minors_ideal(m, act_on_assignment(m, l1, l2, a));
  auto rhs = act_on_ideal(minors_ideal(m, a), l1, l2);
  EXPECT_TRUE(ideal_equal(lhs, rhs)) << s.to_string();
  // the inverse element undoes the action
  EXPECT_EQ(act_on_assignment(m, 1 / l1, 1 / l2, act_on_assignment(m, l1, l2, a)), a);
}

TEST_P(CellProps, SampledCellPointsLieInCell) {
  std::mt19937_64 rng(123 + GetParam());
  auto all = staircases_up_to(4);
  const auto& s = all[rng() % all.size()];
  SpreadOutMatrix m(s);
  auto cell = cell_restrict(m, Cocharacter(-3, 2));
  if (!cell.isolated_origin) return;
  auto rng2 = sample_rng(5, GetParam());
  auto rep = verify_point(m, cell, random_cell_assignment(m, cell, rng2));
  EXPECT_TRUE(rep.passed()) << s.to_string() << " " << rep.details;
}

INSTANTIATE_TEST_SUITE_P(Seeds, CellProps, ::testing::Range(0, 16));

TEST(Sampling, DeterministicPerIndex) {
  auto a = sample_rng(42, 7), b = sample_rng(42, 7), c = sample_rng(42, 8);
  EXPECT_EQ(a(), b());
  EXPECT_NE(sample_rng(42, 7)(), c());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto q = random_small_rational(rng);
    EXPECT_LE(abs(numerator(q)), 10);
    EXPECT_LE(denominator(q), 10);
  }
}

TEST(Torus, RejectsZeroCoordinates) {
  auto m = test::spread({1});
  EXPECT_THROW(act_on_assignment(m, 0, 1, {}), validation_error);
  EXPECT_THROW(act_on_ideal(Staircase::from_m({1}).ideal(m.plane()), 1, 0), validation_error);
}

}  // namespace
}  // namespace hbcells
