#include <gtest/gtest.h>

#include "rollfac/liftdef.hpp"
#include "rollfac/rolling.hpp"
#include "rollfac_app/io.hpp"

using namespace rf;
using rf::app::bihom_from_text;

namespace {

LiftingSystem lift(const std::vector<BihomForm>& eqs) {
  std::vector<int> bs;
  for (auto& P : eqs) bs.push_back(P.cls.b);
  return lifting_matrix(eqs, make_deform_vars(eqs[0].scroll, bs));
}

}  // namespace

TEST(Lifting, RankDeficientNonComposedCurve) {
  ScrollType S({6, 5, 5});
  auto P = bihom_from_text(S, {2, 7}, "(s^5 + t^5)*x^2 + s^3*y^2 + t^3*z^2");
  auto Q = bihom_from_text(S, {2, 7}, "s^5*x^2 + (s^3 - t^3)*(y - z)^2 + 2*t^3*z^2");
  auto M = lift({P, Q});
  EXPECT_EQ(M.rows.size(), 4u);
  EXPECT_EQ(M.cols.size(), 13u);
  EXPECT_EQ(M.rank(), 3);
  TetraInvariants inv{6, 5, 5, 7, 7};
  EXPECT_EQ(rho(inv), 0);
  EXPECT_EQ(t1_minus1(inv, M), 10);
}

TEST(Lifting, ClosedFormulaMatchesSplitting) {
  ScrollType S({5, 3, 2});
  auto P = bihom_from_text(S, {2, 6}, "(s^4 - 3*t^4)*x^2 + (2*s^2 + s*t)*x*y + 5*y^2 + (s + t)*x*z");
  auto v = make_deform_vars(S, {6});
  auto M = lifting_matrix({P}, v);
  auto L = lifting_from_S(P, canonical_scheme(P), v);
  EXPECT_EQ(L.rows, M.rows);
  EXPECT_GT(M.rows.size(), 0u);
}

TEST(Lifting, SingleVariableDependence) {
  // P = s x^2 on S(2): b = 3 > e + 1 gives no rows (|I| = 1, w = 2, b - w - 1 = 0)
  ScrollType S({2});
  auto P = bihom_from_text(S, {2, 3}, "s*x^2");
  EXPECT_EQ(lift({P}).rows.size(), 0u);
}

TEST(Invariants, Rho) {
  EXPECT_EQ(rho({10, 6, 2, 12, 4}), 10);  // g = 21: (g+3)/6 + 6
  EXPECT_EQ(rho({4, 4, 4, 5, 5}), 0);
  EXPECT_EQ(pure_rolling_count({5, 3}, {4}), 2);
}

TEST(Invariants, Table) {
  auto t = t1_t2_table({4, 4, 4, 5, 5});
  EXPECT_EQ(t.t1_m2, 0);
  EXPECT_EQ(t.t1_0, 42);
  EXPECT_EQ(t.t1_1, 15);
  EXPECT_EQ(t.t1_2, 1);
  ASSERT_TRUE(t.t2_m2);
  EXPECT_EQ(*t.t2_m2, 8);
}

TEST(Shear, SplitRecombines) {
  ScrollType S({2, 2, 2});
  auto Q = bihom_from_text(S, {2, 1}, "s^3*x^2 + t^3*y^2 + (s*t^2 + t^3)*z^2 + s^2*t*x*y");
  auto [Qs, Qt] = shear_split(Q, 4);  // Q = s Q_s + t^2 Q_t
  auto s = MultiPoly::var(S.fiber(), "s"), t = MultiPoly::var(S.fiber(), "t");
  EXPECT_EQ(s * Qs.as_fiber_poly() + t.pow(2) * Qt.as_fiber_poly(), Q.as_fiber_poly());
  EXPECT_EQ(Qt.terms.size(), 2u);
}

TEST(NonScrollar, CountIsGMinus4) {
  ScrollType S({3, 2});
  auto F = bihom_from_text(S, {3, 3}, "(s^6 + t^6)*x^3 + s^5*x^2*y + t^4*x*y^2 + (s^3 - t^3)*y^3");
  auto gens = trigonal_nonscrollar_all(F);
  EXPECT_EQ(gens.size(), 3u);  // g = 7
  for (auto& g : gens) {
    std::string why;
    EXPECT_TRUE(verify_nonscrollar(F, g, &why)) << why;
  }
}
