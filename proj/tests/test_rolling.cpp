#include <gtest/gtest.h>

#include <random>

#include "rollfac/rolling.hpp"
#include "rollfac_app/io.hpp"

using namespace rf;
using rf::app::bihom_from_text;
using rf::app::parse_text;

TEST(Rolling, LinearForm) {
  // P = s x on S(2), b = 1: P_0 = x0, P_1 = x1
  ScrollType S({2});
  auto P = bihom_from_text(S, {1, 1}, "s*x");
  auto rolled = roll_equations(P, canonical_scheme(P));
  ASSERT_EQ(rolled.size(), 2u);
  EXPECT_EQ(rolled[0], MultiPoly::var(S.ambient(), "z.1.0"));
  EXPECT_EQ(rolled[1], MultiPoly::var(S.ambient(), "z.1.1"));
}

TEST(Rolling, QuadricFactorsAreAmbientMonomials) {
  // P = x y on S(2,2), b = 4: P_m = x_i y_j with i + j = m in both schemes up to the scroll
  ScrollType S({2, 2});
  auto P = bihom_from_text(S, {2, 4}, "x*y");
  auto c = canonical_scheme(P), bal = balanced_scheme(P);
  auto rc = roll_equations(P, c);
  ASSERT_EQ(rc.size(), 5u);
  for (auto& f : rc) EXPECT_EQ(f.num_terms(), 1u);
  EXPECT_TRUE(check_roll_consistency(P, c, bal));
}

TEST(Rolling, ParametrizedLevelsRecoverP) {
  std::mt19937_64 rng(7);
  ScrollType S({4, 3, 1});
  auto P = bihom_from_text(S, {2, 3}, "(s^5 + 2*t^5)*x^2 + (s^4 - t^4)*x*y + 3*s^3*y^2 - t^2*x*z");
  for (int trial = 0; trial < 5; ++trial) {
    auto sch = random_scheme(P, rng);
    validate_scheme(P, sch);
    auto rolled = roll_equations(P, sch);
    ASSERT_EQ(rolled.size(), 4u);
    auto full = P.as_fiber_poly();
    for (int m = 0; m <= 3; ++m) {
      auto lhs = parametrize(S, rolled[m]).rebase(S.fiber());
      auto sm = MultiPoly::var(S.fiber(), "s", 3 - m) * MultiPoly::var(S.fiber(), "t", m);
      EXPECT_EQ(lhs, full * sm) << "m=" << m;
    }
  }
}

TEST(Rolling, InvalidSchemeRejected) {
  ScrollType S({2, 2});
  auto P = bihom_from_text(S, {2, 4}, "x*y");
  auto sch = canonical_scheme(P);
  for (auto& [key, lv] : sch.levels)
    for (auto& l : lv) l.assign(l.size(), 99);
  EXPECT_THROW(validate_scheme(P, sch), std::invalid_argument);
}
