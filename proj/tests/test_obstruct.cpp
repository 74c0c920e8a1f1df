#include <gtest/gtest.h>

#include "rollfac/obstruct.hpp"
#include "rollfac/rolling.hpp"
#include "rollfac_app/io.hpp"

using namespace rf;
using rf::app::bihom_from_text;

TEST(Obstruct, Determinant) {
  auto A = make_alphabet({"a", "b", "c", "d"});
  auto v = [&](int i) { return MultiPoly::var(A, i); };
  EXPECT_EQ(determinant({{v(0), v(1)}, {v(2), v(3)}}), v(0) * v(3) - v(1) * v(2));
  // rank one matrix
  EXPECT_TRUE(determinant({{v(0), v(1)}, {v(0) * v(2), v(1) * v(2)}}).is_zero());
}

TEST(Obstruct, PureRollingCount) {
  // e_x = 5, e_y = 3, b = 4: e_x - b + 1 = 2 pure rolling factors deformations
  ScrollType S({5, 3});
  auto P = bihom_from_text(S, {2, 4}, "(s^4 + 2*s^3*t - s^2*t^2 + 3*s*t^3 + t^4)*x*y");
  auto v = make_deform_vars(S, {4});
  auto B = base_equations(P, canonical_scheme(P), v);
  EXPECT_EQ(v.rhos.size(), 2u);
  EXPECT_EQ(B.pi[0].size(), 3u);
  EXPECT_TRUE(equivalent_base(B, closed_form_system(P, 0, 1)));
}

TEST(Obstruct, SchemeIndependentModuloLifting) {
  ScrollType S({5, 4});
  auto P = bihom_from_text(S, {2, 7}, "(3*s^2 - 2*s*t + 5*t^2)*x*y");
  auto v = make_deform_vars(S, {7});
  auto a = base_equations(P, canonical_scheme(P), v);
  auto b = base_equations(P, balanced_scheme(P), v);
  EXPECT_EQ(a.pi[0].size(), 6u);
  EXPECT_EQ(a.lifting.rows.size(), 3u);
  EXPECT_TRUE(equivalent_base(a, b));
  EXPECT_TRUE(linear_relations_check(P, a));
}

TEST(Obstruct, RhoEliminationShape) {
  ScrollType S({5, 3});
  auto P = bihom_from_text(S, {2, 4}, "(s^4 + t^4)*x*y + s*t*y^2");
  auto v = make_deform_vars(S, {4});
  auto B = base_equations(P, canonical_scheme(P), v);
  auto E = rho_elimination(B, 0);
  ASSERT_EQ(E.matrix.size(), 3u);  // chi plus two rho rows
  EXPECT_EQ(E.matrix[0].size(), 3u);
  EXPECT_EQ(E.minors.size(), 1u);
}
