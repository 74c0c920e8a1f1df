#include <gtest/gtest.h>

#include "rollfac/scroll.hpp"

using namespace rf;

TEST(Scroll, Coordinates) {
  ScrollType S({2, 1});
  EXPECT_EQ(S.degree(), 3);
  EXPECT_EQ(S.num_coords(), 5);
  EXPECT_EQ(S.ambient_dim(), 4);
  EXPECT_EQ(S.coord(0, 3), -1);
  EXPECT_EQ(S.ambient()->names[S.coord(1, 1)], "z.2.1");
}

TEST(Scroll, ScrollarEquationsVanishOnParametrization) {
  ScrollType S({3, 2, 1});
  auto eqs = scrollar_equations(S);
  // 2x6 matrix: C(6,2) minors
  EXPECT_EQ(eqs.size(), 15u);
  for (auto& q : eqs) EXPECT_TRUE(parametrize(S, q).is_zero()) << q.str();
}

TEST(Scroll, ParametrizeCoordinate) {
  ScrollType S({3});
  auto x1 = MultiPoly::var(S.ambient(), S.coord(0, 1));
  auto img = parametrize(S, x1);
  EXPECT_EQ(img.num_terms(), 1u);
  EXPECT_EQ(img.total_degree(), 4);  // s^2 t z
}

TEST(Scroll, Aliases) {
  EXPECT_EQ(alias("z.1.3"), "x3");
  EXPECT_EQ(alias("z.2.0"), "y0");
  EXPECT_EQ(alias("zeta.1.2"), "xi2");
  EXPECT_EQ(alias("zeta.2.1"), "eta1");
  EXPECT_EQ(alias("zeta.3.4"), "zeta4");
}
