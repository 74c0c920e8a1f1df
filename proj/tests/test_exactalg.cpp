#include <gtest/gtest.h>

#include "rollfac/binary_form.hpp"
#include "rollfac/linalg.hpp"
#include "rollfac/multipoly.hpp"
#include "rollfac/polyparse.hpp"
#include "rollfac/rat.hpp"

using namespace rf;

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
  EXPECT_EQ(to_string(Rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rat(7)), "7");
  EXPECT_THROW(parse_rat("1/0"), std::exception);
  EXPECT_THROW(parse_rat("abc"), std::exception);
}

TEST(BinaryForm, Arithmetic) {
  // (s + t)(s - t) = s^2 - t^2
  BinaryForm a(1, {Rat(1), Rat(1)}), b(1, {Rat(1), Rat(-1)});
  EXPECT_EQ(a * b, BinaryForm(2, {Rat(1), Rat(0), Rat(-1)}));
  EXPECT_EQ(BinaryForm::monomial(2, 1), BinaryForm(3, {Rat(0), Rat(1), Rat(0), Rat(0)}));
  // d/dt (s^2 t + t^3) = s^2 + 3 t^2
  BinaryForm f(3, {Rat(0), Rat(1), Rat(0), Rat(1)});
  EXPECT_EQ(f.diff_t(), BinaryForm(2, {Rat(1), Rat(0), Rat(3)}));
  EXPECT_EQ(f.eval(2, 1), Rat(5));
}

TEST(BinaryForm, SquarefreeAndRoots) {
  auto p = from_roots({Rat(0), Rat(1), Rat(-1)});  // t(t-1)(t+1) = t^3 - s^2 t
  EXPECT_EQ(p, BinaryForm(3, {Rat(0), Rat(-1), Rat(0), Rat(1)}));
  EXPECT_TRUE(is_squarefree(p));
  BinaryForm lin(1, {Rat(-2), Rat(1)});
  EXPECT_FALSE(is_squarefree(lin * lin * BinaryForm(1, {Rat(1), Rat(1)})));
  // s^4 is a fourfold root at infinity
  EXPECT_FALSE(is_squarefree(BinaryForm::monomial(4, 0)));
  auto q = divide_exact(p, BinaryForm(1, {Rat(0), Rat(1)}));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, BinaryForm(2, {Rat(-1), Rat(0), Rat(1)}));
  EXPECT_FALSE(divide_exact(p, BinaryForm(1, {Rat(2), Rat(1)})));
}

TEST(MultiPoly, RingOps) {
  auto A = make_alphabet({"x", "y"});
  auto x = MultiPoly::var(A, "x"), y = MultiPoly::var(A, 1);
  auto f = (x + y).pow(2);
  EXPECT_EQ(f, x * x + Rat(2) * x * y + y * y);
  EXPECT_EQ(f.evaluate({Rat(1), Rat(2)}), Rat(9));
  EXPECT_EQ(f.coefficient_of(0, 1), Rat(2) * y);
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_TRUE((f - f).is_zero());
  auto B = make_alphabet({"y", "x", "z"});
  EXPECT_EQ(f.rebase(B).rebase(A), f);
}

TEST(MultiPoly, Substitute) {
  auto A = make_alphabet({"x", "y"});
  auto B = make_alphabet({"u"});
  auto u = MultiPoly::var(B, 0);
  auto img_x = u * u, img_y = u + MultiPoly(B, 1);
  auto f = MultiPoly::var(A, 0) - MultiPoly::var(A, 1).pow(2);
  // u^2 - (u + 1)^2 = -2u - 1
  EXPECT_EQ(f.substitute({&img_x, &img_y}, B), Rat(-2) * u - MultiPoly(B, 1));
}

TEST(Parse, Polynomials) {
  auto A = make_alphabet({"x", "y"});
  auto f = parse_poly("2*x^2 - (x - y)*(x + y) + 1/2", A);
  auto x = MultiPoly::var(A, 0), y = MultiPoly::var(A, 1);
  EXPECT_EQ(f, x * x + y * y + MultiPoly(A, Rat(1, 2)));
  EXPECT_THROW(parse_poly("x + w", A), ParseError);
  EXPECT_THROW(parse_poly("x + (y", A), ParseError);
}

TEST(LinAlg, RankKernel) {
  Matrix m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}};
  EXPECT_EQ(rank(m), 2);
  EXPECT_EQ(nullity(m), 1);
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  for (auto& row : m) {
    Rat s = 0;
    for (size_t i = 0; i < 3; ++i) s += row[i] * k[0][i];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(left_kernel(m).size(), 1u);
}
