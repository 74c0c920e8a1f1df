#include <gtest/gtest.h>

#include "rollfac/gbengine.hpp"
#include "rollfac/polyparse.hpp"

using namespace rf;

namespace {

std::vector<MultiPoly> ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  auto A = make_alphabet(vars);
  std::vector<MultiPoly> out;
  for (auto& g : gens) out.push_back(parse_poly(g, A));
  return out;
}

}  // namespace

TEST(GB, FinitePointSet) {
  auto r = gb::run_prime(ideal({"x", "y"}, {"x^2 - y", "y^2 - 1"}), 31991);
  EXPECT_EQ(r.krull_dim, 0);
  EXPECT_EQ(r.degree, 4);
}

TEST(GB, TwistedCubicCone) {
  // affine cone over the twisted cubic: dimension 2, degree 3
  auto g = ideal({"a", "b", "c", "d"}, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  auto r = gb::run_prime(g, 32003);
  EXPECT_EQ(r.krull_dim, 2);
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(gb::two_prime_certify(g, 2, 3).verdict, gb::Verdict::Pass);
  EXPECT_EQ(gb::two_prime_certify(g, 2, 4).verdict, gb::Verdict::Fail);
}

TEST(GB, CompleteIntersectionDegree) {
  // three generic quadrics in four variables: cone over 8 points
  auto g = ideal({"w", "x", "y", "z"}, {"w^2 + x*y - 3*z^2", "x^2 - 2*w*z + y*z", "y^2 + w*x - z*x + 5*w*y"});
  auto r = gb::run_prime(g, 31991);
  EXPECT_EQ(r.krull_dim, 1);
  EXPECT_EQ(r.degree, 8);
}

TEST(GB, BadPrimeReported) {
  auto g = ideal({"x"}, {"x - 1/31991"});
  EXPECT_FALSE(gb::run_prime(g, 31991).ok);
  EXPECT_TRUE(gb::run_prime(g, 32003).ok);
}

TEST(GB, FieldInverse) {
  EXPECT_EQ(static_cast<uint64_t>(fp_inv(3, 7)) * 3 % 7, 1u);
}
