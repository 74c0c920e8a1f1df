#include <gtest/gtest.h>

#include "rollfac/gbengine.hpp"
#include "rollfac/hyperell.hpp"

using namespace rf;

TEST(Hyperell, RootPointsArePowers) {
  auto d = RootData::from_roots({Rat(0), Rat(1), Rat(-1), Rat(2), Rat(3)});
  auto sys = root_system(d);
  auto pt = root_solution(d, 3);  // alpha = 2
  ASSERT_EQ(pt.xi.size(), 4u);
  EXPECT_EQ(pt.xi, (std::vector<Rat>{1, 2, 4, 8}));
  ASSERT_TRUE(pt.rho);
  EXPECT_TRUE(satisfies(sys, pt.xi, *pt.rho));
  EXPECT_TRUE(verify_rank(pt.xi, pi_values(sys, pt.xi)));
}

TEST(Hyperell, PairPoints) {
  auto d = RootData::from_roots({Rat(0), Rat(1), Rat(-1), Rat(2), Rat(3)});
  auto sys = root_system(d);
  auto pt = pair_solution(d, {1, 4});
  ASSERT_TRUE(pt.rho);
  EXPECT_TRUE(satisfies(sys, pt.xi, *pt.rho));
}

TEST(Hyperell, IdentityForAllPairs) {
  auto d = RootData::from_roots({Rat(-2), Rat(-1), Rat(1), Rat(3), Rat(5)});
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) EXPECT_TRUE(l_form_identity(d, i, j)) << i << "," << j;
}

TEST(Hyperell, SquarefreeGivesFinitelyManyPoints) {
  BinaryForm sqf = from_roots({Rat(0), Rat(1), Rat(-1), Rat(2)});
  BinaryForm lin(1, {Rat(-1), Rat(1)});
  BinaryForm dbl = lin * lin * BinaryForm(2, {Rat(1), Rat(0), Rat(1)});
  EXPECT_EQ(gb::run_prime(lemma_system(sqf).pi[0], 31991).krull_dim, 0);
  EXPECT_GT(gb::run_prime(lemma_system(dbl).pi[0], 31991).krull_dim, 0);
}

TEST(Hyperell, IndependentOfN) {
  BinaryForm p(4, {Rat(2), Rat(-1), Rat(0), Rat(3), Rat(1)});
  auto a = hyperell_system(1, 5, p), b = hyperell_system(1, 7, p);
  ASSERT_EQ(a.eqs.size(), b.eqs.size());
  for (size_t i = 0; i < a.eqs.size(); ++i) EXPECT_EQ(a.eqs[i], b.eqs[i].rebase(a.vars));
}
