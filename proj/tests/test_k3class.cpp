#include <gtest/gtest.h>

#include "rollfac/k3class.hpp"

using namespace rf;

TEST(Tetragonal, Validation) {
  EXPECT_EQ(validate_tetragonal({6, 5, 5, 7, 7}).verdict, TetraVerdict::ValidGeneral);
  EXPECT_EQ(validate_tetragonal({6, 5, 5, 7, 9}).verdict, TetraVerdict::Invalid);   // sum wrong
  EXPECT_EQ(validate_tetragonal({5, 5, 2, 6, 4}, true).verdict, TetraVerdict::ValidComposed);
  EXPECT_EQ(validate_tetragonal({5, 5, 3, 6, 5}, true).verdict, TetraVerdict::Invalid);  // b2 != 2 e3
  EXPECT_EQ(validate_tetragonal({3, 3, 0, 4, 0}).verdict, TetraVerdict::DelPezzoOrBielliptic);
}

TEST(Labels, Offsets) {
  EXPECT_EQ(offset_label("e", 2), "e+2");
  EXPECT_EQ(offset_label("e", 0), "e");
  EXPECT_EQ(offset_label("2e", -1), "2e-1");
}

TEST(TrigonalK3, TwelveTriples) {
  auto chains = trigonal_k3_enumerate();
  ASSERT_EQ(chains.size(), 3u);
  size_t total = 0;
  for (auto& c : chains) total += c.size();
  EXPECT_EQ(total, 12u);
  EXPECT_FALSE(trigonal_singularity(20, 20, 20).singular);
}

TEST(TetragonalK3, Constraints) {
  for (auto& f : tetragonal_k3_concrete(12)) {
    EXPECT_LE(f.b1, f.b2 + 4);
    if (f.e[0] >= f.b1) EXPECT_LE(f.e[0], f.b1 + 2);
  }
}
