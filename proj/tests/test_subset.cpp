#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "shr/subset.hpp"

using shr::Subset;

TEST(Subset, MembershipAndSize) {
  Subset s{0, 3, 5};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  s.erase(3);
  EXPECT_EQ(s, (Subset{0, 5}));
  EXPECT_EQ(s.front(), 0u);
  EXPECT_EQ(s.members(), (std::vector<shr::Element>{0, 5}));
}

TEST(Subset, SetAlgebra) {
  const Subset a{0, 1, 2}, b{2, 3};
  EXPECT_EQ(a | b, (Subset{0, 1, 2, 3}));
  EXPECT_EQ(a & b, (Subset{2}));
  EXPECT_EQ(a - b, (Subset{0, 1}));
  EXPECT_TRUE((Subset{1, 2}).subset_of(a));
  EXPECT_TRUE((Subset{1, 2}).proper_subset_of(a));
  EXPECT_FALSE(a.proper_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((Subset{0}).intersects(Subset{1}));
}

TEST(Subset, FullCarrier) {
  EXPECT_EQ(Subset::full(3), (Subset{0, 1, 2}));
  EXPECT_EQ(Subset::full(64).size(), 64u);
  EXPECT_EQ(Subset::full(64).front(), 0u);
}

TEST(Subset, CanonicalOrderIsSizeThenLexicographic) {
  std::vector<Subset> sets{{1, 2}, {0, 2}, {3}, {0, 1, 2}, {0}, {0, 1}, {2, 3}};
  std::sort(sets.begin(), sets.end(), shr::CanonicalLess{});
  const std::vector<Subset> expected{{0}, {3}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {0, 1, 2}};
  EXPECT_EQ(sets, expected);
}

TEST(Subset, CanonicalOrderMatchesSortedMemberLists) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Subset a = Subset::from_mask(rng() & 0xffff);
    const Subset b = Subset::from_mask(rng() & 0xffff);
    const auto ma = a.members(), mb = b.members();
    const bool expected = ma.size() != mb.size() ? ma.size() < mb.size() : ma < mb;
    EXPECT_EQ(shr::canonical_less(a, b), expected);
  }
}
