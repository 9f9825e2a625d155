#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace shr;

TEST(Catalog, OrderTwoIsComplete) {
  const auto c = catalog(2);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(oracle::catalog_count(2), 6u);
  EXPECT_EQ(catalog(2, {false, true}).size(), 3u);
  EXPECT_EQ(catalog(2, {true, false}).size(), 6u);
  EXPECT_EQ(c.front().name(), "C2_1");
}

TEST(Catalog, OrderOne) {
  const auto c = catalog(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].order(), 1u);
}

TEST(Catalog, OrderThreeMatchesOracleCount) {
  const auto c = catalog(3);
  EXPECT_EQ(c.size(), 88u);
  EXPECT_EQ(oracle::catalog_count(3), 88u);
  EXPECT_EQ(catalog(3, {true, false}).size(), 80u);
  EXPECT_EQ(catalog(3, {false, true}).size(), 23u);
}

TEST(Catalog, EntriesAreValidCanonicalAndDistinct) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::set<TableEncoding> seen;
    for (const auto& s : catalog(k)) {
      EXPECT_TRUE(s.valid()) << s.name();
      EXPECT_EQ(s.zero(), 0u);
      EXPECT_TRUE(canonical_relabel(s).same_tables(s)) << s.name();
      EXPECT_EQ(s.unity(), find_unity(s));
      std::vector<Element> identity(s.order());
      for (Element e = 0; e < s.order(); ++e) identity[e] = e;
      EXPECT_TRUE(seen.insert(detail::encode_permuted(s, identity)).second);
    }
  }
}

TEST(Catalog, RelabellingCollapsesIsomorphs) {
  // Swap the two nonzero elements of KQ5.
  const auto kq5 = fixtures::kq5();
  std::vector<Subset> add(9);
  std::vector<Element> mul(9);
  const Element swap[3] = {0, 2, 1};
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) {
      Subset cell;
      for (Element e : kq5.add(x, y)) cell.insert(swap[e]);
      add[swap[x] * 3 + swap[y]] = cell;
      mul[swap[x] * 3 + swap[y]] = swap[kq5.mul(x, y)];
    }
  const Semihyperring swapped(3, add, mul, 0, swap[*kq5.unity()]);
  ASSERT_TRUE(swapped.valid());
  EXPECT_FALSE(swapped.same_tables(kq5));
  EXPECT_TRUE(canonical_relabel(swapped).same_tables(canonical_relabel(kq5)));
}

TEST(Catalog, Limits) {
  EXPECT_THROW(catalog(0), precondition_error);
  EXPECT_THROW(catalog(5), size_limit_error);
}
