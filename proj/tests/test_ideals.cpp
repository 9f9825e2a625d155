#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace shr;
using testing_support::el;
using testing_support::sub;

namespace {
const Semihyperring& top2() { static const auto s = fixtures::top2(); return s; }
const Semihyperring& kq5() { static const auto s = fixtures::kq5(); return s; }
const Semihyperring& kq6() { static const auto s = fixtures::kq6(); return s; }
}  // namespace

TEST(IdealPredicates, Examples) {
  EXPECT_TRUE(is_left_hyperideal(top2(), {0, 1}));
  EXPECT_FALSE(is_left_hyperideal(top2(), {0, 2}));
  EXPECT_TRUE(is_hyperideal(kq6(), sub(kq6(), {"O", "V"})));
  EXPECT_FALSE(is_hyperideal(kq6(), sub(kq6(), {"O", "U"})));
  EXPECT_TRUE(is_hyperideal(kq5(), sub(kq5(), {"O"})));
  for (const auto* s : {&top2(), &kq5(), &kq6()}) {
    EXPECT_TRUE(is_hyperideal(*s, s->carrier()));
    EXPECT_TRUE(is_left_hyperideal(*s, {s->zero()}));
  }
  EXPECT_THROW(is_hyperideal(kq5(), {}), empty_operand_error);
  EXPECT_THROW(is_left_hyperideal(kq5(), {}), empty_operand_error);
  EXPECT_THROW(is_right_hyperideal(kq5(), {}), empty_operand_error);
}

TEST(IdealPredicates, Subsemihyperrings) {
  EXPECT_TRUE(is_subsemihyperring(top2(), {0, 2}));
  EXPECT_FALSE(is_subsemihyperring(kq6(), sub(kq6(), {"O", "U"})));
  EXPECT_THROW(is_subsemihyperring(kq6(), {}), empty_operand_error);
  for (Subset i : enumerate_hyperideals(kq6())) EXPECT_TRUE(is_subsemihyperring(kq6(), i));
}

TEST(Enumeration, FixtureLattices) {
  const auto l = enumerate_hyperideals(top2());
  EXPECT_EQ(l.ideals(), (std::vector<Subset>{{0}, {0, 1}, {0, 1, 2}}));
  EXPECT_EQ(enumerate_hyperideals(kq5()).size(), 2u);
  const auto l6 = enumerate_hyperideals(kq6());
  EXPECT_EQ(l6.ideals(), (std::vector<Subset>{sub(kq6(), {"O"}), sub(kq6(), {"O", "V"}),
                                              sub(kq6(), {"O", "W"}), kq6().carrier()}));
  EXPECT_TRUE(l6.leq(0, 3));
  EXPECT_FALSE(l6.leq(1, 2));
  EXPECT_EQ(l6.index_of(sub(kq6(), {"O", "W"})), std::optional<std::size_t>(2));
  EXPECT_FALSE(l6.contains(sub(kq6(), {"O", "U"})));
  EXPECT_EQ(l6.proper().size(), 3u);
}

TEST(Enumeration, CapIsEnforced) {
  const auto big = direct_product(kq5(), kq5());
  EXPECT_THROW(enumerate_hyperideals(big, 8), size_limit_error);
  try {
    enumerate_hyperideals(big, 8);
  } catch (const size_limit_error& e) {
    EXPECT_NE(std::string(e.what()).find("--cap"), std::string::npos);
  }
  EXPECT_NO_THROW(enumerate_hyperideals(big, 9));
}

TEST(Enumeration, OneSidedIdealsOfNoncommutativeStructure) {
  // A catalog structure whose multiplication is not commutative.
  for (const auto& s : catalog(3)) {
    if (s.commutative()) continue;
    const auto lefts = enumerate_left_hyperideals(s);
    const auto rights = enumerate_right_hyperideals(s);
    const auto both = enumerate_hyperideals(s);
    for (Subset i : both) {
      EXPECT_NE(std::find(lefts.begin(), lefts.end(), i), lefts.end());
      EXPECT_NE(std::find(rights.begin(), rights.end(), i), rights.end());
    }
    for (Subset i : lefts) EXPECT_TRUE(is_left_hyperideal(s, i));
    for (Subset i : rights) EXPECT_TRUE(is_right_hyperideal(s, i));
  }
}

TEST(Generated, Examples) {
  EXPECT_EQ(ideal_generated(kq6(), sub(kq6(), {"W"})), sub(kq6(), {"O", "W"}));
  EXPECT_EQ(ideal_generated(kq5(), sub(kq5(), {"A"})), kq5().carrier());
  EXPECT_EQ(ideal_generated(kq5(), {0}), (Subset{0}));
  EXPECT_THROW(ideal_generated(kq5(), {}), empty_operand_error);
}

TEST(Principal, Examples) {
  EXPECT_EQ(principal_right(top2(), 1), (Subset{0, 1}));
  EXPECT_EQ(principal_right(kq5(), el(kq5(), "A")), kq5().carrier());
  EXPECT_EQ(principal_right(kq6(), el(kq6(), "W")), sub(kq6(), {"O", "W"}));
  EXPECT_EQ(principal_left(kq6(), el(kq6(), "W")), sub(kq6(), {"O", "W"}));
  EXPECT_THROW(principal_right(fixtures::zero1(), 0), hypothesis_error);
  EXPECT_THROW(principal_left(fixtures::zero1(), 0), hypothesis_error);
}

TEST(Sum, Examples) {
  EXPECT_EQ(ideal_sum(kq6(), sub(kq6(), {"O", "V"}), sub(kq6(), {"O", "W"})), kq6().carrier());
  EXPECT_EQ(ideal_sum(top2(), {0}, {0, 1}), (Subset{0, 1}));
  const auto l = enumerate_hyperideals(kq6());
  for (Subset i : l) EXPECT_EQ(ideal_sum(kq6(), i, {0}), i);
  EXPECT_THROW(ideal_sum(kq6(), sub(kq6(), {"O", "U"}), {0}), precondition_error);
}

TEST(Product, Examples) {
  EXPECT_EQ(ideal_product(kq6(), sub(kq6(), {"O", "V"}), sub(kq6(), {"O", "W"})), (Subset{0}));
  EXPECT_EQ(ideal_product(top2(), {0, 1}, {0, 1}), (Subset{0, 1}));
  for (Subset i : enumerate_hyperideals(kq6())) EXPECT_EQ(ideal_product(kq6(), i, {0}), (Subset{0}));
  EXPECT_THROW(ideal_product(kq6(), sub(kq6(), {"U"}), {0}), precondition_error);
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(left_annihilator(top2(), {1}), (Subset{0}));
  EXPECT_EQ(left_annihilator(kq6(), sub(kq6(), {"O", "W"})), sub(kq6(), {"O", "V"}));
  EXPECT_EQ(right_annihilator(kq6(), sub(kq6(), {"O", "W"})), sub(kq6(), {"O", "V"}));
  for (const auto* s : {&top2(), &kq5(), &kq6()})
    EXPECT_EQ(left_annihilator(*s, {s->zero()}), s->carrier());
  EXPECT_THROW(left_annihilator(kq6(), {}), empty_operand_error);
}

TEST(SubsemihyperringPlusIdeal, Examples) {
  EXPECT_EQ(subsemihyperring_plus_ideal(top2(), {0, 2}, {0, 1}), top2().carrier());
  const Subset i = sub(kq6(), {"O", "V"});
  EXPECT_EQ(subsemihyperring_plus_ideal(kq6(), i, i), i);
  EXPECT_EQ(subsemihyperring_plus_ideal(kq6(), sub(kq6(), {"O", "W"}), i), kq6().carrier());
  EXPECT_THROW(subsemihyperring_plus_ideal(kq6(), sub(kq6(), {"O", "U"}), i), precondition_error);
  EXPECT_TRUE(is_hyperideal_within(top2(), {0, 2}, {0}));
  EXPECT_FALSE(is_hyperideal_within(top2(), {0, 2}, {0, 1}));
}

TEST(LatticeProperties, HoldOnConstructorCorpus) {
  for (const auto& s : constructor_corpus()) {
    const auto l = enumerate_hyperideals(s);
    ASSERT_TRUE(l.contains({s.zero()})) << s.name();
    ASSERT_TRUE(l.contains(s.carrier())) << s.name();
    for (Subset i : l)
      for (Subset j : l) {
        EXPECT_TRUE(l.contains(i & j));
        const Subset sum = ideal_sum(s, i, j);
        EXPECT_EQ(sum, l.meet_above(i | j));
        EXPECT_TRUE(ideal_product(s, i, j).subset_of(i & j));
      }
    if (s.has_unity()) {
      const auto rights = enumerate_right_hyperideals(s);
      for (Element a = 0; a < s.order(); ++a) {
        const Subset r = principal_right(s, a);
        for (Subset h : rights)
          if (h.contains(a)) EXPECT_TRUE(r.subset_of(h));
        if (s.commutative()) EXPECT_EQ(ideal_generated(s, Subset::singleton(a)), r);
      }
    }
  }
}
