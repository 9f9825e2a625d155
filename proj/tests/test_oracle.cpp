#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"

using namespace shr;

TEST(Oracle, FixtureGoldens) {
  const auto top2 = oracle::table_of(fixtures::top2());
  const auto kq5 = oracle::table_of(fixtures::kq5());
  const auto kq6 = oracle::table_of(fixtures::kq6());
  EXPECT_EQ(oracle::ideals(top2).size(), 3u);
  EXPECT_EQ(oracle::ideals(kq5).size(), 2u);
  EXPECT_EQ(oracle::ideals(kq6).size(), 4u);
  EXPECT_EQ(oracle::spectrum(top2).size(), 2u);
  EXPECT_EQ(oracle::spectrum(kq5).size(), 1u);
  EXPECT_EQ(oracle::spectrum(kq6).size(), 2u);

  const auto o = oracle::classify(kq6, {0});
  EXPECT_TRUE(o.semiprime);
  EXPECT_FALSE(o.irreducible);
  EXPECT_FALSE(o.prime);
  for (int x : {2, 3}) {
    const auto f = oracle::classify(kq6, {0, x});
    EXPECT_TRUE(f.prime && f.maximal && f.strongly_irreducible);
  }
}

TEST(Oracle, HyperringDefinition) {
  EXPECT_TRUE(oracle::hyperring(oracle::table_of(fixtures::kq5())));
  EXPECT_TRUE(oracle::hyperring(oracle::table_of(fixtures::kq6())));
  EXPECT_FALSE(oracle::hyperring(oracle::table_of(fixtures::top2())));
}

TEST(Oracle, LibraryAgreesOnIdealsAndClassification) {
  for (const auto& s : builtin_corpus()) {
    const auto t = oracle::table_of(s);
    const auto l = enumerate_hyperideals(s);
    std::vector<oracle::Set> lib;
    for (Subset i : l) lib.push_back(oracle::to_set(i));
    auto ref = oracle::ideals(t);
    std::sort(lib.begin(), lib.end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(lib, ref) << s.name();
    for (Subset i : l.proper()) {
      const auto c = classify_ideal(s, l, i);
      const auto f = oracle::classify(t, oracle::to_set(i));
      EXPECT_EQ(c.prime, f.prime) << s.name();
      EXPECT_EQ(c.semiprime, f.semiprime) << s.name();
      EXPECT_EQ(c.irreducible, f.irreducible) << s.name();
      EXPECT_EQ(c.strongly_irreducible, f.strongly_irreducible) << s.name();
      EXPECT_EQ(c.maximal, f.maximal) << s.name();
    }
    EXPECT_EQ(is_canonical_hyperring(s), oracle::hyperring(t)) << s.name();
  }
}

TEST(Oracle, ClosuresOnSeededGeneratingSets) {
  std::mt19937_64 rng(4);
  for (const auto& s : builtin_corpus()) {
    if (s.order() > 8) continue;
    const auto t = oracle::table_of(s);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << s.order()) - 1);
    for (int k = 0; k < 100; ++k) {
      const auto x = Subset::from_mask(pick(rng));
      EXPECT_EQ(oracle::to_set(ideal_generated(s, x)),
                oracle::generated_ideal(t, oracle::to_set(x)))
          << s.name();
      EXPECT_EQ(oracle::to_set(finite_sums_closure(s, x)),
                oracle::finite_sums_stable(t, oracle::to_set(x)))
          << s.name();
    }
  }
}

TEST(Oracle, AxiomWitnessesOfMutations) {
  std::uint64_t seed = 1;
  for (const auto& base : {fixtures::top2(), fixtures::kq5(), fixtures::kq6()})
    for (const auto& m : testing_support::invalid_mutations(base, 20, seed++)) {
      ASSERT_FALSE(m.valid());
      const auto t = oracle::table_of(m);
      for (const auto& v : m.axioms().verdicts) {
        const auto ref = oracle::first_violation(t, std::string(axiom_name(v.axiom)));
        if (v.pass) {
          EXPECT_FALSE(ref.has_value()) << axiom_name(v.axiom);
          continue;
        }
        ASSERT_TRUE(ref.has_value()) << axiom_name(v.axiom);
        std::vector<int> w(v.witness.begin(), v.witness.end());
        EXPECT_EQ(w, *ref) << axiom_name(v.axiom);
      }
    }
}
