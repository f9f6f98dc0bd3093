#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wmetric/error.hpp"
#include "wmetric/initial_sequence.hpp"

using namespace wmetric;
using namespace wmetric::testing;

TEST(MonoidLaws, ClampedChainPasses) {
  auto m = chain4();
  EXPECT_TRUE(check_monoid_axioms(*m).passed);
  EXPECT_FALSE(oracle_first_violation(clamped_chain(4)).has_value());
}

TEST(MonoidLaws, SingletonPasses) {
  auto m = Monoid::finite_table({"0"}, {{0}});
  EXPECT_TRUE(check_monoid_axioms(*m).passed);
}

TEST(MonoidLaws, AlteredOnePlusTwoFailsMonotonicity) {
  IntTable t = clamped_chain(4);
  t[1][2] = 1;
  auto m = Monoid::finite_table(names4(), t);
  const LawReport r = check_monoid_axioms(*m);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.law, "monotonicity");
  const auto expect = oracle_first_violation(t);
  ASSERT_TRUE(expect);
  EXPECT_EQ(expect->law, "monotonicity");
  std::vector<std::string> w;
  for (auto k : expect->witness) w.push_back(names4()[k]);
  EXPECT_EQ(r.witness, w);
  EXPECT_EQ(r.witness, (std::vector<std::string>{"1", "2", "1"}));
}

TEST(MonoidLaws, MutationsFailWithOracleWitness) {
  std::size_t failing = 0;
  for (const auto& mu : kMutations) {
    IntTable t = clamped_chain(4);
    t[mu.i][mu.j] = mu.value;
    auto m = Monoid::finite_table(names4(), t);
    const LawReport r = check_monoid_axioms(*m);
    const auto expect = oracle_first_violation(t);
    ASSERT_TRUE(expect.has_value()) << mu.i << "," << mu.j;
    ASSERT_EQ(r.passed, !expect.has_value()) << mu.i << "," << mu.j;
    if (!expect) continue;
    ++failing;
    EXPECT_EQ(r.law, expect->law) << mu.i << "," << mu.j;
    if (expect->law == "meet-distributivity") {
      EXPECT_EQ(r.witness.front(), names4()[expect->witness[0]]);
    } else {
      std::vector<std::string> w;
      for (auto k : expect->witness) w.push_back(names4()[k]);
      EXPECT_EQ(r.witness, w) << mu.i << "," << mu.j;
    }
  }
  EXPECT_GE(failing, 12u);
}

TEST(MonoidLaws, RandomTablesAgreeWithOracle) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::uint32_t n = 2 + rng() % 4;
    IntTable t = clamped_chain(n);
    const int edits = static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) t[rng() % n][rng() % n] = static_cast<std::uint32_t>(rng() % n);
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    auto m = Monoid::finite_table(names, t);
    const auto r = check_monoid_axioms(*m);
    const auto expect = oracle_first_violation(t);
    ASSERT_EQ(r.passed, !expect.has_value());
    if (expect) EXPECT_EQ(r.law, expect->law);
  }
}

TEST(MonoidLaws, MalformedTables) {
  EXPECT_THROW(Monoid::finite_table({}, {}), Error);
  EXPECT_THROW(Monoid::finite_table({"0", "0"}, {{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(Monoid::finite_table({"0", "1"}, {{0, 1}}), Error);
  EXPECT_THROW(Monoid::finite_table({"0", "1"}, {{0, 1}, {1, 5}}), Error);
  EXPECT_THROW(check_monoid_axioms(*rationals()), Error);
}

TEST(MonoidLaws, SampledInstancesPass) {
  EXPECT_TRUE(check_monoid_axioms_sampled(*rationals(), 2000, 1).passed);
  EXPECT_TRUE(check_monoid_axioms_sampled(*Monoid::reversed_ordinal(Ordinal::omega()), 2000, 2).passed);
  EXPECT_TRUE(check_monoid_axioms_sampled(*Monoid::reversed_ordinal(Ordinal::parse("w^2+w*3+5")), 2000, 3).passed);
  EXPECT_TRUE(check_monoid_axioms_sampled(*Monoid::reversed_ordinal(Ordinal::omega_1()), 2000, 4).passed);
}

TEST(Continuity, FiniteChainsAreNotContinuous) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    auto m = Monoid::finite_table(names, clamped_chain(n));
    EXPECT_FALSE(is_continuous_at_zero(*m)) << n;
    EXPECT_EQ(coinitiality(*m), CoinitDescriptor::finite(1));
  }
  EXPECT_TRUE(is_continuous_at_zero(*rationals()));
  EXPECT_TRUE(is_continuous_at_zero(*Monoid::reversed_ordinal(Ordinal::omega())));
  EXPECT_FALSE(is_continuous_at_zero(*Monoid::reversed_ordinal(Ordinal::finite(3))));
}

TEST(Continuity, RationalSpotCheck) {
  // For every sampled q > 0 there is a nonzero pair summing below q.
  auto m = rationals();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const DistanceValue v = m->sample(rng);
    if (m->is_zero(v)) continue;
    const DistanceValue a = m->halve(m->halve(v));
    EXPECT_TRUE(m->less(m->add(a, a), v));
    EXPECT_FALSE(m->is_zero(a));
  }
}

TEST(Coinitiality, Descriptors) {
  EXPECT_EQ(coinitiality(*chain4()), CoinitDescriptor::finite(1));
  EXPECT_EQ(coinitiality(*rationals()), CoinitDescriptor::omega());
  EXPECT_EQ(coinitiality(*Monoid::reversed_ordinal(Ordinal::omega())), CoinitDescriptor::omega());
  EXPECT_EQ(coinitiality(*Monoid::reversed_ordinal(Ordinal::omega_1())), CoinitDescriptor::uncountable());
  // 1/2^n is coinitial against sampled positive rationals.
  auto alpha = InitialSequence::geometric(rationals(), 2);
  std::vector<DistanceValue> probes{q("1/1000"), q("3/7"), q("1/65536"), q("5")};
  EXPECT_TRUE(alpha.check_coinitial(probes, 64).passed);
}

TEST(NiceSequence, RationalExample) {
  auto alpha = nice_initial_sequence(rationals(), 4, Ordinal::omega());
  const std::vector<std::string> expect{"1", "1/4", "1/16", "1/64", "1/256"};
  for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_EQ(alpha(k), q(expect[k])) << k;
}

TEST(NiceSequence, ReversedOmegaExample) {
  auto m = Monoid::reversed_ordinal(Ordinal::omega());
  auto alpha = nice_initial_sequence(m, 4, Ordinal::omega());
  for (std::uint64_t k = 0; k < 5; ++k) EXPECT_EQ(alpha(k), m->at_ordinal(Ordinal::finite(k + 1)));
}

TEST(NiceSequence, FiniteChainHasNone) {
  try {
    nice_initial_sequence(chain4(), 4, Ordinal::omega());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotContinuousAtZero);
  }
}

TEST(NiceSequence, NicenessHoldsExactly) {
  for (std::uint64_t factor : {2u, 3u, 4u, 7u}) {
    auto alpha = nice_initial_sequence(rationals(), factor, Ordinal::omega());
    auto m = rationals();
    for (std::uint64_t k = 0; k < 64; ++k) {
      EXPECT_TRUE(m->leq(m->multiply(factor, alpha(k + 1)), alpha(k)));
      EXPECT_TRUE(m->less(alpha(k + 1), alpha(k)));
      EXPECT_FALSE(m->is_zero(alpha(k)));
    }
  }
  auto w2 = Monoid::reversed_ordinal(Ordinal::parse("w^2"));
  EXPECT_TRUE(nice_initial_sequence(w2, 4, Ordinal::omega()).check_nice(64).passed);
}

TEST(NiceSequence, UncountableClosedForm) {
  auto m = Monoid::reversed_ordinal(Ordinal::omega_1());
  auto alpha = nice_initial_sequence(m, 4, Ordinal::omega_1());
  EXPECT_EQ(alpha(0), m->at_ordinal(Ordinal::finite(1)));
  EXPECT_EQ(alpha.at(Ordinal::omega()), m->at_ordinal(Ordinal::omega()));
  EXPECT_EQ(alpha.at(Ordinal::parse("w+2")), m->at_ordinal(Ordinal::parse("w+3")));
  EXPECT_THROW(nice_initial_sequence(rationals(), 4, Ordinal::omega_1()), Error);
}
