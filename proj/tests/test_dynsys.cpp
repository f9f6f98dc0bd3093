#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wmetric/cauchy.hpp"
#include "wmetric/dynsys.hpp"
#include "wmetric/error.hpp"

using namespace wmetric;
using namespace wmetric::testing;

namespace {

InitialSequence nice_rational() { return nice_initial_sequence(rationals(), 4, Ordinal::omega()); }

std::shared_ptr<const FiniteSpace> swap_space() {
  return FiniteSpace::create(rationals(), {"x", "y"}, {{q("0"), q("1")}, {q("1"), q("0")}});
}

}  // namespace

TEST(CheckNonexpanding, Examples) {
  auto s = swap_space();
  auto swap = DynSystem::finite(s, {1, 0}, nice_rational());
  EXPECT_TRUE(check_nonexpanding(swap, dense_pairs(swap, 8)).passed);
  auto id = DynSystem::finite(s, {0, 1}, nice_rational());
  EXPECT_TRUE(check_nonexpanding(id, dense_pairs(id, 8)).passed);

  auto ones = FiniteSpace::create(rationals(), {"a", "b", "c"},
                                  {{q("0"), q("1"), q("1")}, {q("1"), q("0"), q("1")}, {q("1"), q("1"), q("0")}});
  auto collapse = DynSystem::finite(ones, {1, 1, 1}, nice_rational());
  EXPECT_TRUE(check_nonexpanding(collapse, dense_pairs(collapse, 8)).passed);

  auto line = FiniteSpace::create(rationals(), {"x", "y", "z"},
                                  {{q("0"), q("1"), q("3")}, {q("1"), q("0"), q("2")}, {q("3"), q("2"), q("0")}});
  auto shift = DynSystem::finite(line, {1, 2, 2}, nice_rational());
  const LawReport r = check_nonexpanding(shift, dense_pairs(shift, 8));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.witness, (std::vector<std::string>{"x", "y"}));
}

TEST(CheckNonexpanding, AgreesWithOracle) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 5;
    auto s = random_space(rng, n);
    auto f = random_map(rng, n);
    auto sys = DynSystem::finite(s, f, nice_rational());
    EXPECT_EQ(check_nonexpanding(sys, dense_pairs(sys, 100)).passed, oracle_nonexpanding(*s, f));
  }
}

TEST(LevelNodes, IdentityGivesConstantChains) {
  // Points further apart than alpha(0) + alpha(1) = 5/4, so no node can switch.
  auto s = FiniteSpace::create(rationals(), {"x", "y"}, {{q("0"), q("2")}, {q("2"), q("0")}});
  auto id = DynSystem::finite(s, {0, 1}, nice_rational());
  auto nodes = level_nodes(id, 3, 8);
  ASSERT_EQ(nodes.size(), 2u);
  for (const auto& n : nodes) {
    ASSERT_EQ(n.entries.size(), 3u);
    EXPECT_EQ(n.entries[0], n.entries[1]);
    EXPECT_EQ(n.entries[1], n.entries[2]);
  }
}

TEST(LevelNodes, SwapSystem) {
  auto sys = DynSystem::finite(swap_space(), {1, 0}, nice_rational());
  EXPECT_EQ(level_nodes(sys, 1, 8).size(), 2u);
  EXPECT_TRUE(level_nodes(sys, 2, 8).empty());
}

TEST(DecideFixedPoint, SwapIsCertifiedAtDepthTwo) {
  auto sys = DynSystem::finite(swap_space(), {1, 0}, nice_rational());
  const auto out = decide_fixed_point(sys, 4, 64);
  EXPECT_EQ(out.kind, SearchOutcome::Kind::CertifiedNoFixedPoint);
  EXPECT_EQ(out.depth, 2u);
}

TEST(DecideFixedPoint, RandomSystemsMatchBruteForce) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + rng() % 8;
    auto f = random_map(rng, n);
    auto s = random_space_for(rng, f);
    ASSERT_TRUE(oracle_nonexpanding(*s, f));
    auto sys = DynSystem::finite(s, f, nice_rational());
    const auto out = decide_fixed_point(sys, 16, 8);
    bool has_fixed = false;
    for (std::size_t x = 0; x < n; ++x) has_fixed |= f[x] == x;
    ASSERT_NE(out.kind, SearchOutcome::Kind::BudgetExhausted);
    EXPECT_EQ(out.kind == SearchOutcome::Kind::FixedPointFound, has_fixed);
    if (out.witness) EXPECT_EQ(f[s->index_of(*out.witness)], s->index_of(*out.witness));
  }
}

TEST(DecideFixedPoint, BudgetErrors) {
  auto sys = DynSystem::finite(swap_space(), {1, 0}, nice_rational());
  try {
    decide_fixed_point(sys, 4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetTooSmall);
  }
  // Width below the point count cannot certify anything.
  EXPECT_EQ(decide_fixed_point(sys, 4, 1).kind, SearchOutcome::Kind::BudgetExhausted);
}

TEST(DecideFixedPoint, WrongCoinitiality) {
  auto m = Monoid::reversed_ordinal(Ordinal::omega_1());
  auto alpha = nice_initial_sequence(m, 4, Ordinal::omega());
  auto s = FiniteSpace::create(m, {"x"}, {{m->zero()}});
  auto sys = DynSystem::finite(s, {0}, alpha);
  try {
    decide_fixed_point(sys, 4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongCoinitiality);
  }
}

TEST(DecideFixedPoint, ReversedOrdinalSpace) {
  const SpaceFile f = load_space(data_dir() / "levels3.spc");
  auto map = resolve_map(load_map(data_dir() / "cycle3.map"), *f.space);
  auto sys = DynSystem::finite(f.space, map, nice_initial_sequence(f.monoid, 4, Ordinal::omega()));
  const auto out = decide_fixed_point(sys, 8, 64);
  EXPECT_EQ(out.kind, SearchOutcome::Kind::FixedPointFound);
  ASSERT_TRUE(out.witness);
  EXPECT_EQ(out.witness->id, "r");
}

TEST(BranchToLimit, ConstantChain) {
  auto s = swap_space();
  auto sys = DynSystem::finite(s, {0, 1}, nice_rational());
  auto seq = branch_to_limit({s->point(1), s->point(1), s->point(1)}, sys);
  EXPECT_EQ(converges_to(seq, s->point(1), 6).verdict, Verdict::Yes);
}

TEST(BranchToLimit, InvalidChain) {
  auto m = rationals();
  auto s = FiniteSpace::create(m, {"x", "y"}, {{q("0"), q("1/2")}, {q("1/2"), q("0")}});
  auto sys = DynSystem::finite(s, {0, 1}, nice_rational());
  // (0,2) is within 1 + 1/16; (1,2) is not: 1/2 > 1/4 + 1/16.
  try {
    branch_to_limit({s->point(0), s->point(0), s->point(1)}, sys);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidChain);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"1", "2"}));
  }
  auto far = FiniteSpace::create(m, {"x", "y"}, {{q("0"), q("2")}, {q("2"), q("0")}});
  auto sys2 = DynSystem::finite(far, {0, 1}, nice_rational());
  try {
    branch_to_limit({far->point(0), far->point(0), far->point(1)}, sys2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"0", "2"}));
  }
}
