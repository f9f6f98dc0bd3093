#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wmetric/cut.hpp"
#include "wmetric/error.hpp"

using namespace wmetric;
using namespace wmetric::testing;

TEST(Cut, PrincipalCutsAddLikeElements) {
  auto m = rationals();
  const Cut s = completion_add(Cut::principal(m, q("1/2")), Cut::principal(m, q("1/3")));
  ASSERT_TRUE(s.value());
  EXPECT_EQ(*s.value(), q("5/6"));
}

TEST(Cut, SqrtTwoStreamDoubles) {
  auto m = rationals();
  const Cut a = sqrt_cut(m, 2);
  const Cut s = completion_add(a, a);
  for (std::uint64_t n = 0; n < 4; ++n) EXPECT_EQ(s.bound(n), m->add(a.bound(n), a.bound(n)));
  EXPECT_EQ(a.bound(1), q("17/12"));
  EXPECT_EQ(s.bound(2), q("577/204"));
  for (const auto& g : grid()) EXPECT_EQ(cut_above(s, g), below_sqrt_sum(g, 2, 2)) << g;
}

TEST(Cut, IdentityAndTop) {
  auto m = rationals();
  const Cut zero = Cut::principal(m, m->zero());
  const Cut a = sqrt_cut(m, 3);
  const Cut s = completion_add(zero, a);
  for (std::uint64_t n = 0; n < 5; ++n) EXPECT_EQ(s.bound(n), a.bound(n));
  const Cut top = Cut::generated(m, {});
  EXPECT_EQ(*top.value(), m->top());
  EXPECT_EQ(*completion_add(top, Cut::principal(m, q("1"))).value(), m->top());
}

TEST(Cut, FinitePrincipalCutsExhaustive) {
  for (auto m : {chain4(), Monoid::finite_table({"0"}, {{0}})}) {
    const auto el = m->elements();
    for (const auto& a : el) {
      const Cut ca = Cut::principal(m, a);
      EXPECT_EQ(*completion_add(Cut::principal(m, m->zero()), ca).value(), a);
      for (const auto& b : el) {
        const Cut cb = Cut::principal(m, b);
        EXPECT_EQ(*completion_add(ca, cb).value(), m->add(a, b));
        EXPECT_EQ(*completion_add(ca, cb).value(), *completion_add(cb, ca).value());
        for (const auto& c : el) {
          const Cut cc = Cut::principal(m, c);
          EXPECT_EQ(*completion_add(completion_add(ca, cb), cc).value(),
                    *completion_add(ca, completion_add(cb, cc)).value());
          if (m->leq(a, b)) {
            EXPECT_NE(*completion_add(ca, cc).compare(completion_add(cb, cc)), std::strong_ordering::greater);
          }
        }
      }
    }
  }
}

TEST(Cut, GeneratedCutsUsePairwiseSums) {
  auto m = chain4();
  const auto one = m->parse_literal("1");
  const auto two = m->parse_literal("2");
  const Cut a = Cut::generated(m, {two, one});
  EXPECT_EQ(*a.value(), one);
  EXPECT_EQ(*completion_add(a, a).value(), two);
}

TEST(Cut, RandomStreamCutsSandwich) {
  auto m = rationals();
  std::mt19937_64 rng(2024);
  const auto g = grid();
  for (int round = 0; round < 100; ++round) {
    const Rational r1 = random_nonsquare(rng);
    const Rational r2 = random_nonsquare(rng);
    const Cut a = sqrt_cut(m, r1);
    const Cut b = sqrt_cut(m, r2);
    const Cut ab = completion_add(a, b);
    const Cut ba = completion_add(b, a);
    for (const auto& x : g) {
      const bool expect = below_sqrt_sum(x, r1, r2);
      ASSERT_EQ(cut_above(ab, x), expect) << r1 << " " << r2 << " " << x;
      ASSERT_EQ(cut_above(ba, x), expect);
    }
  }
}

TEST(Cut, MixedInstancesRejected) {
  try {
    completion_add(Cut::principal(rationals(), q("1")), Cut::principal(chain4(), chain4()->zero()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedInstances);
  }
}

TEST(Embedding, IdentityOnFiniteChain) {
  auto m = chain4();
  auto j = embed_into_complete(m, m, [](const DistanceValue& v) { return v; }, m->elements());
  for (const auto& a : m->elements()) EXPECT_EQ(*j(Cut::principal(m, a)).value(), a);
}

TEST(Embedding, ChainIntoRationalsBreaksAddition) {
  // {0,1,top} with clamped addition has 1+1 = top, but 1+1 = 2 in the rationals.
  auto base = Monoid::finite_table({"0", "1", "top"}, clamped_chain(3));
  auto target = rationals();
  auto map = [](const DistanceValue& v) -> DistanceValue {
    switch (v.table_index()) {
      case 0: return ExtRational(0);
      case 1: return ExtRational(1);
      default: return ExtRational::top();
    }
  };
  try {
    embed_into_complete(base, target, map, base->elements());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEmbedding);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"1", "1"}));
  }
}

TEST(Embedding, MaxChainIntoReversedOrdinal) {
  // {0,1,top} with a+b = max embeds into ReversedOrdinal(w): 0->d(w), 1->d(1), top->d(0).
  auto base = Monoid::finite_table({"0", "1", "top"}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  ASSERT_TRUE(check_monoid_axioms(*base).passed);
  auto target = Monoid::reversed_ordinal(Ordinal::omega());
  auto map = [target](const DistanceValue& v) -> DistanceValue {
    switch (v.table_index()) {
      case 0: return target->zero();
      case 1: return target->at_ordinal(Ordinal::finite(1));
      default: return target->top();
    }
  };
  auto j = embed_into_complete(base, target, map, base->elements());
  for (const auto& a : base->elements()) {
    EXPECT_EQ(*j(Cut::principal(base, a)).value(), map(a));
    // Any extension agreeing on generators agrees on the generated cut.
    EXPECT_EQ(*j(Cut::generated(base, {a, base->top()})).value(), map(a));
  }
}

TEST(Embedding, DyadicStreamAgreesWithTargetCut) {
  auto m = rationals();
  auto j = embed_into_complete(m, m, [](const DistanceValue& v) { return v; }, {q("0"), q("1/2"), q("1/4"), q("3")});
  const Cut c = sqrt_cut(m, 2);
  const Cut image = j(c);
  for (const auto& x : grid()) EXPECT_EQ(cut_above(image, x), cut_above(c, x));
}
