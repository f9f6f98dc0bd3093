#include <gtest/gtest.h>

#include <tuple>

#include "wmetric/error.hpp"
#include "wmetric/ordinal.hpp"
#include "wmetric/rational.hpp"

using namespace wmetric;

namespace {

// Oracle for ordinals below w^3: coefficient triple (c2, c1, c0).
using Triple = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

Ordinal from_triple(const Triple& t) {
  Ordinal o;
  o = o + Ordinal::omega_power(2, std::get<0>(t) ? std::get<0>(t) : 1);
  if (!std::get<0>(t)) o = Ordinal();
  if (std::get<1>(t)) o = o + Ordinal::omega_power(1, std::get<1>(t));
  return o + Ordinal::finite(std::get<2>(t));
}

// Ordinal sum on triples: the left part is absorbed below the leading term
// of the right operand.
Triple add_triple(const Triple& a, const Triple& b) {
  if (std::get<0>(b)) return {std::get<0>(a) + std::get<0>(b), std::get<1>(b), std::get<2>(b)};
  if (std::get<1>(b)) return {std::get<0>(a), std::get<1>(a) + std::get<1>(b), std::get<2>(b)};
  return {std::get<0>(a), std::get<1>(a), std::get<2>(a) + std::get<2>(b)};
}

}  // namespace

TEST(Ordinal, ParseAndPrint) {
  EXPECT_EQ(Ordinal::parse("0"), Ordinal());
  EXPECT_EQ(Ordinal::parse("7"), Ordinal::finite(7));
  EXPECT_EQ(Ordinal::parse("omega"), Ordinal::omega());
  EXPECT_EQ(Ordinal::parse("w^2+w*3+5").to_string(), "w^2+w*3+5");
  EXPECT_EQ(Ordinal::parse("3+w"), Ordinal::omega());
  EXPECT_TRUE(Ordinal::parse("omega-1").is_symbolic());
  EXPECT_EQ(Ordinal::parse("Omega"), Ordinal::omega_1());
  EXPECT_THROW(Ordinal::parse("w^"), Error);
  EXPECT_THROW(Ordinal::parse("banana"), Error);
}

TEST(Ordinal, ArithmeticMatchesTripleOracle) {
  for (std::uint64_t a2 = 0; a2 < 3; ++a2)
    for (std::uint64_t a1 = 0; a1 < 3; ++a1)
      for (std::uint64_t a0 = 0; a0 < 3; ++a0)
        for (std::uint64_t b2 = 0; b2 < 3; ++b2)
          for (std::uint64_t b1 = 0; b1 < 3; ++b1)
            for (std::uint64_t b0 = 0; b0 < 3; ++b0) {
              const Triple a{a2, a1, a0}, b{b2, b1, b0};
              EXPECT_EQ(from_triple(a) + from_triple(b), from_triple(add_triple(a, b)));
              EXPECT_EQ(from_triple(a) < from_triple(b), a < b);
              EXPECT_EQ(from_triple(a).natural_sum(from_triple(b)),
                        from_triple(Triple{a2 + b2, a1 + b1, a0 + b0}));
            }
}

TEST(Ordinal, Cofinality) {
  EXPECT_EQ(Ordinal().cofinality(), Ordinal::Cofinality::Zero);
  EXPECT_EQ(Ordinal::finite(4).cofinality(), Ordinal::Cofinality::One);
  EXPECT_EQ(Ordinal::parse("w^2").cofinality(), Ordinal::Cofinality::Omega);
  EXPECT_EQ(Ordinal::omega_1().cofinality(), Ordinal::Cofinality::Uncountable);
  EXPECT_EQ(Ordinal::parse("w^2").cofinal_entry(2), Ordinal::parse("w*3"));
  EXPECT_EQ(Ordinal::parse("w*2").cofinal_entry(0), Ordinal::parse("w+1"));
  EXPECT_TRUE(Ordinal::parse("w^5*2+w") < Ordinal::omega_1());
}

TEST(Ordinal, SuccessorAndParts) {
  const Ordinal o = Ordinal::parse("w^2+w*3+5");
  EXPECT_EQ(o.successor(), Ordinal::parse("w^2+w*3+6"));
  EXPECT_EQ(o.limit_part(), Ordinal::parse("w^2+w*3"));
  EXPECT_EQ(o.finite_part(), 5u);
  EXPECT_TRUE(Ordinal::parse("w^2").is_limit());
  EXPECT_THROW(Ordinal::omega().finite_value(), Error);
}

TEST(Ordinal, WeightEnumerationIsAscendingAndComplete) {
  for (std::uint64_t w = 0; w < 7; ++w) {
    const auto list = ordinals_of_weight(w);
    for (std::size_t i = 1; i < list.size(); ++i) EXPECT_TRUE(list[i - 1] < list[i]);
    for (const auto& o : list) EXPECT_EQ(o.weight(), w);
  }
  EXPECT_EQ(ordinals_of_weight(0).size(), 1u);
}

TEST(ExtRational, Basics) {
  const ExtRational half = ExtRational::parse("1/2");
  EXPECT_EQ(half + ExtRational::parse("1/3"), ExtRational::parse("5/6"));
  EXPECT_EQ(half + ExtRational::top(), ExtRational::top());
  EXPECT_EQ(ExtRational::parse("top"), ExtRational::top());
  EXPECT_EQ(half.truncated_minus(ExtRational(1)), ExtRational(0));
  EXPECT_EQ(ExtRational::top().truncated_minus(ExtRational(5)), ExtRational::top());
  EXPECT_TRUE(ExtRational(1000000) < ExtRational::top());
  EXPECT_THROW(ExtRational::parse("-1"), Error);
}
