#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "wmetric/completion.hpp"
#include "wmetric/error.hpp"

using namespace wmetric;
using namespace wmetric::testing;

TEST(CauchyCompletion, FiniteSpacesAreTheirOwnCompletion) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    SpacePtr s = random_space(rng, 1 + rng() % 6);
    EXPECT_EQ(cauchy_completion(s), s);
    EXPECT_EQ(s->completeness(), Completeness::Computed);
  }
}

TEST(CauchyCompletion, NonContinuousMonoidLeavesSpaceAlone) {
  const SpaceFile f = load_space(data_dir() / "asym3.spc");
  SpacePtr s = f.space;
  EXPECT_EQ(cauchy_completion(s), s);
}

TEST(CauchyCompletion, LazySpaceWithoutPresentationIsUnresolvable) {
  auto m = rationals();
  SpacePtr s = std::make_shared<FunctionSpace>(
      m, "dyadics", [](std::uint64_t i) { return std::optional<Point>(Point{std::to_string(i)}); },
      [](const Point&) { return true; },
      [m](const Point& a, const Point& b) { return a == b ? m->zero() : DistanceValue(ExtRational(1)); }, true);
  try {
    cauchy_completion(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unresolvable);
  }
}

TEST(ExtendNonexpanding, IdentityAndConstant) {
  std::mt19937_64 rng(4);
  auto s = random_space(rng, 5);
  auto alpha = scaled_alpha(1);
  auto id = extend_nonexpanding([](const Point& p) { return p; }, s, alpha);
  auto c = extend_nonexpanding([s](const Point&) { return s->point(2); }, s, alpha);
  for (const auto& p : s->points()) {
    EXPECT_EQ(id(p), p);
    EXPECT_EQ(c(p), s->point(2));
  }
}

TEST(ExtendNonexpanding, ExpandingMapRejected) {
  auto m = rationals();
  auto s = FiniteSpace::create(m, {"x", "y", "z"},
                               {{q("0"), q("1"), q("2")}, {q("1"), q("0"), q("1")}, {q("2"), q("1"), q("0")}});
  // x -> y, y -> z, z -> x stretches d(x,y) = 1 into d(y,z)... and d(z,x) into d(x,y):
  // the pair (y, z) maps to (z, x) with distance 2 > 1.
  std::vector<std::size_t> f{1, 2, 0};
  try {
    extend_nonexpanding([s, f](const Point& p) { return s->point(f[s->index_of(p)]); }, s, scaled_alpha(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNonExpanding);
    EXPECT_EQ(e.witness(), (std::vector<std::string>{"y", "z"}));
  }
}

TEST(CheckDense, FiniteSpaces) {
  std::mt19937_64 rng(6);
  auto s = random_space(rng, 4);
  auto alpha = scaled_alpha(1);
  EXPECT_EQ(check_dense([](const Point&) { return true; }, s, alpha, 4).verdict, Verdict::Yes);
  const auto r = check_dense([](const Point& p) { return p.id != "p2"; }, s, alpha, 4);
  EXPECT_EQ(r.verdict, Verdict::No);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->id, "p2");
}
