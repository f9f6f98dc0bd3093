#include <benchmark/benchmark.h>

#include <random>

#include "wmetric/cauchy.hpp"
#include "wmetric/dynsys.hpp"
#include "wmetric/initial_sequence.hpp"
#include "wmetric/monoid.hpp"
#include "wmetric/treespace.hpp"

using namespace wmetric;

namespace {

MonoidPtr clamped_chain(std::uint32_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = std::min(i + j, n - 1);
  }
  return Monoid::finite_table(names, t);
}

// Cycle of length n on the discrete unit-distance space: no fixed point.
DynSystem cycle_system(std::size_t n) {
  auto m = Monoid::extended_rational();
  std::vector<std::string> names;
  std::vector<std::vector<DistanceValue>> d(n);
  std::vector<std::size_t> f(n);
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("p" + std::to_string(x));
    f[x] = (x + 1) % n;
    for (std::size_t y = 0; y < n; ++y) d[x].push_back(ExtRational(Rational(x == y ? 0 : 1)));
  }
  return DynSystem::finite(FiniteSpace::create(m, names, d), f, nice_initial_sequence(m, 4, Ordinal::omega()));
}

}  // namespace

static void BM_MonoidLawsExhaustive(benchmark::State& state) {
  auto m = clamped_chain(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_monoid_axioms(*m));
}
BENCHMARK(BM_MonoidLawsExhaustive)->Arg(4)->Arg(8)->Arg(16);

static void BM_MonoidLawsSampled(benchmark::State& state) {
  auto m = Monoid::reversed_ordinal(Ordinal::parse("w^2"));
  for (auto _ : state) benchmark::DoNotOptimize(check_monoid_axioms_sampled(*m, state.range(0), 1));
}
BENCHMARK(BM_MonoidLawsSampled)->Arg(100)->Arg(1000);

static void BM_DecideCycle(benchmark::State& state) {
  auto sys = cycle_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_fixed_point(sys, 8, 64));
}
BENCHMARK(BM_DecideCycle)->Arg(2)->Arg(8)->Arg(32);

static void BM_DecideBinaryTree(benchmark::State& state) {
  auto alpha = InitialSequence::geometric(Monoid::extended_rational(), 4);
  auto sys = tree_system(std::make_shared<BinaryTree>(), alpha, alpha);
  const auto depth = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_fixed_point(sys, depth, 64));
}
BENCHMARK(BM_DecideBinaryTree)->Arg(4)->Arg(8);

static void BM_TreeDistance(benchmark::State& state) {
  auto s = tree_metric(std::make_shared<BinaryTree>(), InitialSequence::geometric(Monoid::extended_rational(), 4), true);
  std::mt19937_64 rng(1);
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 256; ++i) pairs.emplace_back(*s->enumerate(rng() % 1000), *s->enumerate(rng() % 1000));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(s->distance(x, y));
  }
}
BENCHMARK(BM_TreeDistance);

static void BM_SeqDistanceCollapse(benchmark::State& state) {
  auto s = tree_metric(std::make_shared<BinaryTree>(), InitialSequence::geometric(Monoid::extended_rational(), 4), true);
  auto alpha = InitialSequence::geometric(Monoid::extended_rational(), 4);
  auto p = *s->representative(s->path_point(PathRep::make("", "0")), alpha);
  auto q = *s->representative(s->path_point(PathRep::make("0001", "0")), alpha);
  for (auto _ : state) benchmark::DoNotOptimize(seq_distance(p, q, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SeqDistanceCollapse)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
