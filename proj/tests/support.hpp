#pragma once

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <random>

#include "wmetric/initial_sequence.hpp"
#include "wmetric/io.hpp"
#include "wmetric/monoid.hpp"
#include "wmetric/space.hpp"

namespace wmetric {

inline std::ostream& operator<<(std::ostream& os, const Ordinal& o) { return os << o.to_string(); }

}  // namespace wmetric

namespace wmetric::testing {

inline std::filesystem::path data_dir() { return WMETRIC_DATA_DIR; }
inline std::filesystem::path bad_data_dir() { return WMETRIC_BAD_DATA_DIR; }

using IntTable = std::vector<std::vector<std::uint32_t>>;

// Chain 0 < 1 < ... < n-1 with addition clamped at the top.
inline IntTable clamped_chain(std::uint32_t n) {
  IntTable t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = std::min(i + j, n - 1);
  }
  return t;
}

inline MonoidPtr chain4() { return Monoid::finite_table({"0", "1", "2", "top"}, clamped_chain(4)); }

inline MonoidPtr rationals() { return Monoid::extended_rational(); }

inline DistanceValue q(const std::string& text) { return ExtRational::parse(text); }

// Random finite space over the rationals: positive asymmetric weights
// k/4 (k in 1..8) closed under shortest paths, so the triangle law holds.
inline std::shared_ptr<const FiniteSpace> random_space(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) d[x][y] = Rational(static_cast<long long>(1 + rng() % 8), 4);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) d[x][y] = std::min(d[x][y], Rational(d[x][k] + d[k][y]));
  std::vector<std::string> names;
  std::vector<std::vector<DistanceValue>> matrix(n);
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back("p" + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) matrix[x].push_back(ExtRational(d[x][y]));
  }
  return FiniteSpace::create(rationals(), names, matrix);
}

// Random space on which `map` is non-expanding: the pointwise max over
// k <= 2n of a random quasi-metric pulled back along map^k.
inline std::shared_ptr<const FiniteSpace> random_space_for(std::mt19937_64& rng, const std::vector<std::size_t>& map) {
  const std::size_t n = map.size();
  auto base = random_space(rng, n);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
  std::vector<std::size_t> it(n);
  for (std::size_t x = 0; x < n; ++x) it[x] = x;
  for (std::size_t k = 0; k <= 2 * n; ++k) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) d[x][y] = std::max(d[x][y], base->matrix()[it[x]][it[y]].rational().value());
    for (auto& v : it) v = map[v];
  }
  std::vector<std::vector<DistanceValue>> matrix(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) matrix[x].push_back(ExtRational(d[x][y]));
  return FiniteSpace::create(rationals(), base->names(), matrix);
}

inline std::vector<std::size_t> random_map(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> f(n);
  for (auto& v : f) v = rng() % n;
  return f;
}

// alpha(k) = scale * 4^-k.
inline InitialSequence scaled_alpha(const Rational& scale) {
  return InitialSequence(rationals(), Ordinal::omega(), 4, [scale](const Ordinal& i) -> DistanceValue {
    Rational v = scale;
    for (std::uint64_t k = 0; k < i.finite_value(); ++k) v /= 4;
    return ExtRational(v);
  });
}

// Random eventually constant Cauchy sequence: a prefix of length < 4
// (rejection-sampled against the Cauchy bound), then a constant tail.
inline CauchySequence random_eventually_constant(std::mt19937_64& rng, const std::shared_ptr<const FiniteSpace>& space,
                                                 const InitialSequence& alpha) {
  for (;;) {
    const std::size_t len = 1 + rng() % 4;
    std::vector<Point> prefix;
    for (std::size_t i = 0; i < len; ++i) prefix.push_back(space->point(rng() % space->size()));
    auto seq = CauchySequence::eventually_constant(space, alpha, prefix);
    if (seq.check_bound(len + 1).passed) return seq;
  }
}

}  // namespace wmetric::testing
