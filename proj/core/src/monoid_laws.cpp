#include <algorithm>
#include <random>

#include "wmetric/error.hpp"
#include "wmetric/monoid.hpp"

namespace wmetric {

namespace {

struct LawChecker {
  const Monoid& m;

  std::string f(const DistanceValue& v) const { return m.format(v); }

  LawReport identity(const DistanceValue& a) const {
    if (m.add(m.zero(), a) != a || m.add(a, m.zero()) != a) {
      return LawReport::fail("identity", {f(a)}, "0 + " + f(a) + " = " + f(m.add(m.zero(), a)));
    }
    return LawReport::pass();
  }

  // Witness (c, b, a): a <= b but c + a > c + b (or a + c > b + c).
  LawReport monotonicity(const DistanceValue& c, const DistanceValue& a, const DistanceValue& b) const {
    if (!m.leq(a, b)) return LawReport::pass();
    if (m.less(m.add(c, b), m.add(c, a))) {
      return LawReport::fail("monotonicity", {f(c), f(b), f(a)},
                             f(a) + " <= " + f(b) + " but " + f(c) + "+" + f(a) + " = " + f(m.add(c, a)) + " > " +
                                 f(c) + "+" + f(b) + " = " + f(m.add(c, b)));
    }
    if (m.less(m.add(b, c), m.add(a, c))) {
      return LawReport::fail("monotonicity", {f(c), f(b), f(a)},
                             f(a) + " <= " + f(b) + " but " + f(a) + "+" + f(c) + " = " + f(m.add(a, c)) + " > " +
                                 f(b) + "+" + f(c) + " = " + f(m.add(b, c)));
    }
    return LawReport::pass();
  }

  LawReport commutativity(const DistanceValue& a, const DistanceValue& b) const {
    if (m.add(a, b) != m.add(b, a)) {
      return LawReport::fail("commutativity", {f(a), f(b)},
                             f(a) + "+" + f(b) + " = " + f(m.add(a, b)) + " but " + f(b) + "+" + f(a) + " = " +
                                 f(m.add(b, a)));
    }
    return LawReport::pass();
  }

  LawReport associativity(const DistanceValue& a, const DistanceValue& b, const DistanceValue& c) const {
    const DistanceValue l = m.add(m.add(a, b), c);
    const DistanceValue r = m.add(a, m.add(b, c));
    if (l != r) {
      return LawReport::fail("associativity", {f(a), f(b), f(c)}, "(a+b)+c = " + f(l) + " but a+(b+c) = " + f(r));
    }
    return LawReport::pass();
  }

  // b + meet(A) = meet{a + b : a in A}; A empty means both sides are top.
  LawReport distributivity(const DistanceValue& b, std::span<const DistanceValue> set) const {
    const DistanceValue lhs = m.add(b, m.meet(set));
    std::vector<DistanceValue> sums;
    sums.reserve(set.size());
    for (const auto& a : set) sums.push_back(m.add(a, b));
    const DistanceValue rhs = m.meet(sums);
    if (lhs != rhs) {
      std::vector<std::string> w{f(b)};
      std::string shown = "{";
      for (std::size_t i = 0; i < set.size(); ++i) shown += (i ? "," : "") + f(set[i]);
      shown += "}";
      w.push_back(shown);
      return LawReport::fail("meet-distributivity", std::move(w),
                             f(b) + " + meet" + shown + " = " + f(lhs) + " but meet of sums = " + f(rhs));
    }
    return LawReport::pass();
  }
};

}  // namespace

LawReport check_monoid_axioms(const Monoid& m) {
  if (m.kind() != MonoidKind::FiniteTable) {
    throw Error(ErrorCode::MalformedTable, "exhaustive law check needs a finite table, got " + m.describe());
  }
  const LawChecker c{m};
  const std::vector<DistanceValue> el = m.elements();
  for (const auto& a : el) {
    if (auto r = c.identity(a); !r) return r;
  }
  for (const auto& x : el) {
    for (const auto& b : el) {
      for (const auto& a : el) {
        if (auto r = c.monotonicity(x, a, b); !r) return r;
      }
    }
  }
  for (const auto& a : el) {
    for (const auto& b : el) {
      if (auto r = c.commutativity(a, b); !r) return r;
    }
  }
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& x : el) {
        if (auto r = c.associativity(a, b, x); !r) return r;
      }
    }
  }
  // In a finite chain every meet is the meet of a suffix set.
  for (const auto& b : el) {
    for (std::size_t k = 0; k <= el.size(); ++k) {
      std::span<const DistanceValue> suffix(el.data() + k, el.size() - k);
      if (auto r = c.distributivity(b, suffix); !r) return r;
    }
  }
  return LawReport::pass();
}

LawReport check_monoid_axioms_sampled(const Monoid& m, std::size_t samples, std::uint64_t seed) {
  const LawChecker c{m};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const DistanceValue a = m.sample(rng);
    const DistanceValue b = m.sample(rng);
    const DistanceValue x = m.sample(rng);
    if (auto r = c.identity(a); !r) return r;
    if (auto r = c.monotonicity(x, m.min(a, b), m.max(a, b)); !r) return r;
    if (auto r = c.commutativity(a, b); !r) return r;
    if (auto r = c.associativity(a, b, x); !r) return r;
    std::vector<DistanceValue> set;
    std::uniform_int_distribution<int> len(0, 4);
    for (int i = len(rng); i > 0; --i) set.push_back(m.sample(rng));
    if (auto r = c.distributivity(a, set); !r) return r;
  }
  return LawReport::pass();
}

bool is_continuous_at_zero(const Monoid& m) { return m.continuous_at_zero(); }

CoinitDescriptor coinitiality(const Monoid& m) {
  const CoinitDescriptor d = m.coinit();
  const bool trivial = m.is_zero(m.top());
  if (m.continuous_at_zero() && !trivial && !d.is_infinite()) {
    throw Error(ErrorCode::MalformedTable,
                m.describe() + " is continuous at 0 yet has a least nonzero element; it cannot satisfy the monoid laws");
  }
  return d;
}

}  // namespace wmetric
