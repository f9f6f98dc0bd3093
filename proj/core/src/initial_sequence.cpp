#include "wmetric/initial_sequence.hpp"

#include <limits>
#include <mutex>

#include "wmetric/error.hpp"

namespace wmetric {

InitialSequence::InitialSequence(MonoidPtr monoid, Ordinal index_bound, std::uint64_t factor, EntryFn entry)
    : monoid_(std::move(monoid)), bound_(std::move(index_bound)), factor_(factor), entry_(std::move(entry)) {
  if (!monoid_) throw Error(ErrorCode::InvalidArgument, "initial sequence without a monoid");
  if (factor_ < 2) throw Error(ErrorCode::InvalidArgument, "niceness factor must be at least 2");
  if (bound_.is_zero()) throw Error(ErrorCode::InvalidArgument, "initial sequence of length 0");
}

InitialSequence InitialSequence::geometric(MonoidPtr rational, std::uint64_t ratio, Ordinal length) {
  if (rational->kind() != MonoidKind::ExtendedRational) {
    throw Error(ErrorCode::MixedInstances, "geometric sequences live in the extended rationals");
  }
  if (length > Ordinal::omega()) throw Error(ErrorCode::InvalidArgument, "rational sequences have length <= w");
  if (ratio < 2) throw Error(ErrorCode::InvalidArgument, "ratio must be at least 2");
  return InitialSequence(std::move(rational), std::move(length), ratio, [ratio](const Ordinal& i) -> DistanceValue {
    using boost::multiprecision::cpp_int;
    cpp_int den = boost::multiprecision::pow(cpp_int(ratio), static_cast<unsigned>(i.finite_value()));
    return ExtRational(Rational(cpp_int(1), den));
  });
}

InitialSequence InitialSequence::ordinal_levels(MonoidPtr revordinal) {
  if (revordinal->kind() != MonoidKind::ReversedOrdinal) {
    throw Error(ErrorCode::MixedInstances, "level sequences live in a reversed-ordinal monoid");
  }
  if (!revordinal->height().is_limit()) {
    throw Error(ErrorCode::NotContinuousAtZero, revordinal->describe() + " has no initial sequence");
  }
  Ordinal h = revordinal->height();
  // n * a = a in these monoids, so any factor holds; 4 is the standard one.
  return InitialSequence(std::move(revordinal), h, 4,
                         [](const Ordinal& i) -> DistanceValue { return i.successor(); });
}

DistanceValue InitialSequence::at(const Ordinal& i) const {
  if (!in_range(i)) {
    throw Error(ErrorCode::InvalidArgument,
                "index " + i.to_string() + " outside initial sequence of length " + bound_.to_string());
  }
  return entry_(i);
}

std::uint64_t InitialSequence::natural_length() const {
  if (bound_.is_finite()) return bound_.finite_value();
  return std::numeric_limits<std::uint64_t>::max();
}

LawReport InitialSequence::check_nice(std::uint64_t count) const {
  const Monoid& m = *monoid_;
  count = std::min(count, natural_length());
  DistanceValue prev;
  for (std::uint64_t k = 0; k < count; ++k) {
    DistanceValue cur = (*this)(k);
    if (m.is_zero(cur)) return LawReport::fail("positivity", {std::to_string(k)}, "alpha(" + std::to_string(k) + ") = 0");
    if (k > 0) {
      const std::string ks = std::to_string(k - 1);
      if (!m.less(cur, prev)) {
        return LawReport::fail("strictly decreasing", {ks}, "alpha(" + ks + "+1) = " + m.format(cur) + " is not below " + m.format(prev));
      }
      if (!m.leq(m.multiply(factor_, cur), prev)) {
        return LawReport::fail("niceness", {ks},
                               std::to_string(factor_) + " * alpha(" + ks + "+1) = " + m.format(m.multiply(factor_, cur)) +
                                   " exceeds alpha(" + ks + ") = " + m.format(prev));
      }
    }
    prev = std::move(cur);
  }
  return LawReport::pass();
}

std::optional<std::uint64_t> InitialSequence::index_below(const DistanceValue& a, std::uint64_t horizon) const {
  horizon = std::min(horizon, natural_length());
  for (std::uint64_t n = 0; n < horizon; ++n) {
    if (monoid_->leq((*this)(n), a)) return n;
  }
  return std::nullopt;
}

LawReport InitialSequence::check_coinitial(std::span<const DistanceValue> probes, std::uint64_t horizon) const {
  for (const auto& a : probes) {
    if (monoid_->is_zero(a)) continue;
    if (!index_below(a, horizon)) {
      return LawReport::fail("coinitiality", {monoid_->format(a)},
                             "no entry below " + monoid_->format(a) + " within " + std::to_string(horizon) + " indices");
    }
  }
  return LawReport::pass();
}

namespace {

struct HalvingState {
  MonoidPtr m;
  std::uint64_t factor;
  std::mutex mu;
  std::vector<DistanceValue> cache;

  DistanceValue next(const DistanceValue& a, std::uint64_t k) const {
    DistanceValue target = m->halve(a);
    while (!m->leq(m->multiply(factor, target), a)) target = m->halve(target);
    for (std::uint64_t j = k;; ++j) {
      DistanceValue b = m->base_initial(j);
      if (m->leq(b, target)) return b;
    }
  }

  DistanceValue at(std::uint64_t n) {
    std::lock_guard lock(mu);
    if (cache.empty()) cache.push_back(m->base_initial(0));
    while (cache.size() <= n) {
      const std::uint64_t k = cache.size();
      cache.push_back(next(cache.back(), k));
    }
    return cache[n];
  }
};

}  // namespace

InitialSequence nice_initial_sequence(MonoidPtr m, std::uint64_t factor, Ordinal length) {
  if (!m->continuous_at_zero() || !m->coinit().is_infinite()) {
    throw Error(ErrorCode::NotContinuousAtZero, m->describe() + " has a least nonzero distance; no initial sequence exists");
  }
  if (factor < 2) throw Error(ErrorCode::InvalidArgument, "niceness factor must be at least 2");
  const bool uncountable = m->coinit().kind == CoinitDescriptor::Kind::SymbolicUncountable;
  if (!uncountable && length > Ordinal::omega()) {
    throw Error(ErrorCode::InvalidArgument,
                "length " + length.to_string() + " exceeds the coinitiality w of " + m->describe());
  }
  if (uncountable && m->kind() == MonoidKind::ReversedOrdinal) {
    // Closed form of the construction for d-values indexed by ordinals:
    // alpha(n) = d(n+1), alpha(l) = d(l) at limits l > 0, alpha(l+n) = d(l+n+1).
    return InitialSequence(std::move(m), std::move(length), factor, [](const Ordinal& i) -> DistanceValue {
      if (i.is_limit() && !i.is_zero()) return i;
      return i.successor();
    });
  }
  auto state = std::make_shared<HalvingState>();
  state->m = m;
  state->factor = factor;
  return InitialSequence(std::move(m), std::move(length), factor,
                         [state](const Ordinal& i) -> DistanceValue { return state->at(i.finite_value()); });
}

}  // namespace wmetric
