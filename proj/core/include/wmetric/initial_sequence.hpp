#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "wmetric/law_report.hpp"
#include "wmetric/monoid.hpp"

namespace wmetric {

/// Strictly order-reversing map from the ordinals below `index_bound` into
/// the nonzero distances of a monoid, with a declared niceness factor.
/// Copies share the entry function (and its cache).
class InitialSequence {
 public:
  using EntryFn = std::function<DistanceValue(const Ordinal&)>;

  InitialSequence(MonoidPtr monoid, Ordinal index_bound, std::uint64_t factor, EntryFn entry);

  /// alpha(n) = ratio^-n over the extended rationals, indexed by w (or a
  /// finite length).
  static InitialSequence geometric(MonoidPtr rational, std::uint64_t ratio, Ordinal length = Ordinal::omega());
  /// alpha(b) = d(b+1) over ReversedOrdinal(h), indexed by h itself. This is
  /// the sequence tree metrics use for trees of height h.
  static InitialSequence ordinal_levels(MonoidPtr revordinal);

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const Ordinal& index_bound() const noexcept { return bound_; }
  std::uint64_t factor() const noexcept { return factor_; }

  bool in_range(const Ordinal& i) const { return i < bound_; }
  /// Throws InvalidArgument outside the index bound.
  DistanceValue at(const Ordinal& i) const;
  DistanceValue operator()(std::uint64_t i) const { return at(Ordinal::finite(i)); }
  /// Number of natural indices available (UINT64_MAX when the bound is infinite).
  std::uint64_t natural_length() const;

  /// Exact check of alpha(k) > 0, alpha(k+1) < alpha(k) and
  /// factor * alpha(k+1) <= alpha(k) for natural k < count.
  LawReport check_nice(std::uint64_t count) const;
  /// Smallest natural index n < horizon with alpha(n) <= a.
  std::optional<std::uint64_t> index_below(const DistanceValue& a, std::uint64_t horizon) const;
  /// Spot check of coinitiality against the given probes.
  LawReport check_coinitial(std::span<const DistanceValue> probes, std::uint64_t horizon) const;

 private:
  MonoidPtr monoid_;
  Ordinal bound_;
  std::uint64_t factor_;
  EntryFn entry_;
};

/// Nice initial sequence built by iterating the monoid's halving hook h:
/// alpha(0) is the first base entry, alpha(k+1) is the first base entry at
/// index >= k+1 lying below h^m(alpha(k)) for the least m with
/// factor * h^m(alpha(k)) <= alpha(k). Limit indices (only for the
/// omega-1 instance) take the meet of the earlier entries.
/// Throws NotContinuousAtZero for instances without an initial sequence and
/// InvalidArgument if `length` exceeds what the coinitiality allows.
InitialSequence nice_initial_sequence(MonoidPtr m, std::uint64_t factor, Ordinal length);

}  // namespace wmetric
