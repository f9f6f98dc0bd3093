#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wmetric/monoid.hpp"

namespace wmetric {

/// Element of the Dedekind-MacNeille completion of a monoid, given either by
/// a finite generator set (the cut is their meet) or by a descending stream
/// of upper bounds with an optionally declared meet.
class Cut {
 public:
  using Stream = std::function<DistanceValue(std::uint64_t)>;

  static Cut principal(MonoidPtr m, DistanceValue v);
  /// The empty generator set is the top cut.
  static Cut generated(MonoidPtr m, std::vector<DistanceValue> generators);
  /// `bounds(n)` must be non-increasing in n. The declared meet, when given,
  /// is trusted as the value of the cut.
  static Cut stream(MonoidPtr m, Stream bounds, std::optional<DistanceValue> declared_meet = std::nullopt,
                    std::string label = "stream");

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  bool is_finite() const noexcept { return !stream_; }
  const std::vector<DistanceValue>& generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }

  /// n-th upper bound: the meet of the generators for finite cuts.
  DistanceValue bound(std::uint64_t n) const;
  /// Exact value when known (finite cuts, or a declared meet).
  std::optional<DistanceValue> value() const;
  /// First n < horizon with bound(n) <= q; nullopt means q stayed strictly
  /// below every bound inspected (q < cut, when the horizon suffices).
  std::optional<std::uint64_t> first_bound_at_or_below(const DistanceValue& q, std::uint64_t horizon) const;

  /// Comparison by inclusion of generated downsets; decided when both
  /// values are known.
  std::optional<std::strong_ordering> compare(const Cut& rhs) const;

  std::string describe() const;

 private:
  MonoidPtr monoid_;
  std::vector<DistanceValue> generators_;
  Stream stream_;
  std::optional<DistanceValue> declared_;
  std::string label_;
};

/// a +* b: the cut generated by pairwise sums of generators, or the stream of
/// summed bounds. Throws MixedInstances for cuts over different monoids.
Cut completion_add(const Cut& a, const Cut& b);

/// Extension of an embedding i: base -> target to cuts,
/// j(cut) = meet of the i-images of its generators (bound-wise for streams).
class CutEmbedding {
 public:
  using ElementMap = std::function<DistanceValue(const DistanceValue&)>;
  CutEmbedding(MonoidPtr base, MonoidPtr target, ElementMap map) : base_(std::move(base)), target_(std::move(target)), map_(std::move(map)) {}

  const MonoidPtr& base() const noexcept { return base_; }
  const MonoidPtr& target() const noexcept { return target_; }
  DistanceValue on_element(const DistanceValue& v) const { return map_(v); }
  Cut operator()(const Cut& c) const;

 private:
  MonoidPtr base_;
  MonoidPtr target_;
  ElementMap map_;
};

/// Verifies on all pairs from `sample` that i preserves 0, order (strictly,
/// so it is injective) and addition, then returns the cut extension.
/// Throws NotAnEmbedding with the offending pair.
CutEmbedding embed_into_complete(MonoidPtr base, MonoidPtr target, CutEmbedding::ElementMap map,
                                 const std::vector<DistanceValue>& sample);

}  // namespace wmetric
