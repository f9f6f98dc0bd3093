#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wmetric/initial_sequence.hpp"
#include "wmetric/law_report.hpp"
#include "wmetric/monoid.hpp"

namespace wmetric {

enum class Origin { Base, Limit };

struct Point {
  std::string id;
  Origin origin = Origin::Base;

  bool operator==(const Point& rhs) const { return id == rhs.id; }
};

enum class Completeness {
  Unknown,
  Computed,  // finite spaces: every Cauchy sequence is eventually constant
  Derived,   // presentations whose completeness follows from their construction
};

class WSpace;
using SpacePtr = std::shared_ptr<const WSpace>;
class CauchySequence;

/// A W-valued quasi-metric space. Finite spaces hold the full matrix;
/// lazy ones answer through oracles and may offer completion hooks.
class WSpace : public std::enable_shared_from_this<WSpace> {
 public:
  explicit WSpace(MonoidPtr monoid) : monoid_(std::move(monoid)) {}
  virtual ~WSpace() = default;

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  virtual std::string describe() const = 0;

  virtual bool is_finite() const noexcept { return false; }
  /// i-th presented point, nullopt once the enumeration is exhausted.
  virtual std::optional<Point> enumerate(std::uint64_t i) const = 0;
  virtual bool contains(const Point& p) const = 0;
  virtual DistanceValue distance(const Point& x, const Point& y) const = 0;
  virtual Completeness completeness() const noexcept { return Completeness::Unknown; }

  /// Least nonzero distance realized by the space, when it is known to exist.
  virtual std::optional<DistanceValue> min_positive_distance() const { return std::nullopt; }

  // Completion hooks.
  /// The presentation's own completion (paths for trees); null if none.
  virtual SpacePtr completion() const { return nullptr; }
  /// Canonical Cauchy sequence over alpha through base points converging
  /// to p (the constant sequence for base points).
  virtual std::optional<CauchySequence> representative(const Point& p, const InitialSequence& alpha) const;
  /// Limit of a Cauchy sequence, looking at indices below `horizon`.
  virtual std::optional<Point> resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const;
  /// Limit of an approximation-tree branch given by a finite prefix.
  virtual std::optional<Point> resolve_branch(const std::vector<Point>& chain) const;

  SpacePtr self() const { return shared_from_this(); }

 private:
  MonoidPtr monoid_;
};

class FiniteSpace final : public WSpace {
 public:
  /// Throws MalformedMatrix on duplicate names, wrong dimensions, or entries
  /// outside the monoid.
  static std::shared_ptr<const FiniteSpace> create(MonoidPtr monoid, std::vector<std::string> names,
                                                   std::vector<std::vector<DistanceValue>> matrix);

  std::string describe() const override;
  bool is_finite() const noexcept override { return true; }
  std::optional<Point> enumerate(std::uint64_t i) const override;
  bool contains(const Point& p) const override { return index_.contains(p.id); }
  DistanceValue distance(const Point& x, const Point& y) const override;
  Completeness completeness() const noexcept override { return Completeness::Computed; }
  std::optional<DistanceValue> min_positive_distance() const override { return min_positive_; }
  std::optional<Point> resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const override;

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<DistanceValue>>& matrix() const noexcept { return matrix_; }
  std::vector<Point> points() const;
  std::size_t index_of(const Point& p) const;
  Point point(std::size_t i) const { return Point{names_.at(i), Origin::Base}; }

  // Public for std::make_shared; use create().
  FiniteSpace(MonoidPtr monoid, std::vector<std::string> names, std::vector<std::vector<DistanceValue>> matrix);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<DistanceValue>> matrix_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<DistanceValue> min_positive_;
};

/// Lazy space from an enumerator and a distance oracle. `declared_infinite`
/// says the enumerator never runs out.
class FunctionSpace final : public WSpace {
 public:
  using Enumerator = std::function<std::optional<Point>(std::uint64_t)>;
  using Membership = std::function<bool(const Point&)>;
  using Distance = std::function<DistanceValue(const Point&, const Point&)>;

  FunctionSpace(MonoidPtr monoid, std::string name, Enumerator enumerate, Membership contains, Distance distance,
                bool declared_infinite)
      : WSpace(std::move(monoid)),
        name_(std::move(name)),
        enumerate_(std::move(enumerate)),
        contains_(std::move(contains)),
        distance_(std::move(distance)),
        infinite_(declared_infinite) {}

  std::string describe() const override { return name_; }
  std::optional<Point> enumerate(std::uint64_t i) const override { return enumerate_(i); }
  bool contains(const Point& p) const override { return contains_(p); }
  DistanceValue distance(const Point& x, const Point& y) const override { return distance_(x, y); }
  bool declared_infinite() const noexcept { return infinite_; }

 private:
  std::string name_;
  Enumerator enumerate_;
  Membership contains_;
  Distance distance_;
  bool infinite_;
};

/// True for presentations that promise an endless enumeration.
bool declared_infinite(const WSpace& space);

/// Identity law (x-major, then y), then the triangle inequality over all
/// triples (x, y, z) in lexicographic order.
LawReport check_space_axioms(const FiniteSpace& space);

/// Claimed limit x of a sequence p: d(p(i), x) and d(x, p(i)) are at most
/// modulus * alpha(i). Verified at every index up to the stage a query looks
/// at, trusted beyond it.
struct LimitClaim {
  Point limit;
  std::uint64_t modulus = 1;
};

/// Cauchy sequence indexed by the natural indices of an initial sequence:
/// assign(i) is the point at alpha(i).
class CauchySequence {
 public:
  using Assign = std::function<Point(std::uint64_t)>;

  static CauchySequence constant(SpacePtr space, InitialSequence alpha, Point x);
  /// prefix[0..n-1], then prefix.back() forever.
  static CauchySequence eventually_constant(SpacePtr space, InitialSequence alpha, std::vector<Point> prefix);
  static CauchySequence from_function(SpacePtr space, InitialSequence alpha, Assign assign,
                                      std::optional<LimitClaim> claim = std::nullopt);

  const SpacePtr& space() const noexcept { return space_; }
  const InitialSequence& alpha() const noexcept { return alpha_; }
  Point operator()(std::uint64_t i) const { return assign_(i); }
  /// Index from which the sequence is structurally constant.
  std::optional<std::uint64_t> constant_from() const noexcept { return constant_from_; }
  const std::optional<LimitClaim>& claim() const noexcept { return claim_; }

  /// Subsequence along a strictly increasing index map sigma; the result is
  /// indexed by alpha o sigma.
  CauchySequence restrict(std::function<std::uint64_t(std::uint64_t)> sigma) const;
  /// f o p in the target space (Cauchy again when f is non-expanding). The
  /// claim is dropped since its limit need not map to the new limit.
  CauchySequence compose(std::function<Point(const Point&)> f, SpacePtr target) const;
  CauchySequence with_claim(LimitClaim claim) const;

  /// Exact check of d(p(i), p(j)) <= alpha(i) + alpha(j) for i, j <= stage.
  LawReport check_bound(std::uint64_t stage) const;
  /// Claim verified at all indices <= stage.
  bool claim_holds(std::uint64_t stage) const;

 private:
  CauchySequence(SpacePtr space, InitialSequence alpha, Assign assign)
      : space_(std::move(space)), alpha_(std::move(alpha)), assign_(std::move(assign)) {}

  SpacePtr space_;
  InitialSequence alpha_;
  Assign assign_;
  std::optional<std::uint64_t> constant_from_;
  std::optional<LimitClaim> claim_;
};

}  // namespace wmetric
