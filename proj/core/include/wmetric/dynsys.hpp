#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmetric/completion.hpp"
#include "wmetric/law_report.hpp"

namespace wmetric {

/// A space with a self-map, a dense set D closed under the map (given by an
/// enumerator; `dense_finite` says the enumerator may run out, after which D
/// is exhausted) and the nice initial sequence that governs the
/// approximation tree.
class DynSystem {
 public:
  using DenseEnumerator = std::function<std::optional<Point>(std::uint64_t)>;

  /// Throws InvalidArgument if alpha's factor is below 4 or alpha lives in
  /// another monoid.
  DynSystem(SpacePtr space, PointMap map, DenseEnumerator dense, bool dense_finite, InitialSequence alpha);

  /// Finite system: D is the whole space, map[i] is the index of f(point i).
  static DynSystem finite(std::shared_ptr<const FiniteSpace> space, const std::vector<std::size_t>& map,
                          InitialSequence alpha);

  const SpacePtr& space() const noexcept { return space_; }
  Point apply(const Point& x) const { return map_(x); }
  const PointMap& map() const noexcept { return map_; }
  std::optional<Point> dense(std::uint64_t i) const { return dense_(i); }
  bool dense_finite() const noexcept { return dense_finite_; }
  const InitialSequence& alpha() const noexcept { return alpha_; }

 private:
  SpacePtr space_;
  PointMap map_;
  DenseEnumerator dense_;
  bool dense_finite_;
  InitialSequence alpha_;
};

/// d(f(x), f(y)) <= d(x, y) on the given pairs; witness (x, y) on failure.
LawReport check_nonexpanding(const DynSystem& system, const std::vector<std::pair<Point, Point>>& pairs);
/// All ordered pairs of the first `limit` dense points (all of D when finite).
std::vector<std::pair<Point, Point>> dense_pairs(const DynSystem& system, std::uint64_t limit);

/// A node <x_0, ..., x_{n-1}> of the approximation tree; `indices` are the
/// positions of the entries in the dense enumeration (the sort key).
struct ApproxNode {
  std::vector<std::uint64_t> indices;
  std::vector<Point> entries;
};

/// Every valid depth-n node over the first `width_budget` dense points, in
/// lexicographic order of enumeration indices. Levels are expanded in
/// parallel over parents with an order-preserving merge.
/// Throws BudgetTooSmall if width_budget is 0 or an infinite presentation
/// stops enumerating before width_budget points.
std::vector<ApproxNode> level_nodes(const DynSystem& system, std::uint64_t depth, std::uint64_t width_budget);

/// Lexicographically first depth-n node over the first `width_budget` dense
/// points (depth-first with backtracking); nullopt if the level is empty.
std::optional<ApproxNode> first_node(const DynSystem& system, std::uint64_t depth, std::uint64_t width_budget);

struct SearchOutcome {
  enum class Kind { FixedPointFound, CertifiedNoFixedPoint, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  std::optional<Point> witness;          // FixedPointFound
  std::optional<DistanceValue> residual; // FixedPointFound: 0 when exact
  std::uint64_t depth = 0;               // empty depth, or depth reached
  std::vector<Point> best_node;          // deepest node seen
  std::string reason;
};

std::string to_string(SearchOutcome::Kind kind);

/// Iterative deepening over the approximation tree, looking for the
/// lexicographically first node at each depth.
/// - empty level with D exhausted within the width: CertifiedNoFixedPoint;
/// - finite spaces: once alpha(i) drops below the least nonzero distance,
///   entry x_i is an exact fixed point: FixedPointFound(x_i, 0);
/// - lazy spaces: a branch surviving to depth_budget whose limit the
///   presentation resolves: FixedPointFound(limit, alpha(depth_budget));
/// - otherwise BudgetExhausted.
/// Throws WrongCoinitiality unless the monoid's coinitiality is w.
SearchOutcome decide_fixed_point(const DynSystem& system, std::uint64_t depth_budget, std::uint64_t width_budget);

/// Packages a finite branch as a Cauchy sequence (y(alpha(i)) = x_i, padded
/// with the last entry). Throws InvalidChain(i, j) at the first violated
/// bound: (i, i) for the approximate-fixed-point bound, (i, j) with i < j
/// for the pairwise bound, (i, n) if the constant padding breaks the bound.
CauchySequence branch_to_limit(const std::vector<Point>& chain, const DynSystem& system);

/// Infinite branch given by a generator; the first `verify_prefix` entries
/// are checked as above. When the presentation resolves the limit, the
/// sequence carries it as a limit claim.
CauchySequence branch_to_limit(const std::function<Point(std::uint64_t)>& chain, const DynSystem& system,
                               std::uint64_t verify_prefix);

}  // namespace wmetric
