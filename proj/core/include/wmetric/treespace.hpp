#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wmetric/dynsys.hpp"
#include "wmetric/kappa_tree.hpp"

namespace wmetric {

/// Eventually periodic path u v v v ... through the binary tree, kept in
/// canonical form (primitive period, shortest prefix).
struct PathRep {
  std::string prefix;
  std::string period;

  static PathRep make(std::string prefix, std::string period);
  /// Shortest eventually periodic path whose first bits are `bits`
  /// (ties: shorter prefix first, then lexicographic).
  static PathRep shortest_consistent(const std::string& bits);
  char bit(std::uint64_t i) const;
  std::string head(std::uint64_t n) const;
  std::string to_string() const { return "p:" + prefix + "(" + period + ")"; }
  static PathRep parse(std::string_view text);
  bool operator==(const PathRep&) const = default;
};

/// i-th canonical eventually periodic path, by size then lexicographically.
PathRep enumerate_path(std::uint64_t i);

/// Ordinal join; a == b gives the height. DifferentTrees if either node is
/// not in the tree.
Ordinal join_nodes(const TreeNode& a, const TreeNode& b, const KappaTree& tree);

/// The space T_alpha: tree nodes (plus eventually periodic paths for the
/// binary tree when include_paths) with d(x, y) = alpha(join(x, y)) off the
/// diagonal. Node ids come from the tree's format(); path ids look like
/// p:01(10).
class TreeSpace final : public WSpace {
 public:
  TreeSpace(TreePtr tree, InitialSequence alpha, bool include_paths);

  std::string describe() const override;
  std::optional<Point> enumerate(std::uint64_t i) const override;
  bool contains(const Point& p) const override;
  DistanceValue distance(const Point& x, const Point& y) const override;
  Completeness completeness() const noexcept override;
  SpacePtr completion() const override;
  std::optional<CauchySequence> representative(const Point& p, const InitialSequence& alpha) const override;
  std::optional<Point> resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const override;
  std::optional<Point> resolve_branch(const std::vector<Point>& chain) const override;

  const TreePtr& tree() const noexcept { return tree_; }
  const InitialSequence& tree_alpha() const noexcept { return alpha_; }
  bool include_paths() const noexcept { return include_paths_; }

  Point node_point(const TreeNode& n) const { return Point{tree_->format(n), Origin::Base}; }
  Point path_point(const PathRep& p) const { return Point{p.to_string(), Origin::Limit}; }
  bool is_path(const Point& p) const { return p.id.starts_with("p:"); }
  TreeNode node_of(const Point& p) const { return tree_->parse(p.id); }
  /// Join of any two points (paths included).
  Ordinal join(const Point& x, const Point& y) const;

 private:
  bool binary() const;
  TreePtr tree_;
  InitialSequence alpha_;
  bool include_paths_;
};

/// Throws HeightMismatch unless alpha's index bound is the tree height, and
/// InvalidArgument if alpha's factor is below 2.
std::shared_ptr<const TreeSpace> tree_metric(TreePtr tree, InitialSequence alpha, bool include_paths);

/// First-child map on nodes. The returned map throws Stuck on a node
/// without children.
std::function<TreeNode(const TreeNode&)> level_advance_map(TreePtr tree);

/// T_alpha (with paths for the binary tree) and the level-advance map
/// extended to limit points; D is the set of nodes. `system_alpha` is the
/// w-indexed nice sequence governing the approximation tree.
DynSystem tree_system(TreePtr tree, InitialSequence tree_alpha, InitialSequence system_alpha);

struct PrunedResult {
  bool passed = true;
  std::optional<TreeNode> node;  // a node with no extension
  Ordinal level;                 // ... to this level
};

PrunedResult pruned_check(const KappaTree& tree, const std::vector<std::pair<TreeNode, Ordinal>>& samples,
                          ExtensionStyle style = ExtensionStyle::Tight);

/// Path built by the cofinal-sequence construction: x_0 at level gamma_0,
/// x_{n+1} the first extension of x_n to gamma_{n+1}, and
/// y(zeta) = x_{n+1} restricted to zeta for gamma_n <= zeta < gamma_{n+1}.
class TreePath {
 public:
  TreePath(TreePtr tree, std::function<Ordinal(std::uint64_t)> gamma);
  /// y(zeta); throws Stuck if the tree is not pruned along the way and
  /// InvalidArgument for zeta >= height.
  TreeNode at(const Ordinal& zeta) const;
  const TreePtr& tree() const noexcept { return tree_; }

 private:
  const TreeNode& x(std::uint64_t n) const;
  TreePtr tree_;
  std::function<Ordinal(std::uint64_t)> gamma_;
  mutable std::mutex mu_;
  mutable std::vector<TreeNode> xs_;
};

/// Throws NotCofinal when the height is omega-1 or not of cofinality w, or
/// when the first `spot_checks` terms are not strictly increasing below the
/// height or fail to pass the height's canonical cofinal entries.
std::shared_ptr<const TreePath> find_path_cf_omega(TreePtr tree, std::function<Ordinal(std::uint64_t)> gamma,
                                                   std::uint64_t spot_checks = 64);

/// Union of the ledgers along a coherent prefix (nodes at increasing
/// levels, each below the next). Throws IncoherentPrefix otherwise.
std::vector<Ordinal> extract_cofinal(const SKappaTree& tree, const std::vector<TreeNode>& prefix);

std::shared_ptr<const SKappaTree> build_s_kappa(Ordinal height);

/// Bounded exploration of the approximation tree for systems whose monoid
/// has uncountable coinitiality (S_omega-1): reports the deepest node found
/// and never certifies or resolves a witness.
SearchOutcome explore_fixed_point(const DynSystem& system, std::uint64_t depth_budget, std::uint64_t width_budget);

}  // namespace wmetric
