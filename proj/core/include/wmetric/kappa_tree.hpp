#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wmetric/ordinal.hpp"

namespace wmetric {

/// Binary-tree node: the bit string from the root ('0'/'1' characters).
struct BinaryNode {
  std::string bits;
  bool operator==(const BinaryNode&) const = default;
};

/// S_kappa node (a, g): g is the ledger g(0) = 0 < g(1) < ... < g(n+1) with
/// g(n) < a <= g(n+1); the root is (0, [0]).
struct LedgerNode {
  Ordinal a;
  std::vector<Ordinal> g;
  bool operator==(const LedgerNode&) const = default;
};

using TreeNode = std::variant<BinaryNode, LedgerNode>;

/// How a pruned extension picks a new ledger entry: Tight sets it to the
/// target level, Slack to the level's successor. Binary trees ignore it.
enum class ExtensionStyle { Tight, Slack };

/// Level-graded tree of some height with restriction and children oracles.
class KappaTree {
 public:
  explicit KappaTree(Ordinal height) : height_(std::move(height)) {}
  virtual ~KappaTree() = default;

  const Ordinal& height() const noexcept { return height_; }
  virtual std::string kind() const = 0;
  virtual TreeNode root() const = 0;
  virtual Ordinal level(const TreeNode& n) const = 0;
  virtual bool contains(const TreeNode& n) const = 0;
  /// Ancestor at level i (i <= level(n)). Throws InvalidArgument otherwise.
  virtual TreeNode restrict(const TreeNode& n, const Ordinal& i) const = 0;
  /// k-th immediate successor in enumeration order.
  virtual std::optional<TreeNode> child(const TreeNode& n, std::uint64_t k) const = 0;
  /// First extension of n at level beta > level(n) in enumeration order
  /// (or per `style`); nullopt if n has none.
  virtual std::optional<TreeNode> extend_to(const TreeNode& n, const Ordinal& beta,
                                            ExtensionStyle style = ExtensionStyle::Tight) const = 0;
  /// Dense enumeration of the nodes.
  virtual std::optional<TreeNode> enumerate(std::uint64_t i) const = 0;
  virtual std::string format(const TreeNode& n) const = 0;
  /// Throws Parse (or InvalidNode) on bad input.
  virtual TreeNode parse(std::string_view text) const = 0;

  bool leq(const TreeNode& a, const TreeNode& b) const;
  bool less(const TreeNode& a, const TreeNode& b) const { return leq(a, b) && !(a == b); }
  /// Supremum of the levels of common lower bounds; height for a == b.
  virtual Ordinal join(const TreeNode& a, const TreeNode& b) const = 0;

 private:
  Ordinal height_;
};

using TreePtr = std::shared_ptr<const KappaTree>;

/// The full binary w-tree, optionally with dead nodes: a dead node stays in
/// the tree but has no children (so the tree is no longer pruned).
class BinaryTree final : public KappaTree {
 public:
  explicit BinaryTree(std::set<std::string> dead = {});

  std::string kind() const override { return "binary"; }
  TreeNode root() const override { return BinaryNode{}; }
  Ordinal level(const TreeNode& n) const override;
  bool contains(const TreeNode& n) const override;
  TreeNode restrict(const TreeNode& n, const Ordinal& i) const override;
  std::optional<TreeNode> child(const TreeNode& n, std::uint64_t k) const override;
  std::optional<TreeNode> extend_to(const TreeNode& n, const Ordinal& beta,
                                    ExtensionStyle style = ExtensionStyle::Tight) const override;
  std::optional<TreeNode> enumerate(std::uint64_t i) const override;
  std::string format(const TreeNode& n) const override;
  TreeNode parse(std::string_view text) const override;
  Ordinal join(const TreeNode& a, const TreeNode& b) const override;

  const std::set<std::string>& dead() const noexcept { return dead_; }
  static const std::string& bits(const TreeNode& n);

 private:
  std::set<std::string> dead_;
  mutable std::mutex mu_;
  mutable std::vector<std::string> bfs_;  // enumeration cache when nodes are dead
  mutable std::size_t expanded_ = 0;
};

/// The ledger tree S_kappa of the given height (a CNF ordinal or omega-1).
class SKappaTree final : public KappaTree {
 public:
  explicit SKappaTree(Ordinal height) : KappaTree(std::move(height)) {}

  std::string kind() const override { return "s-kappa"; }
  TreeNode root() const override { return LedgerNode{Ordinal(), {Ordinal()}}; }
  Ordinal level(const TreeNode& n) const override;
  bool contains(const TreeNode& n) const override;
  TreeNode restrict(const TreeNode& n, const Ordinal& i) const override;
  std::optional<TreeNode> child(const TreeNode& n, std::uint64_t k) const override;
  std::optional<TreeNode> extend_to(const TreeNode& n, const Ordinal& beta,
                                    ExtensionStyle style = ExtensionStyle::Tight) const override;
  /// Nodes by increasing weight (sum of ordinal weights plus ledger length),
  /// lexicographic within a weight.
  std::optional<TreeNode> enumerate(std::uint64_t i) const override;
  std::string format(const TreeNode& n) const override;
  TreeNode parse(std::string_view text) const override;
  Ordinal join(const TreeNode& a, const TreeNode& b) const override;

  /// Throws InvalidNode with the reason if n is not a node of this tree.
  void validate(const TreeNode& n) const;
  static const LedgerNode& ledger(const TreeNode& n);

 private:
  mutable std::mutex mu_;
  mutable std::vector<LedgerNode> enumerated_;
  mutable std::uint64_t next_weight_ = 0;
};

}  // namespace wmetric
