#include "wmetric/treespace.hpp"

#include <algorithm>

#include "wmetric/error.hpp"

namespace wmetric {

// Eventually periodic paths.

PathRep PathRep::make(std::string prefix, std::string period) {
  if (period.empty()) throw Error(ErrorCode::InvalidArgument, "path period must be nonempty");
  if (prefix.find_first_not_of("01") != std::string::npos || period.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "paths are bit strings");
  }
  const std::size_t n = period.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    period = period.back() + period.substr(0, period.size() - 1);
  }
  return PathRep{std::move(prefix), std::move(period)};
}

PathRep PathRep::shortest_consistent(const std::string& bits) {
  for (std::size_t total = 1; total <= bits.size() + 1; ++total) {
    for (std::size_t plen = 0; plen < total && plen <= bits.size(); ++plen) {
      const std::size_t vlen = total - plen;
      std::string v(vlen, '0');
      for (std::size_t k = 0; k < vlen && plen + k < bits.size(); ++k) v[k] = bits[plen + k];
      bool ok = true;
      for (std::size_t i = plen; i < bits.size() && ok; ++i) ok = bits[i] == v[(i - plen) % vlen];
      if (ok) return make(bits.substr(0, plen), v);
    }
  }
  return make(bits, "0");
}

char PathRep::bit(std::uint64_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

std::string PathRep::head(std::uint64_t n) const {
  std::string s;
  s.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) s.push_back(bit(i));
  return s;
}

PathRep PathRep::parse(std::string_view text) {
  const std::size_t open = text.find('(');
  if (!text.starts_with("p:") || open == std::string_view::npos || !text.ends_with(")")) {
    throw Error(ErrorCode::Parse, "path ids look like p:01(10), got '" + std::string(text) + "'");
  }
  return make(std::string(text.substr(2, open - 2)), std::string(text.substr(open + 1, text.size() - open - 2)));
}

PathRep enumerate_path(std::uint64_t i) {
  static std::mutex mu;
  static std::vector<PathRep> cache;
  static std::size_t size_done = 0;
  std::lock_guard lock(mu);
  while (cache.size() <= i) {
    const std::size_t total = ++size_done;
    for (std::size_t plen = 0; plen < total; ++plen) {
      const std::size_t vlen = total - plen;
      for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << plen); ++ub) {
        for (std::uint64_t vb = 0; vb < (std::uint64_t{1} << vlen); ++vb) {
          std::string u(plen, '0');
          std::string v(vlen, '0');
          for (std::size_t k = 0; k < plen; ++k) u[k] = ((ub >> (plen - 1 - k)) & 1U) ? '1' : '0';
          for (std::size_t k = 0; k < vlen; ++k) v[k] = ((vb >> (vlen - 1 - k)) & 1U) ? '1' : '0';
          PathRep p = PathRep::make(u, v);
          if (p.prefix == u && p.period == v) cache.push_back(std::move(p));
        }
      }
    }
  }
  return cache[i];
}

Ordinal join_nodes(const TreeNode& a, const TreeNode& b, const KappaTree& tree) {
  if (!tree.contains(a) || !tree.contains(b)) throw Error(ErrorCode::DifferentTrees, "node is not in this tree");
  return tree.join(a, b);
}

// T_alpha.

TreeSpace::TreeSpace(TreePtr tree, InitialSequence alpha, bool include_paths)
    : WSpace(alpha.monoid()), tree_(std::move(tree)), alpha_(std::move(alpha)), include_paths_(include_paths) {}

bool TreeSpace::binary() const { return tree_->kind() == "binary"; }

std::string TreeSpace::describe() const {
  return "T_alpha over the " + tree_->kind() + " tree of height " + tree_->height().to_string() +
         (include_paths_ ? " with paths" : "") + " over " + monoid()->describe();
}

std::optional<Point> TreeSpace::enumerate(std::uint64_t i) const {
  if (include_paths_ && binary()) {
    if (i % 2 == 1) return path_point(enumerate_path(i / 2));
    i /= 2;
  }
  auto n = tree_->enumerate(i);
  if (!n) return std::nullopt;
  return node_point(*n);
}

bool TreeSpace::contains(const Point& p) const {
  try {
    if (is_path(p)) return include_paths_ && binary() && PathRep::parse(p.id).to_string() == p.id;
    return tree_->contains(node_of(p));
  } catch (const Error&) {
    return false;
  }
}

Ordinal TreeSpace::join(const Point& x, const Point& y) const {
  const bool px = is_path(x);
  const bool py = is_path(y);
  if (!px && !py) return tree_->join(node_of(x), node_of(y));
  if (px && py) {
    const PathRep a = PathRep::parse(x.id);
    const PathRep b = PathRep::parse(y.id);
    if (a == b) return tree_->height();
    // Distinct canonical paths differ before this bound.
    const std::uint64_t bound = std::max(a.prefix.size(), b.prefix.size()) + a.period.size() * b.period.size() + 1;
    for (std::uint64_t i = 0; i < bound; ++i) {
      if (a.bit(i) != b.bit(i)) return Ordinal::finite(i);
    }
    return tree_->height();
  }
  const PathRep p = PathRep::parse(px ? x.id : y.id);
  const std::string bits = BinaryTree::bits(node_of(px ? y : x));
  std::uint64_t k = 0;
  while (k < bits.size() && bits[k] == p.bit(k)) ++k;
  return Ordinal::finite(k);
}

DistanceValue TreeSpace::distance(const Point& x, const Point& y) const {
  if (x.id == y.id) return monoid()->zero();
  const Ordinal j = join(x, y);
  if (!alpha_.in_range(j)) return monoid()->zero();
  return alpha_.at(j);
}

Completeness TreeSpace::completeness() const noexcept {
  if (binary()) return include_paths_ ? Completeness::Derived : Completeness::Unknown;
  // S_kappa of uncountable cofinality has no paths to add.
  return tree_->height().is_symbolic() ? Completeness::Derived : Completeness::Unknown;
}

SpacePtr TreeSpace::completion() const {
  if (completeness() != Completeness::Unknown) return self();
  if (binary()) return std::make_shared<TreeSpace>(tree_, alpha_, true);
  return nullptr;
}

std::optional<CauchySequence> TreeSpace::representative(const Point& p, const InitialSequence& alpha) const {
  if (!contains(p)) return std::nullopt;
  if (!is_path(p)) return CauchySequence::constant(self(), alpha, p);
  const PathRep path = PathRep::parse(p.id);
  auto tree_alpha = alpha_;
  const Monoid& m = *monoid();
  auto level_for = [tree_alpha, alpha, &m](std::uint64_t n) {
    const DistanceValue target = alpha(n);
    for (std::uint64_t k = 0; k < 100000; ++k) {
      if (m.leq(tree_alpha(k), target)) return k;
    }
    throw Error(ErrorCode::Unresolvable, "tree sequence never drops below " + m.format(target));
  };
  auto mon = monoid();
  auto assign = [path, tree_alpha, alpha, mon](std::uint64_t n) {
    const Monoid& mm = *mon;
    std::uint64_t k = 0;
    while (!mm.leq(tree_alpha(k), alpha(n))) ++k;
    return Point{"t:" + path.head(k), Origin::Base};
  };
  level_for(0);  // fail early if the two sequences are incompatible
  return CauchySequence::from_function(self(), alpha, assign, LimitClaim{p, 1});
}

std::optional<Point> TreeSpace::resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const {
  if (auto p = WSpace::resolve_limit(seq, horizon)) return p;
  if (!binary() || !include_paths_ || horizon < 3) return std::nullopt;
  // The completion formula x(j) = p(j+2) restricted to j, read at the
  // deepest index inside the horizon.
  const std::uint64_t j = horizon - 3;
  const Point q = seq(j + 2);
  Point candidate = q;
  if (is_path(q)) {
    candidate = q;
  } else {
    const std::string bits = BinaryTree::bits(node_of(q));
    if (bits.size() >= j) candidate = path_point(PathRep::shortest_consistent(bits.substr(0, j)));
  }
  const Monoid& m = *monoid();
  for (std::uint64_t i = 0; i < horizon; ++i) {
    const Point pi = seq(i);
    const DistanceValue a = seq.alpha()(i);
    if (!m.leq(distance(pi, candidate), a) || !m.leq(distance(candidate, pi), a)) return std::nullopt;
  }
  return candidate;
}

std::optional<Point> TreeSpace::resolve_branch(const std::vector<Point>& chain) const {
  if (!binary() || !include_paths_ || chain.size() < 3) return std::nullopt;
  const std::uint64_t j = chain.size() - 3;
  const Point& q = chain.back();
  std::string bits;
  if (is_path(q)) {
    bits = PathRep::parse(q.id).head(j);
  } else {
    bits = BinaryTree::bits(node_of(q));
    if (bits.size() < j) return std::nullopt;
    bits.resize(j);
  }
  const Point candidate = path_point(PathRep::shortest_consistent(bits));
  const Monoid& m = *monoid();
  for (std::uint64_t i = 0; i <= j; ++i) {
    const DistanceValue a = alpha_(i);
    if (!m.leq(distance(chain[i], candidate), a) || !m.leq(distance(candidate, chain[i]), a)) return std::nullopt;
  }
  return candidate;
}

std::shared_ptr<const TreeSpace> tree_metric(TreePtr tree, InitialSequence alpha, bool include_paths) {
  if (alpha.index_bound() != tree->height()) {
    throw Error(ErrorCode::HeightMismatch, "initial sequence has length " + alpha.index_bound().to_string() +
                                               " but the tree has height " + tree->height().to_string());
  }
  if (include_paths && tree->kind() != "binary") {
    throw Error(ErrorCode::InvalidArgument, "only binary-tree paths have a finite presentation");
  }
  return std::make_shared<TreeSpace>(std::move(tree), std::move(alpha), include_paths);
}

std::function<TreeNode(const TreeNode&)> level_advance_map(TreePtr tree) {
  return [tree](const TreeNode& n) -> TreeNode {
    auto c = tree->child(n, 0);
    if (!c) throw Error(ErrorCode::Stuck, tree->format(n) + " has no child", {tree->format(n)});
    return *c;
  };
}

namespace {

// Nodes of the full binary tree by diagonals: (level L, index k) with
// L + k = s for s = 0, 1, ..., so deep leftmost nodes come early.
BinaryNode diagonal_node(std::uint64_t i) {
  for (std::uint64_t s = 0;; ++s) {
    for (std::uint64_t level = 0; level <= s; ++level) {
      const std::uint64_t k = s - level;
      if (level < 63 && k >= (std::uint64_t{1} << level)) continue;
      if (i-- > 0) continue;
      std::string bits(level, '0');
      for (std::uint64_t b = 0; b < level && b < 64; ++b) {
        if ((k >> b) & 1U) bits[level - 1 - b] = '1';
      }
      return BinaryNode{bits};
    }
  }
}

}  // namespace

DynSystem tree_system(TreePtr tree, InitialSequence tree_alpha, InitialSequence system_alpha) {
  const bool paths = tree->kind() == "binary";
  auto space = tree_metric(tree, std::move(tree_alpha), paths);
  auto f = level_advance_map(tree);
  PointMap on_nodes = [space, f](const Point& p) { return space->node_point(f(space->node_of(p))); };
  PointMap extended = extend_nonexpanding(on_nodes, space, system_alpha);
  auto full_binary = std::dynamic_pointer_cast<const BinaryTree>(tree);
  if (full_binary && !full_binary->dead().empty()) full_binary = nullptr;
  DynSystem::DenseEnumerator dense = [space, tree, full_binary](std::uint64_t i) -> std::optional<Point> {
    if (full_binary) return space->node_point(diagonal_node(i));
    auto n = tree->enumerate(i);
    if (!n) return std::nullopt;
    return space->node_point(*n);
  };
  return DynSystem(space, extended, dense, false, std::move(system_alpha));
}

PrunedResult pruned_check(const KappaTree& tree, const std::vector<std::pair<TreeNode, Ordinal>>& samples,
                          ExtensionStyle style) {
  for (const auto& [a, beta] : samples) {
    if (!(tree.level(a) < beta)) continue;
    auto b = tree.extend_to(a, beta, style);
    if (!b || tree.level(*b) != beta || !tree.leq(a, *b)) return {false, a, beta};
  }
  return {};
}

TreePath::TreePath(TreePtr tree, std::function<Ordinal(std::uint64_t)> gamma)
    : tree_(std::move(tree)), gamma_(std::move(gamma)) {}

const TreeNode& TreePath::x(std::uint64_t n) const {
  std::lock_guard lock(mu_);
  while (xs_.size() <= n) {
    const std::uint64_t k = xs_.size();
    const TreeNode from = k == 0 ? tree_->root() : xs_.back();
    auto next = tree_->extend_to(from, gamma_(k), ExtensionStyle::Tight);
    if (!next) throw Error(ErrorCode::Stuck, tree_->format(from) + " has no extension to level " + gamma_(k).to_string(), {tree_->format(from)});
    xs_.push_back(std::move(*next));
  }
  return xs_[n];
}

TreeNode TreePath::at(const Ordinal& zeta) const {
  if (!(zeta < tree_->height())) {
    throw Error(ErrorCode::InvalidArgument, "level " + zeta.to_string() + " is not below the height");
  }
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << 20); ++k) {
    if (zeta < gamma_(k)) return tree_->restrict(x(k), zeta);
  }
  throw Error(ErrorCode::NotCofinal, "level " + zeta.to_string() + " is never reached by the sequence");
}

std::shared_ptr<const TreePath> find_path_cf_omega(TreePtr tree, std::function<Ordinal(std::uint64_t)> gamma,
                                                   std::uint64_t spot_checks) {
  const Ordinal& h = tree->height();
  if (h.is_symbolic()) {
    throw Error(ErrorCode::NotCofinal,
                "omega-1 has uncountable cofinality: every w-sequence of CNF levels stays below it");
  }
  if (h.cofinality() != Ordinal::Cofinality::Omega) {
    throw Error(ErrorCode::NotCofinal, "height " + h.to_string() + " does not have cofinality w");
  }
  for (std::uint64_t n = 0; n < spot_checks; ++n) {
    const Ordinal g = gamma(n);
    if (!(g < h)) throw Error(ErrorCode::NotCofinal, "gamma(" + std::to_string(n) + ") = " + g.to_string() + " is not below the height", {std::to_string(n)});
    if (n > 0 && !(gamma(n - 1) < g)) {
      throw Error(ErrorCode::NotCofinal, "sequence is not strictly increasing at " + std::to_string(n), {std::to_string(n)});
    }
  }
  for (std::uint64_t j = 0; j < spot_checks; ++j) {
    const Ordinal target = h.cofinal_entry(j);
    bool reached = false;
    for (std::uint64_t n = 0; n < 4 * spot_checks + 4 && !reached; ++n) reached = target <= gamma(n);
    if (!reached) {
      throw Error(ErrorCode::NotCofinal, "sequence never reaches " + target.to_string(), {target.to_string()});
    }
  }
  return std::make_shared<TreePath>(std::move(tree), std::move(gamma));
}

std::vector<Ordinal> extract_cofinal(const SKappaTree& tree, const std::vector<TreeNode>& prefix) {
  if (prefix.empty()) throw Error(ErrorCode::IncoherentPrefix, "empty prefix");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (!tree.contains(prefix[i])) {
      throw Error(ErrorCode::IncoherentPrefix, "entry " + std::to_string(i) + " is not a node", {std::to_string(i)});
    }
    if (i > 0 && !(tree.level(prefix[i - 1]) < tree.level(prefix[i]) && tree.leq(prefix[i - 1], prefix[i]))) {
      throw Error(ErrorCode::IncoherentPrefix,
                  "entry " + std::to_string(i - 1) + " is not below entry " + std::to_string(i), {std::to_string(i)});
    }
  }
  // Coherence makes every ledger an initial segment of the last one.
  std::vector<Ordinal> q = SKappaTree::ledger(prefix.back()).g;
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (!(q[i - 1] < q[i])) throw Error(ErrorCode::IncoherentPrefix, "ledger is not increasing");
  }
  return q;
}

std::shared_ptr<const SKappaTree> build_s_kappa(Ordinal height) {
  if (height.is_zero()) throw Error(ErrorCode::InvalidArgument, "S_kappa needs a positive height");
  return std::make_shared<SKappaTree>(std::move(height));
}

SearchOutcome explore_fixed_point(const DynSystem& system, std::uint64_t depth_budget, std::uint64_t width_budget) {
  SearchOutcome out;
  out.kind = SearchOutcome::Kind::BudgetExhausted;
  const Monoid& m = *system.space()->monoid();
  for (std::uint64_t n = 1; n <= depth_budget; ++n) {
    auto node = first_node(system, n, width_budget);
    if (!node) {
      out.reason = "level " + std::to_string(n) + " is empty over the first " + std::to_string(width_budget) +
                   " nodes, but the node enumeration is infinite, so nothing is certified";
      return out;
    }
    out.depth = n;
    out.best_node = node->entries;
  }
  out.reason = "coinitiality of " + m.describe() + " is " + m.coinit().to_string() +
               ": w-indexed branches are not Cauchy sequences and the tree has no paths, so no witness resolves";
  return out;
}

}  // namespace wmetric
