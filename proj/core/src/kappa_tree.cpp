#include "wmetric/kappa_tree.hpp"

#include <algorithm>
#include <functional>

#include "wmetric/error.hpp"

namespace wmetric {

bool KappaTree::leq(const TreeNode& a, const TreeNode& b) const {
  const Ordinal la = level(a);
  if (la > level(b)) return false;
  return restrict(b, la) == a;
}

// Binary tree.

BinaryTree::BinaryTree(std::set<std::string> dead) : KappaTree(Ordinal::omega()), dead_(std::move(dead)) {
  for (const auto& d : dead_) {
    if (d.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::InvalidNode, "dead node '" + d + "' is not a bit string", {d});
    }
  }
}

const std::string& BinaryTree::bits(const TreeNode& n) {
  if (!std::holds_alternative<BinaryNode>(n)) throw Error(ErrorCode::DifferentTrees, "not a binary-tree node");
  return std::get<BinaryNode>(n).bits;
}

Ordinal BinaryTree::level(const TreeNode& n) const { return Ordinal::finite(bits(n).size()); }

bool BinaryTree::contains(const TreeNode& n) const {
  if (!std::holds_alternative<BinaryNode>(n)) return false;
  const std::string& b = bits(n);
  if (b.find_first_not_of("01") != std::string::npos) return false;
  for (const auto& d : dead_) {
    if (d.size() < b.size() && b.compare(0, d.size(), d) == 0) return false;
  }
  return true;
}

TreeNode BinaryTree::restrict(const TreeNode& n, const Ordinal& i) const {
  const std::string& b = bits(n);
  if (!i.is_finite() || i.finite_value() > b.size()) {
    throw Error(ErrorCode::InvalidArgument, "cannot restrict " + format(n) + " to level " + i.to_string());
  }
  return BinaryNode{b.substr(0, i.finite_value())};
}

std::optional<TreeNode> BinaryTree::child(const TreeNode& n, std::uint64_t k) const {
  if (k > 1 || !contains(n) || dead_.contains(bits(n))) return std::nullopt;
  return BinaryNode{bits(n) + (k == 0 ? "0" : "1")};
}

std::optional<TreeNode> BinaryTree::extend_to(const TreeNode& n, const Ordinal& beta, ExtensionStyle) const {
  if (!contains(n) || !beta.is_finite()) return std::nullopt;
  const std::uint64_t target = beta.finite_value();
  if (target < bits(n).size()) return std::nullopt;
  std::function<std::optional<TreeNode>(const TreeNode&)> dfs = [&](const TreeNode& x) -> std::optional<TreeNode> {
    if (bits(x).size() == target) return x;
    for (std::uint64_t k = 0; k < 2; ++k) {
      if (auto c = child(x, k)) {
        if (auto r = dfs(*c)) return r;
      }
    }
    return std::nullopt;
  };
  return dfs(n);
}

std::optional<TreeNode> BinaryTree::enumerate(std::uint64_t i) const {
  if (dead_.empty()) {
    // Breadth-first: level L holds indices 2^L - 1 .. 2^(L+1) - 2.
    std::uint64_t level = 0;
    while (level < 63 && ((std::uint64_t{1} << (level + 1)) - 1) <= i) ++level;
    std::uint64_t r = i + 1 - (std::uint64_t{1} << level);
    std::string b(level, '0');
    for (std::uint64_t k = 0; k < level; ++k) {
      if ((r >> (level - 1 - k)) & 1U) b[k] = '1';
    }
    return BinaryNode{b};
  }
  std::lock_guard lock(mu_);
  if (bfs_.empty()) bfs_.push_back("");
  while (bfs_.size() <= i) {
    if (expanded_ == bfs_.size()) return std::nullopt;
    const std::string parent = bfs_[expanded_++];
    if (dead_.contains(parent)) continue;
    bfs_.push_back(parent + "0");
    bfs_.push_back(parent + "1");
  }
  return BinaryNode{bfs_[i]};
}

std::string BinaryTree::format(const TreeNode& n) const { return "t:" + bits(n); }

TreeNode BinaryTree::parse(std::string_view text) const {
  if (!text.starts_with("t:")) throw Error(ErrorCode::Parse, "binary node ids look like t:0101, got '" + std::string(text) + "'");
  BinaryNode n{std::string(text.substr(2))};
  if (n.bits.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::Parse, "binary node ids look like t:0101, got '" + std::string(text) + "'");
  }
  return n;
}

Ordinal BinaryTree::join(const TreeNode& a, const TreeNode& b) const {
  const std::string& x = bits(a);
  const std::string& y = bits(b);
  if (x == y) return height();
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
  return Ordinal::finite(k);
}

// S_kappa.

const LedgerNode& SKappaTree::ledger(const TreeNode& n) {
  if (!std::holds_alternative<LedgerNode>(n)) throw Error(ErrorCode::DifferentTrees, "not an S_kappa node");
  return std::get<LedgerNode>(n);
}

void SKappaTree::validate(const TreeNode& node) const {
  if (!std::holds_alternative<LedgerNode>(node)) throw Error(ErrorCode::InvalidNode, "not an S_kappa node");
  const LedgerNode& n = std::get<LedgerNode>(node);
  const std::string shown = format(node);
  if (n.g.empty() || !n.g[0].is_zero()) throw Error(ErrorCode::InvalidNode, shown + ": ledger must start with g(0) = 0", {shown});
  if (n.g.size() == 1) {
    if (!n.a.is_zero()) throw Error(ErrorCode::InvalidNode, shown + ": only the root has a one-entry ledger", {shown});
    return;
  }
  for (std::size_t i = 1; i < n.g.size(); ++i) {
    if (!(n.g[i - 1] < n.g[i])) throw Error(ErrorCode::InvalidNode, shown + ": ledger is not increasing", {shown});
  }
  if (!(n.g.back() < height())) {
    throw Error(ErrorCode::InvalidNode, shown + ": ledger entry reaches the height " + height().to_string(), {shown});
  }
  const Ordinal& lo = n.g[n.g.size() - 2];
  const Ordinal& hi = n.g.back();
  if (!(lo < n.a) || !(n.a <= hi)) {
    throw Error(ErrorCode::InvalidNode,
                shown + ": need g(n) < a <= g(n+1), i.e. " + lo.to_string() + " < " + n.a.to_string() +
                    " <= " + hi.to_string(),
                {shown});
  }
}

bool SKappaTree::contains(const TreeNode& n) const {
  try {
    validate(n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Ordinal SKappaTree::level(const TreeNode& n) const { return ledger(n).a; }

TreeNode SKappaTree::restrict(const TreeNode& node, const Ordinal& i) const {
  const LedgerNode& n = ledger(node);
  if (i > n.a) throw Error(ErrorCode::InvalidArgument, "cannot restrict " + format(node) + " to level " + i.to_string());
  if (i == n.a) return node;
  if (i.is_zero()) return root();
  std::size_t m = 1;
  while (m < n.g.size() && n.g[m] < i) ++m;
  return LedgerNode{i, std::vector<Ordinal>(n.g.begin(), n.g.begin() + static_cast<std::ptrdiff_t>(m) + 1)};
}

std::optional<TreeNode> SKappaTree::child(const TreeNode& node, std::uint64_t k) const {
  validate(node);
  const LedgerNode& n = ledger(node);
  const Ordinal next = n.a.successor();
  if (!(next < height())) return std::nullopt;
  if (n.a < n.g.back()) {
    if (k > 0) return std::nullopt;
    return LedgerNode{next, n.g};
  }
  Ordinal entry = next + Ordinal::finite(k);
  if (!(entry < height())) return std::nullopt;
  LedgerNode c{next, n.g};
  c.g.push_back(std::move(entry));
  return c;
}

std::optional<TreeNode> SKappaTree::extend_to(const TreeNode& node, const Ordinal& beta, ExtensionStyle style) const {
  validate(node);
  const LedgerNode& n = ledger(node);
  if (beta < n.a || !(beta < height())) return std::nullopt;
  if (beta == n.a) return node;
  if (beta <= n.g.back() && n.a < n.g.back()) return LedgerNode{beta, n.g};
  Ordinal entry = style == ExtensionStyle::Tight ? beta : beta.successor();
  if (!(entry < height())) return std::nullopt;
  LedgerNode c{beta, n.g};
  c.g.push_back(std::move(entry));
  return c;
}

namespace {

bool ledger_less(const LedgerNode& x, const LedgerNode& y) {
  if (x.a != y.a) return x.a < y.a;
  return std::lexicographical_compare(x.g.begin(), x.g.end(), y.g.begin(), y.g.end());
}

}  // namespace

std::optional<TreeNode> SKappaTree::enumerate(std::uint64_t i) const {
  std::lock_guard lock(mu_);
  while (enumerated_.size() <= i) {
    const std::uint64_t w = next_weight_++;
    if (w > 64) return std::nullopt;  // far beyond any sensible budget
    // Ordinals below the height by weight, for weights 1..w.
    std::vector<std::vector<Ordinal>> pool(w + 1);
    for (std::uint64_t k = 1; k <= w; ++k) {
      for (auto& o : ordinals_of_weight(k)) {
        if (o < height()) pool[k].push_back(std::move(o));
      }
    }
    std::vector<LedgerNode> batch;
    if (w == 1) batch.push_back(ledger(root()));
    std::vector<Ordinal> g{Ordinal()};
    // used = ledger length + ledger weights so far.
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t used) {
      if (g.size() >= 2 && used < w) {
        for (const auto& a : pool[w - used]) {
          if (g[g.size() - 2] < a && a <= g.back()) batch.push_back(LedgerNode{a, g});
        }
      }
      for (std::uint64_t we = 1; used + we + 1 + 1 <= w; ++we) {
        for (const auto& e : pool[we]) {
          if (!(g.back() < e)) continue;
          g.push_back(e);
          rec(used + we + 1);
          g.pop_back();
        }
      }
    };
    rec(1);
    std::sort(batch.begin(), batch.end(), ledger_less);
    enumerated_.insert(enumerated_.end(), batch.begin(), batch.end());
  }
  return enumerated_[i];
}

std::string SKappaTree::format(const TreeNode& node) const {
  const LedgerNode& n = ledger(node);
  std::string s = "s:(" + n.a.to_string() + "|";
  for (std::size_t i = 0; i < n.g.size(); ++i) s += (i ? "," : "") + n.g[i].to_string();
  return s + ")";
}

TreeNode SKappaTree::parse(std::string_view text) const {
  const std::string t(text);
  if (!text.starts_with("s:(") || !text.ends_with(")") || text.find('|') == std::string_view::npos) {
    throw Error(ErrorCode::Parse, "S_kappa node ids look like s:(3|0,2,5), got '" + t + "'");
  }
  const std::string_view body = text.substr(3, text.size() - 4);
  const std::size_t bar = body.find('|');
  LedgerNode n;
  n.a = Ordinal::parse(body.substr(0, bar));
  std::string_view rest = body.substr(bar + 1);
  while (true) {
    const std::size_t comma = rest.find(',');
    n.g.push_back(Ordinal::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return n;
}

Ordinal SKappaTree::join(const TreeNode& a, const TreeNode& b) const {
  const LedgerNode& x = ledger(a);
  const LedgerNode& y = ledger(b);
  if (x == y) return height();
  std::size_t common = 0;
  while (common < x.g.size() && common < y.g.size() && x.g[common] == y.g[common]) ++common;
  // Common lower bounds are the restrictions to levels i <= g(common-1).
  return std::min({x.a, y.a, x.g[common - 1]});
}

}  // namespace wmetric
