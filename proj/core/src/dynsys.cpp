#include "wmetric/dynsys.hpp"

#include <algorithm>
#include <thread>

#include "wmetric/error.hpp"

namespace wmetric {

DynSystem::DynSystem(SpacePtr space, PointMap map, DenseEnumerator dense, bool dense_finite, InitialSequence alpha)
    : space_(std::move(space)),
      map_(std::move(map)),
      dense_(std::move(dense)),
      dense_finite_(dense_finite),
      alpha_(std::move(alpha)) {
  if (alpha_.factor() < 4) {
    throw Error(ErrorCode::InvalidArgument, "approximation trees need a nice sequence with factor >= 4");
  }
  if (*alpha_.monoid() != *space_->monoid()) {
    throw Error(ErrorCode::MixedInstances, "initial sequence and space use different monoids");
  }
}

DynSystem DynSystem::finite(std::shared_ptr<const FiniteSpace> space, const std::vector<std::size_t>& map,
                            InitialSequence alpha) {
  if (map.size() != space->size()) {
    throw Error(ErrorCode::InvalidArgument, "map has " + std::to_string(map.size()) + " entries for " +
                                                std::to_string(space->size()) + " points");
  }
  for (std::size_t v : map) {
    if (v >= space->size()) throw Error(ErrorCode::InvalidArgument, "map image out of range");
  }
  auto fs = space;
  PointMap f = [fs, map](const Point& p) { return fs->point(map[fs->index_of(p)]); };
  DenseEnumerator d = [fs](std::uint64_t i) { return fs->enumerate(i); };
  return DynSystem(std::move(space), std::move(f), std::move(d), true, std::move(alpha));
}

std::string to_string(SearchOutcome::Kind kind) {
  switch (kind) {
    case SearchOutcome::Kind::FixedPointFound: return "FixedPointFound";
    case SearchOutcome::Kind::CertifiedNoFixedPoint: return "CertifiedNoFixedPoint";
    case SearchOutcome::Kind::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

LawReport check_nonexpanding(const DynSystem& system, const std::vector<std::pair<Point, Point>>& pairs) {
  const WSpace& s = *system.space();
  const Monoid& m = *s.monoid();
  for (const auto& [x, y] : pairs) {
    const DistanceValue before = s.distance(x, y);
    const DistanceValue after = s.distance(system.apply(x), system.apply(y));
    if (!m.leq(after, before)) {
      return LawReport::fail("non-expanding", {x.id, y.id},
                             "d(f(" + x.id + "), f(" + y.id + ")) = " + m.format(after) + " > d(" + x.id + ", " +
                                 y.id + ") = " + m.format(before));
    }
  }
  return LawReport::pass();
}

std::vector<std::pair<Point, Point>> dense_pairs(const DynSystem& system, std::uint64_t limit) {
  std::vector<Point> pts;
  for (std::uint64_t i = 0; system.dense_finite() || i < limit; ++i) {
    auto p = system.dense(i);
    if (!p) break;
    pts.push_back(*p);
  }
  std::vector<std::pair<Point, Point>> out;
  for (const auto& x : pts) {
    for (const auto& y : pts) out.emplace_back(x, y);
  }
  return out;
}

namespace {

// The first `width` dense points with their images and the per-index
// approximate-fixed-point test.
struct Candidates {
  std::vector<Point> pts;
  std::vector<Point> images;
  bool exhausted = false;  // D ran out within the width
};

Candidates gather(const DynSystem& sys, std::uint64_t width) {
  if (width == 0) throw Error(ErrorCode::BudgetTooSmall, "width budget must be positive");
  Candidates c;
  for (std::uint64_t i = 0; i < width; ++i) {
    auto p = sys.dense(i);
    if (!p) {
      if (!sys.dense_finite()) {
        throw Error(ErrorCode::BudgetTooSmall, "dense enumeration of an infinite presentation stopped after " +
                                                   std::to_string(i) + " of " + std::to_string(width) + " points");
      }
      c.exhausted = true;
      break;
    }
    c.images.push_back(sys.apply(*p));
    c.pts.push_back(std::move(*p));
  }
  if (!c.exhausted && sys.dense_finite() && !sys.dense(width)) c.exhausted = true;
  return c;
}

class NodeChecker {
 public:
  NodeChecker(const DynSystem& sys, const Candidates& c) : sys_(sys), c_(c), m_(*sys.space()->monoid()) {}

  // Can candidate k sit at position i after the entries in `prefix`?
  bool fits(const std::vector<std::uint64_t>& prefix, std::uint64_t k) const {
    const std::uint64_t i = prefix.size();
    const DistanceValue ai = sys_.alpha()(i);
    const WSpace& s = *sys_.space();
    if (!m_.leq(s.distance(c_.pts[k], c_.images[k]), ai) || !m_.leq(s.distance(c_.images[k], c_.pts[k]), ai)) {
      return false;
    }
    for (std::uint64_t j = 0; j < i; ++j) {
      const DistanceValue bound = m_.add(sys_.alpha()(j), ai);
      const Point& xj = c_.pts[prefix[j]];
      if (!m_.leq(s.distance(xj, c_.pts[k]), bound) || !m_.leq(s.distance(c_.pts[k], xj), bound)) return false;
    }
    return true;
  }

  std::size_t width() const { return c_.pts.size(); }
  const Candidates& candidates() const { return c_; }

 private:
  const DynSystem& sys_;
  const Candidates& c_;
  const Monoid& m_;
};

ApproxNode make_node(const Candidates& c, const std::vector<std::uint64_t>& idx) {
  ApproxNode n;
  n.indices = idx;
  for (auto k : idx) n.entries.push_back(c.pts[k]);
  return n;
}

bool dfs_first(const NodeChecker& chk, std::uint64_t depth, std::vector<std::uint64_t>& prefix) {
  if (prefix.size() == depth) return true;
  for (std::uint64_t k = 0; k < chk.width(); ++k) {
    if (!chk.fits(prefix, k)) continue;
    prefix.push_back(k);
    if (dfs_first(chk, depth, prefix)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::vector<ApproxNode> level_nodes(const DynSystem& system, std::uint64_t depth, std::uint64_t width_budget) {
  const Candidates c = gather(system, width_budget);
  const NodeChecker chk(system, c);
  std::vector<std::vector<std::uint64_t>> level{{}};
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  for (std::uint64_t d = 0; d < depth && !level.empty(); ++d) {
    std::vector<std::vector<std::vector<std::uint64_t>>> children(level.size());
    auto expand = [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) {
        for (std::uint64_t k = 0; k < chk.width(); ++k) {
          if (!chk.fits(level[p], k)) continue;
          auto child = level[p];
          child.push_back(k);
          children[p].push_back(std::move(child));
        }
      }
    };
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    if (level.size() < 2 * workers) {
      expand(0, level.size());
    } else {
      std::vector<std::thread> pool;
      for (std::size_t b = 0; b < level.size(); b += chunk) {
        pool.emplace_back(expand, b, std::min(level.size(), b + chunk));
      }
      for (auto& t : pool) t.join();
    }
    std::vector<std::vector<std::uint64_t>> next;
    for (auto& group : children) {
      for (auto& child : group) next.push_back(std::move(child));
    }
    level = std::move(next);
  }
  std::vector<ApproxNode> out;
  out.reserve(level.size());
  for (const auto& idx : level) out.push_back(make_node(c, idx));
  return out;
}

std::optional<ApproxNode> first_node(const DynSystem& system, std::uint64_t depth, std::uint64_t width_budget) {
  const Candidates c = gather(system, width_budget);
  const NodeChecker chk(system, c);
  std::vector<std::uint64_t> prefix;
  if (!dfs_first(chk, depth, prefix)) return std::nullopt;
  return make_node(c, prefix);
}

SearchOutcome decide_fixed_point(const DynSystem& system, std::uint64_t depth_budget, std::uint64_t width_budget) {
  const Monoid& m = *system.space()->monoid();
  if (m.coinit().kind != CoinitDescriptor::Kind::Omega) {
    throw Error(ErrorCode::WrongCoinitiality,
                "approximation-tree search needs coinitiality w; " + m.describe() + " has " + m.coinit().to_string());
  }
  const Candidates c = gather(system, width_budget);
  const NodeChecker chk(system, c);
  const bool finite = system.space()->is_finite();
  const auto min_positive = system.space()->min_positive_distance();

  SearchOutcome out;
  std::vector<std::uint64_t> best;
  for (std::uint64_t n = 1; n <= depth_budget; ++n) {
    std::vector<std::uint64_t> prefix;
    if (!dfs_first(chk, n, prefix)) {
      if (c.exhausted) {
        out.kind = SearchOutcome::Kind::CertifiedNoFixedPoint;
        out.depth = n;
        out.best_node = make_node(c, best).entries;
        out.reason = "level " + std::to_string(n) + " of the approximation tree is empty over all " +
                     std::to_string(c.pts.size()) + " dense points";
        return out;
      }
      out.kind = SearchOutcome::Kind::BudgetExhausted;
      out.depth = n - 1;
      out.best_node = make_node(c, best).entries;
      out.reason = "level " + std::to_string(n) + " is empty over the first " + std::to_string(c.pts.size()) +
                   " dense points but the dense set is not exhausted";
      return out;
    }
    best = prefix;
    if (finite) {
      const std::uint64_t k = best.back();
      const bool exact = !min_positive || m.less(system.alpha()(n - 1), *min_positive);
      if (exact && c.images[k] == c.pts[k]) {
        out.kind = SearchOutcome::Kind::FixedPointFound;
        out.witness = c.pts[k];
        out.residual = m.zero();
        out.depth = n;
        out.best_node = make_node(c, best).entries;
        out.reason = "alpha(" + std::to_string(n - 1) + ") is below every nonzero distance, so entry " +
                     std::to_string(n - 1) + " is fixed";
        return out;
      }
    }
  }
  out.depth = depth_budget;
  out.best_node = make_node(c, best).entries;
  if (!finite && !best.empty()) {
    if (auto limit = system.space()->resolve_branch(out.best_node)) {
      out.kind = SearchOutcome::Kind::FixedPointFound;
      out.witness = *limit;
      out.residual = system.alpha()(depth_budget);
      out.reason = "branch surviving to depth " + std::to_string(depth_budget) + " resolves to a limit point";
      return out;
    }
  }
  out.kind = SearchOutcome::Kind::BudgetExhausted;
  out.reason = finite ? "depth budget ends before alpha drops below the least nonzero distance"
                      : "surviving branch at depth " + std::to_string(depth_budget) + " has no resolvable limit";
  return out;
}

namespace {

void validate_chain(const std::vector<Point>& chain, const DynSystem& system) {
  const WSpace& s = *system.space();
  const Monoid& m = *s.monoid();
  const auto& a = system.alpha();
  auto fail = [](std::size_t i, std::size_t j, const std::string& why) {
    throw Error(ErrorCode::InvalidChain, why, {std::to_string(i), std::to_string(j)});
  };
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Point fx = system.apply(chain[i]);
    if (!m.leq(s.distance(chain[i], fx), a(i)) || !m.leq(s.distance(fx, chain[i]), a(i))) {
      fail(i, i, "entry " + std::to_string(i) + " is not an alpha(" + std::to_string(i) + ")-fixed point");
    }
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      const DistanceValue bound = m.add(a(i), a(j));
      if (!m.leq(s.distance(chain[i], chain[j]), bound) || !m.leq(s.distance(chain[j], chain[i]), bound)) {
        fail(i, j, "entries " + std::to_string(i) + " and " + std::to_string(j) + " violate the pairwise bound");
      }
    }
  }
}

}  // namespace

CauchySequence branch_to_limit(const std::vector<Point>& chain, const DynSystem& system) {
  if (chain.empty()) throw Error(ErrorCode::InvalidChain, "empty chain");
  validate_chain(chain, system);
  const WSpace& s = *system.space();
  const Monoid& m = *s.monoid();
  const Point& last = chain.back();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const DistanceValue ai = system.alpha()(i);
    if (!m.leq(s.distance(chain[i], last), ai) || !m.leq(s.distance(last, chain[i]), ai)) {
      throw Error(ErrorCode::InvalidChain, "constant padding with the last entry breaks the bound at " + std::to_string(i),
                  {std::to_string(i), std::to_string(chain.size())});
    }
  }
  return CauchySequence::eventually_constant(system.space(), system.alpha(), chain);
}

CauchySequence branch_to_limit(const std::function<Point(std::uint64_t)>& chain, const DynSystem& system,
                               std::uint64_t verify_prefix) {
  std::vector<Point> prefix;
  for (std::uint64_t i = 0; i < verify_prefix; ++i) prefix.push_back(chain(i));
  validate_chain(prefix, system);
  auto seq = CauchySequence::from_function(system.space(), system.alpha(), chain);
  if (auto limit = system.space()->resolve_limit(seq, verify_prefix)) {
    auto claimed = seq.with_claim(LimitClaim{*limit, 1});
    if (claimed.claim_holds(verify_prefix)) return claimed;
  }
  return seq;
}

}  // namespace wmetric
