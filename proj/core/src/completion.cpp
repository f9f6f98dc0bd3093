#include "wmetric/completion.hpp"

#include <limits>

#include "wmetric/error.hpp"

namespace wmetric {

SpacePtr cauchy_completion(const SpacePtr& space) {
  if (!space->monoid()->continuous_at_zero()) return space;
  if (space->is_finite() || space->completeness() != Completeness::Unknown) return space;
  if (auto c = space->completion()) return c;
  throw Error(ErrorCode::Unresolvable, space->describe() + " has no completion presentation");
}

namespace {

std::vector<Point> base_sample(const WSpace& space, std::uint64_t samples) {
  std::vector<Point> out;
  const std::uint64_t limit = space.is_finite() ? std::numeric_limits<std::uint64_t>::max() : samples;
  for (std::uint64_t i = 0; i < limit; ++i) {
    auto p = space.enumerate(i);
    if (!p) break;
    if (p->origin == Origin::Base) out.push_back(*p);
  }
  return out;
}

}  // namespace

PointMap extend_nonexpanding(PointMap f, const SpacePtr& completed, const InitialSequence& alpha,
                             std::uint64_t samples, std::uint64_t horizon) {
  const Monoid& m = *completed->monoid();
  const std::vector<Point> pts = base_sample(*completed, samples);
  for (const auto& x : pts) {
    for (const auto& y : pts) {
      const DistanceValue before = completed->distance(x, y);
      const DistanceValue after = completed->distance(f(x), f(y));
      if (!m.leq(after, before)) {
        throw Error(ErrorCode::NotNonExpanding,
                    "d(f(" + x.id + "), f(" + y.id + ")) = " + m.format(after) + " exceeds d(" + x.id + ", " + y.id +
                        ") = " + m.format(before),
                    {x.id, y.id});
      }
    }
  }
  return [f, completed, alpha, horizon](const Point& p) -> Point {
    if (p.origin == Origin::Base) return f(p);
    auto rep = completed->representative(p, alpha);
    if (!rep) throw Error(ErrorCode::Unresolvable, "no representative sequence for " + p.id, {p.id});
    auto image = rep->compose(f, completed);
    auto limit = completed->resolve_limit(image, horizon);
    if (!limit) throw Error(ErrorCode::Unresolvable, "image of " + p.id + " has no resolvable limit", {p.id});
    return *limit;
  };
}

DenseResult check_dense(const std::function<bool(const Point&)>& in_d, const SpacePtr& space,
                        const InitialSequence& alpha, std::uint64_t stage, std::uint64_t samples) {
  if (space->is_finite()) {
    // Off-diagonal distances are bounded away from 0, so only D itself is
    // approximable by D.
    for (std::uint64_t i = 0;; ++i) {
      auto p = space->enumerate(i);
      if (!p) return {Verdict::Yes, std::nullopt};
      if (!in_d(*p)) return {Verdict::No, p};
    }
  }
  bool unknown = false;
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto p = space->enumerate(i);
    if (!p) break;
    if (in_d(*p)) continue;
    auto rep = space->representative(*p, alpha);
    if (!rep) {
      unknown = true;
      continue;
    }
    for (std::uint64_t k = 0; k <= stage; ++k) {
      if (!in_d((*rep)(k))) {
        unknown = true;
        break;
      }
    }
    const EquivResult r = converges_to(*rep, *p, stage);
    if (r.verdict == Verdict::No) return {Verdict::No, p};
    if (r.verdict == Verdict::Unknown) unknown = true;
  }
  if (unknown) return {};
  return {Verdict::Yes, std::nullopt};
}

}  // namespace wmetric
