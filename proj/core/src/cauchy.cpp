#include "wmetric/cauchy.hpp"

#include "wmetric/error.hpp"

namespace wmetric {

std::optional<Point> known_limit(const CauchySequence& p, std::uint64_t stage) {
  if (auto k = p.constant_from(); k && *k <= stage) return p(*k);
  if (auto m = p.space()->min_positive_distance()) {
    const Monoid& mon = *p.space()->monoid();
    for (std::uint64_t t = 0; t <= stage && t < p.alpha().natural_length(); ++t) {
      if (mon.less(mon.multiply(2, p.alpha()(t)), *m)) return p(t);
    }
  } else if (p.space()->is_finite()) {
    return p(0);  // a one-point space
  }
  if (p.claim() && p.claim_holds(stage)) return p.claim()->limit;
  return std::nullopt;
}

SeqDistanceBound seq_distance(const CauchySequence& p, const CauchySequence& q, std::uint64_t stage) {
  if (p.space() != q.space()) throw Error(ErrorCode::DifferentSpaces, "sequences live in different spaces");
  const WSpace& space = *p.space();
  const Monoid& m = *space.monoid();
  stage = std::min({stage, p.alpha().natural_length() - 1, q.alpha().natural_length() - 1});

  std::vector<Point> ps;
  std::vector<Point> qs;
  std::vector<DistanceValue> ap;
  std::vector<DistanceValue> aq;
  for (std::uint64_t i = 0; i <= stage; ++i) {
    ps.push_back(p(i));
    qs.push_back(q(i));
    ap.push_back(p.alpha()(i));
    aq.push_back(q.alpha()(i));
  }

  DistanceValue upper = m.top();
  DistanceValue lower = m.zero();
  for (std::uint64_t i = 0; i <= stage; ++i) {
    for (std::uint64_t j = 0; j <= stage; ++j) {
      upper = m.min(upper, m.add(space.distance(ps[i], qs[j]), m.add(ap[i], aq[j])));
    }
    const DistanceValue slack = m.multiply(2, m.add(ap[i], aq[i]));
    lower = m.max(lower, m.residual(space.distance(ps[i], qs[i]), slack));
  }

  auto lp = known_limit(p, stage);
  auto lq = known_limit(q, stage);
  if (lp && lq) {
    const DistanceValue exact = space.distance(*lp, *lq);
    if (m.leq(lower, exact) && m.leq(exact, upper)) return {exact, exact, stage};
  }
  return {lower, upper, stage};
}

EquivResult seq_equiv(const CauchySequence& p, const CauchySequence& q, std::uint64_t stage) {
  const Monoid& m = *p.space()->monoid();
  const SeqDistanceBound pq = seq_distance(p, q, stage);
  const SeqDistanceBound qp = seq_distance(q, p, stage);
  if (!m.is_zero(pq.lower)) return {Verdict::No, pq.lower, true};
  if (!m.is_zero(qp.lower)) return {Verdict::No, qp.lower, false};
  if (m.is_zero(pq.upper) && m.is_zero(qp.upper)) return {Verdict::Yes, std::nullopt, true};
  return {};
}

EquivResult converges_to(const CauchySequence& p, const Point& x, std::uint64_t stage) {
  return seq_equiv(p, CauchySequence::constant(p.space(), p.alpha(), x), stage);
}

}  // namespace wmetric
