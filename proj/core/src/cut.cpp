#include "wmetric/cut.hpp"

#include "wmetric/error.hpp"

namespace wmetric {

Cut Cut::principal(MonoidPtr m, DistanceValue v) { return generated(std::move(m), {std::move(v)}); }

Cut Cut::generated(MonoidPtr m, std::vector<DistanceValue> generators) {
  for (const auto& g : generators) {
    if (!m->contains(g)) throw Error(ErrorCode::MixedInstances, "generator does not belong to " + m->describe());
  }
  Cut c;
  c.monoid_ = std::move(m);
  c.generators_ = std::move(generators);
  c.label_ = "finite";
  return c;
}

Cut Cut::stream(MonoidPtr m, Stream bounds, std::optional<DistanceValue> declared_meet, std::string label) {
  Cut c;
  c.monoid_ = std::move(m);
  c.stream_ = std::move(bounds);
  c.declared_ = std::move(declared_meet);
  c.label_ = std::move(label);
  return c;
}

DistanceValue Cut::bound(std::uint64_t n) const {
  if (stream_) return stream_(n);
  return monoid_->meet(generators_);
}

std::optional<DistanceValue> Cut::value() const {
  if (stream_) return declared_;
  return monoid_->meet(generators_);
}

std::optional<std::uint64_t> Cut::first_bound_at_or_below(const DistanceValue& q, std::uint64_t horizon) const {
  if (!stream_) {
    if (monoid_->leq(bound(0), q)) return 0;
    return std::nullopt;
  }
  for (std::uint64_t n = 0; n < horizon; ++n) {
    if (monoid_->leq(stream_(n), q)) return n;
  }
  return std::nullopt;
}

std::optional<std::strong_ordering> Cut::compare(const Cut& rhs) const {
  if (*monoid_ != *rhs.monoid_) throw Error(ErrorCode::MixedInstances, "cuts over different monoids");
  auto a = value();
  auto b = rhs.value();
  if (!a || !b) return std::nullopt;
  return monoid_->compare(*a, *b);
}

std::string Cut::describe() const {
  if (stream_) {
    std::string s = label_ + "[" + monoid_->format(stream_(0)) + ", " + monoid_->format(stream_(1)) + ", ...]";
    if (declared_) s += " meet " + monoid_->format(*declared_);
    return s;
  }
  std::string s = "{";
  for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + monoid_->format(generators_[i]);
  return s + "}";
}

Cut completion_add(const Cut& a, const Cut& b) {
  if (*a.monoid() != *b.monoid()) throw Error(ErrorCode::MixedInstances, "cuts over different monoids");
  const MonoidPtr& m = a.monoid();
  if (a.is_finite() && b.is_finite()) {
    std::vector<DistanceValue> sums;
    for (const auto& x : a.generators()) {
      for (const auto& y : b.generators()) sums.push_back(m->add(x, y));
    }
    // An empty side is the top cut, which absorbs.
    if (a.generators().empty() || b.generators().empty()) sums.clear();
    return Cut::generated(m, std::move(sums));
  }
  std::optional<DistanceValue> meet;
  if (auto va = a.value(), vb = b.value(); va && vb) meet = m->add(*va, *vb);
  return Cut::stream(
      m, [a, b, m](std::uint64_t n) { return m->add(a.bound(n), b.bound(n)); }, meet,
      "(" + a.label() + "+" + b.label() + ")");
}

Cut CutEmbedding::operator()(const Cut& c) const {
  if (*c.monoid() != *base_) throw Error(ErrorCode::MixedInstances, "cut is not over the embedding's base");
  if (c.is_finite()) {
    std::vector<DistanceValue> images;
    for (const auto& g : c.generators()) images.push_back(map_(g));
    return Cut::generated(target_, std::move(images));
  }
  std::optional<DistanceValue> meet;
  if (auto v = c.value()) meet = map_(*v);
  auto map = map_;
  return Cut::stream(
      target_, [c, map](std::uint64_t n) { return map(c.bound(n)); }, meet, c.label());
}

CutEmbedding embed_into_complete(MonoidPtr base, MonoidPtr target, CutEmbedding::ElementMap map,
                                 const std::vector<DistanceValue>& sample) {
  auto fail = [&](const DistanceValue& a, const DistanceValue& b, const std::string& why) {
    throw Error(ErrorCode::NotAnEmbedding, why, {base->format(a), base->format(b)});
  };
  if (!target->is_zero(map(base->zero()))) fail(base->zero(), base->zero(), "0 is not mapped to 0");
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      const DistanceValue ia = map(a);
      const DistanceValue ib = map(b);
      if (base->compare(a, b) != target->compare(ia, ib)) {
        fail(a, b, "order not preserved on (" + base->format(a) + ", " + base->format(b) + ")");
      }
      const DistanceValue lhs = map(base->add(a, b));
      const DistanceValue rhs = target->add(ia, ib);
      if (lhs != rhs) {
        fail(a, b,
             "i(" + base->format(a) + "+" + base->format(b) + ") = " + target->format(lhs) + " but i(a)+i(b) = " +
                 target->format(rhs));
      }
    }
  }
  return CutEmbedding(std::move(base), std::move(target), std::move(map));
}

}  // namespace wmetric
