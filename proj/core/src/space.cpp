#include "wmetric/space.hpp"

#include <set>

#include "wmetric/error.hpp"

namespace wmetric {

std::optional<CauchySequence> WSpace::representative(const Point& p, const InitialSequence& alpha) const {
  if (p.origin != Origin::Base || !contains(p)) return std::nullopt;
  return CauchySequence::constant(self(), alpha, p);
}

std::optional<Point> WSpace::resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const {
  if (auto k = seq.constant_from()) return seq(*k);
  if (seq.claim() && seq.claim_holds(horizon)) return seq.claim()->limit;
  return std::nullopt;
}

std::optional<Point> WSpace::resolve_branch(const std::vector<Point>&) const { return std::nullopt; }

bool declared_infinite(const WSpace& space) {
  if (space.is_finite()) return false;
  if (const auto* fs = dynamic_cast<const FunctionSpace*>(&space)) return fs->declared_infinite();
  return true;
}

FiniteSpace::FiniteSpace(MonoidPtr monoid, std::vector<std::string> names,
                         std::vector<std::vector<DistanceValue>> matrix)
    : WSpace(std::move(monoid)), names_(std::move(names)), matrix_(std::move(matrix)) {}

std::shared_ptr<const FiniteSpace> FiniteSpace::create(MonoidPtr monoid, std::vector<std::string> names,
                                                       std::vector<std::vector<DistanceValue>> matrix) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::MalformedMatrix, "a space needs at least one point");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw Error(ErrorCode::MalformedMatrix, "empty point name");
    if (!seen.insert(name).second) throw Error(ErrorCode::MalformedMatrix, "duplicate point '" + name + "'", {name});
  }
  if (matrix.size() != n) {
    throw Error(ErrorCode::MalformedMatrix,
                "distance matrix has " + std::to_string(matrix.size()) + " rows, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorCode::MalformedMatrix, "row '" + names[i] + "' has " + std::to_string(matrix[i].size()) +
                                                  " entries, expected " + std::to_string(n),
                  {names[i]});
    }
    for (const auto& v : matrix[i]) {
      if (!monoid->contains(v)) {
        throw Error(ErrorCode::MalformedMatrix, "row '" + names[i] + "' has an entry outside " + monoid->describe(),
                    {names[i]});
      }
    }
  }
  auto space = std::make_shared<FiniteSpace>(std::move(monoid), std::move(names), std::move(matrix));
  for (std::size_t i = 0; i < n; ++i) space->index_.emplace(space->names_[i], i);
  const Monoid& m = *space->monoid();
  for (const auto& row : space->matrix_) {
    for (const auto& v : row) {
      if (m.is_zero(v)) continue;
      if (!space->min_positive_ || m.less(v, *space->min_positive_)) space->min_positive_ = v;
    }
  }
  return space;
}

std::string FiniteSpace::describe() const {
  return "finite space of " + std::to_string(names_.size()) + " points over " + monoid()->describe();
}

std::optional<Point> FiniteSpace::enumerate(std::uint64_t i) const {
  if (i >= names_.size()) return std::nullopt;
  return point(i);
}

std::size_t FiniteSpace::index_of(const Point& p) const {
  auto it = index_.find(p.id);
  if (it == index_.end()) throw Error(ErrorCode::InvalidArgument, "point '" + p.id + "' is not in the space", {p.id});
  return it->second;
}

DistanceValue FiniteSpace::distance(const Point& x, const Point& y) const {
  return matrix_[index_of(x)][index_of(y)];
}

std::vector<Point> FiniteSpace::points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(point(i));
  return out;
}

std::optional<Point> FiniteSpace::resolve_limit(const CauchySequence& seq, std::uint64_t horizon) const {
  if (auto p = WSpace::resolve_limit(seq, horizon)) return p;
  // Once alpha(t) + alpha(t') stays below every nonzero distance the
  // sequence cannot move any more.
  if (!min_positive_) return seq(0);
  const Monoid& m = *monoid();
  for (std::uint64_t t = 0; t < horizon && t < seq.alpha().natural_length(); ++t) {
    if (m.less(m.multiply(2, seq.alpha()(t)), *min_positive_)) return seq(t);
  }
  return std::nullopt;
}

LawReport check_space_axioms(const FiniteSpace& space) {
  const Monoid& m = *space.monoid();
  const auto& d = space.matrix();
  const auto& names = space.names();
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const bool both_zero = m.is_zero(d[x][y]) && m.is_zero(d[y][x]);
      if (both_zero != (x == y)) {
        return LawReport::fail("identity", {names[x], names[y]},
                               x == y ? "d(" + names[x] + "," + names[x] + ") = " + m.format(d[x][x]) + " is not 0"
                                      : "d(" + names[x] + "," + names[y] + ") and d(" + names[y] + "," + names[x] +
                                            ") are both 0");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const DistanceValue via = m.add(d[x][y], d[y][z]);
        if (m.less(via, d[x][z])) {
          return LawReport::fail("triangle", {names[x], names[y], names[z]},
                                 "d(" + names[x] + "," + names[z] + ") = " + m.format(d[x][z]) + " > d(" + names[x] +
                                     "," + names[y] + ") + d(" + names[y] + "," + names[z] + ") = " + m.format(via));
        }
      }
    }
  }
  return LawReport::pass();
}

CauchySequence CauchySequence::constant(SpacePtr space, InitialSequence alpha, Point x) {
  CauchySequence s(std::move(space), std::move(alpha), [x](std::uint64_t) { return x; });
  s.constant_from_ = 0;
  return s;
}

CauchySequence CauchySequence::eventually_constant(SpacePtr space, InitialSequence alpha, std::vector<Point> prefix) {
  if (prefix.empty()) throw Error(ErrorCode::InvalidArgument, "eventually constant sequence needs a prefix");
  const std::uint64_t k = prefix.size() - 1;
  CauchySequence s(std::move(space), std::move(alpha),
                   [prefix = std::move(prefix), k](std::uint64_t i) { return prefix[std::min(i, k)]; });
  s.constant_from_ = k;
  return s;
}

CauchySequence CauchySequence::from_function(SpacePtr space, InitialSequence alpha, Assign assign,
                                             std::optional<LimitClaim> claim) {
  CauchySequence s(std::move(space), std::move(alpha), std::move(assign));
  s.claim_ = std::move(claim);
  return s;
}

CauchySequence CauchySequence::restrict(std::function<std::uint64_t(std::uint64_t)> sigma) const {
  const InitialSequence& a = alpha_;
  InitialSequence sub(a.monoid(), a.index_bound(), a.factor(),
                      [a, sigma](const Ordinal& i) { return a(sigma(i.finite_value())); });
  auto assign = assign_;
  CauchySequence s(space_, std::move(sub), [assign, sigma](std::uint64_t i) { return assign(sigma(i)); });
  if (constant_from_) {
    // sigma is strictly increasing, so sigma(i) >= k from i = k on.
    s.constant_from_ = *constant_from_;
  }
  s.claim_ = claim_;
  return s;
}

CauchySequence CauchySequence::compose(std::function<Point(const Point&)> f, SpacePtr target) const {
  auto assign = assign_;
  CauchySequence s(std::move(target), alpha_, [assign, f](std::uint64_t i) { return f(assign(i)); });
  s.constant_from_ = constant_from_;
  return s;
}

CauchySequence CauchySequence::with_claim(LimitClaim claim) const {
  CauchySequence s = *this;
  s.claim_ = std::move(claim);
  return s;
}

LawReport CauchySequence::check_bound(std::uint64_t stage) const {
  const Monoid& m = *space_->monoid();
  for (std::uint64_t i = 0; i <= stage; ++i) {
    for (std::uint64_t j = 0; j <= stage; ++j) {
      const DistanceValue d = space_->distance((*this)(i), (*this)(j));
      const DistanceValue b = m.add(alpha_(i), alpha_(j));
      if (!m.leq(d, b)) {
        return LawReport::fail("cauchy bound", {std::to_string(i), std::to_string(j)},
                               "d(p(" + std::to_string(i) + "), p(" + std::to_string(j) + ")) = " + m.format(d) +
                                   " exceeds " + m.format(b));
      }
    }
  }
  return LawReport::pass();
}

bool CauchySequence::claim_holds(std::uint64_t stage) const {
  if (!claim_) return false;
  const Monoid& m = *space_->monoid();
  if (!space_->contains(claim_->limit)) return false;
  for (std::uint64_t i = 0; i <= stage && i < alpha_.natural_length(); ++i) {
    const DistanceValue bound = m.multiply(claim_->modulus, alpha_(i));
    const Point p = (*this)(i);
    if (!m.leq(space_->distance(p, claim_->limit), bound) || !m.leq(space_->distance(claim_->limit, p), bound)) {
      return false;
    }
  }
  return true;
}

}  // namespace wmetric
