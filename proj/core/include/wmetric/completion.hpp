#pragma once

#include <cstdint>
#include <functional>

#include "wmetric/cauchy.hpp"

namespace wmetric {

/// Cauchy completion. Spaces over monoids that are not continuous at 0, and
/// finite spaces, are already complete and come back unchanged. Lazy spaces
/// return their presentation's completion (idempotent: a complete
/// presentation returns itself). Throws Unresolvable when a lazy
/// presentation offers no completion.
SpacePtr cauchy_completion(const SpacePtr& space);

using PointMap = std::function<Point(const Point&)>;

/// Unique non-expanding extension of f from the base points of `completed`
/// to all of its points: a limit point x goes to the limit of f o p for the
/// representative p of x (over `alpha`, resolved within `horizon` indices).
/// Non-expansion is checked exhaustively on finite spaces and on the first
/// `samples` enumerated base points otherwise; NotNonExpanding carries the
/// offending pair. The returned map throws Unresolvable for limit points the
/// presentation cannot resolve.
PointMap extend_nonexpanding(PointMap f, const SpacePtr& completed, const InitialSequence& alpha,
                             std::uint64_t samples = 64, std::uint64_t horizon = 32);

struct DenseResult {
  Verdict verdict = Verdict::Unknown;  // Yes = Dense, No = NotDense
  std::optional<Point> witness;
};

/// Finite spaces: exact (dense iff every point is in D). Lazy spaces: each
/// of the first `samples` enumerated points outside D needs a representative
/// through D up to `stage` that converges to it.
DenseResult check_dense(const std::function<bool(const Point&)>& in_d, const SpacePtr& space,
                        const InitialSequence& alpha, std::uint64_t stage, std::uint64_t samples = 64);

}  // namespace wmetric
