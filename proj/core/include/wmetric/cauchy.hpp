#pragma once

#include <cstdint>
#include <optional>

#include "wmetric/space.hpp"

namespace wmetric {

/// Stage-s bracket around d_Cseq(p, q).
struct SeqDistanceBound {
  DistanceValue lower;
  DistanceValue upper;
  std::uint64_t stage = 0;

  bool collapsed() const { return lower == upper; }
};

/// upper = min over i, j <= stage of d(p(i), q(j)) + alpha_p(i) + alpha_q(j);
/// lower = max over t <= stage of the residual of d(p(t), q(t)) by
/// 2 alpha_p(t) + 2 alpha_q(t). The bracket collapses to d(x, y) once both
/// sequences have a known limit at this stage (structural constancy, finite
/// space stabilization, or a limit claim verified up to the stage).
/// Throws DifferentSpaces if p and q live in different spaces.
SeqDistanceBound seq_distance(const CauchySequence& p, const CauchySequence& q, std::uint64_t stage);

enum class Verdict { Yes, No, Unknown };

struct EquivResult {
  Verdict verdict = Verdict::Unknown;  // Yes = equivalent, No = distinct
  /// For distinct sequences: a positive lower bound and its direction
  /// (true when it bounds d(p, q), false for d(q, p)).
  std::optional<DistanceValue> witness;
  bool forward = true;
};

EquivResult seq_equiv(const CauchySequence& p, const CauchySequence& q, std::uint64_t stage);

/// p converges to x, read as p equivalent to the constant sequence at x.
EquivResult converges_to(const CauchySequence& p, const Point& x, std::uint64_t stage);

/// Limit of p if it is known at this stage.
std::optional<Point> known_limit(const CauchySequence& p, std::uint64_t stage);

}  // namespace wmetric
