#pragma once

#include <string_view>

#include "chyp/numerics/interval.hpp"

namespace chyp {

enum class SignVerdict {
  Positive,
  Negative,
  // Approximate backend only: |x| fell below the zero-snap tolerance.
  Zero,
  // Enclosure backend only: the enclosure contains zero.
  Indeterminate,
};

inline constexpr double kDefaultZeroSnap = 1e-12;

// Approximate backend: sign of the point value, snapping |x| < zero_snap to Zero.
SignVerdict certified_sign(double x, double zero_snap = kDefaultZeroSnap);
// Enclosure backend: Positive iff lower > 0, Negative iff upper < 0.
SignVerdict certified_sign(const Interval& x, double zero_snap = kDefaultZeroSnap);

std::string_view to_string(SignVerdict v);
SignVerdict sign_verdict_from_string(std::string_view s);

}  // namespace chyp
