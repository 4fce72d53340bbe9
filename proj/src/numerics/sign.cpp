#include "chyp/numerics/sign.hpp"

#include <cmath>
#include <string>

#include "chyp/numerics/errors.hpp"

namespace chyp {

SignVerdict certified_sign(double x, double zero_snap) {
  if (std::isnan(x)) throw DomainError("sign of NaN");
  if (std::fabs(x) < zero_snap) return SignVerdict::Zero;
  return x > 0.0 ? SignVerdict::Positive : SignVerdict::Negative;
}

SignVerdict certified_sign(const Interval& x, double /*zero_snap*/) {
  if (x.lower() > 0.0) return SignVerdict::Positive;
  if (x.upper() < 0.0) return SignVerdict::Negative;
  return SignVerdict::Indeterminate;
}

std::string_view to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::Positive: return "positive";
    case SignVerdict::Negative: return "negative";
    case SignVerdict::Zero: return "zero";
    case SignVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

SignVerdict sign_verdict_from_string(std::string_view s) {
  if (s == "positive") return SignVerdict::Positive;
  if (s == "negative") return SignVerdict::Negative;
  if (s == "zero") return SignVerdict::Zero;
  if (s == "indeterminate") return SignVerdict::Indeterminate;
  throw PreconditionError("unknown sign verdict '" + std::string(s) + "'");
}

}  // namespace chyp
