#include "chyp/numerics/interval.hpp"

#include <ostream>

namespace chyp {

Interval::Interval(double value) : lo_(value), hi_(value) {
  if (std::isnan(value)) throw DomainError("interval from NaN");
}

Interval::Interval(double lower, double upper) : lo_(lower), hi_(upper) {
  if (std::isnan(lower) || std::isnan(upper) || lower > upper)
    throw DomainError("malformed interval bounds");
}

Interval& Interval::operator+=(const Interval& o) {
  *this = raw(round_down(lo_ + o.lo_), round_up(hi_ + o.hi_));
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  *this = raw(round_down(lo_ - o.hi_), round_up(hi_ - o.lo_));
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  const double a = lo_ * o.lo_;
  const double b = lo_ * o.hi_;
  const double c = hi_ * o.lo_;
  const double d = hi_ * o.hi_;
  const double lo = std::min(std::min(a, b), std::min(c, d));
  const double hi = std::max(std::max(a, b), std::max(c, d));
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval product undefined");
  *this = raw(round_down(lo), round_up(hi));
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw DomainError("interval division by an enclosure of zero");
  const double a = lo_ / o.lo_;
  const double b = lo_ / o.hi_;
  const double c = hi_ / o.lo_;
  const double d = hi_ / o.hi_;
  *this = raw(round_down(std::min(std::min(a, b), std::min(c, d))),
              round_up(std::max(std::max(a, b), std::max(c, d))));
  return *this;
}

Interval sqr(const Interval& x) {
  const double a = x.lo_ * x.lo_;
  const double b = x.hi_ * x.hi_;
  if (x.lo_ >= 0.0) return Interval::raw(round_down(a), round_up(b));
  if (x.hi_ <= 0.0) return Interval::raw(round_down(b), round_up(a));
  return Interval::raw(0.0, round_up(std::max(a, b)));
}

Interval sqrt(const Interval& x) {
  if (x.lo_ < 0.0) throw DomainError("square root of an enclosure reaching below zero");
  const double lo = x.lo_ == 0.0 ? 0.0 : std::max(0.0, round_down(std::sqrt(x.lo_)));
  return Interval::raw(lo, round_up(std::sqrt(x.hi_)));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval::raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << x.lower() << ", " << x.upper() << ']';
}

}  // namespace chyp
