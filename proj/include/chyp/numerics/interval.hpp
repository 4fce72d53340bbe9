#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <limits>

#include "chyp/numerics/errors.hpp"

namespace chyp {

// Closed interval [lower, upper] of reals with outward-rounded endpoints.
//
// Every operation computes each endpoint in round-to-nearest and then steps
// one ulp outward, so the result encloses the exact image of the operands.
class Interval {
 public:
  constexpr Interval() = default;
  // Implicit so that generic code can mix integer and double literals.
  Interval(double value);  // NOLINT(google-explicit-constructor)
  Interval(double lower, double upper);

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  double mid() const { return 0.5 * lo_ + 0.5 * hi_; }
  double width() const { return hi_ - lo_; }
  double magnitude() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return contains(0.0); }
  bool is_point() const { return lo_ == hi_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator-(const Interval& a) { return Interval::raw(-a.hi_, -a.lo_); }
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  static Interval raw(double lo, double hi) {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }
  friend Interval sqr(const Interval& x);
  friend Interval sqrt(const Interval& x);
  friend Interval hull(const Interval& a, const Interval& b);

  double lo_ = 0.0;
  double hi_ = 0.0;
};

// One ulp toward -inf / +inf; infinities are left alone.
inline double round_down(double x) {
  return std::isinf(x) ? x : std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double round_up(double x) {
  return std::isinf(x) ? x : std::nextafter(x, std::numeric_limits<double>::infinity());
}

// x^2, tight when x straddles zero.
Interval sqr(const Interval& x);
// Throws DomainError when the enclosure reaches below zero.
Interval sqrt(const Interval& x);
Interval hull(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& x);

// Uniform vocabulary over the two real backends, used by templated kernels.
inline double lower(double x) { return x; }
inline double upper(double x) { return x; }
inline double midpoint(double x) { return x; }
inline double lower(const Interval& x) { return x.lower(); }
inline double upper(const Interval& x) { return x.upper(); }
inline double midpoint(const Interval& x) { return x.mid(); }

inline double sqr(double x) { return x * x; }
inline double real_sqrt(double x) {
  if (!(x >= 0.0)) throw DomainError("square root of a negative number");
  return std::sqrt(x);
}
inline Interval real_sqrt(const Interval& x) { return sqrt(x); }

}  // namespace chyp
