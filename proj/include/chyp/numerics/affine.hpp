#pragma once

#include <iosfwd>

#include "chyp/numerics/interval.hpp"

namespace chyp {

// First-order Taylor model in one variable: the set
//   { c0 + c1*s + r : s in [-h, h], c0 in C0, c1 in C1, r in REM }
// with interval coefficients. The shared variable s keeps the dependency on
// the parameter, so enclosures of long computations stay O(h^2) wide where a
// plain Interval evaluation grows exponentially with the expression depth.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(double value) : c0_(value) {}       // NOLINT(google-explicit-constructor)
  AffineForm(const Interval& value) : c0_(value) {}  // NOLINT(google-explicit-constructor)

  // The identity function on x: center mid(x), radius covering x.
  static AffineForm variable(const Interval& x);

  const Interval& constant() const { return c0_; }
  const Interval& slope() const { return c1_; }
  const Interval& remainder() const { return rem_; }
  double radius() const { return h_; }

  // Interval enclosure of every value the form can take.
  Interval range() const;

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const AffineForm& o);
  AffineForm& operator/=(const AffineForm& o);

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const AffineForm& b) { return a *= b; }
  friend AffineForm operator/(AffineForm a, const AffineForm& b) { return a /= b; }
  friend AffineForm operator-(const AffineForm& a);

  friend AffineForm reciprocal(const AffineForm& x);
  friend AffineForm real_sqrt(const AffineForm& x);

 private:
  AffineForm(Interval c0, Interval c1, Interval rem, double h) : c0_(c0), c1_(c1), rem_(rem), h_(h) {}
  Interval span() const { return Interval(-h_, h_); }

  Interval c0_{0.0};
  Interval c1_{0.0};
  Interval rem_{0.0};
  double h_ = 0.0;
};

AffineForm reciprocal(const AffineForm& x);
AffineForm real_sqrt(const AffineForm& x);
inline AffineForm sqr(const AffineForm& x) { return x * x; }

inline double lower(const AffineForm& x) { return x.range().lower(); }
inline double upper(const AffineForm& x) { return x.range().upper(); }
inline double midpoint(const AffineForm& x) { return x.range().mid(); }

std::ostream& operator<<(std::ostream& os, const AffineForm& x);

}  // namespace chyp
