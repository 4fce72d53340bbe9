#include "chyp/numerics/affine.hpp"

#include <algorithm>
#include <ostream>

#include "chyp/numerics/errors.hpp"

namespace chyp {

AffineForm AffineForm::variable(const Interval& x) {
  const double m = x.mid();
  const double h = std::max(round_up(x.upper() - m), round_up(m - x.lower()));
  return {Interval(m), Interval(1.0), Interval(0.0), h};
}

Interval AffineForm::range() const { return c0_ + c1_ * span() + rem_; }

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  c0_ += o.c0_;
  c1_ += o.c1_;
  rem_ += o.rem_;
  h_ = std::max(h_, o.h_);
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  c0_ -= o.c0_;
  c1_ -= o.c1_;
  rem_ -= o.rem_;
  h_ = std::max(h_, o.h_);
  return *this;
}

AffineForm operator-(const AffineForm& a) { return {-a.c0_, -a.c1_, -a.rem_, a.h_}; }

AffineForm& AffineForm::operator*=(const AffineForm& o) {
  const double h = std::max(h_, o.h_);
  const Interval s(-h, h);
  const Interval s2(0.0, round_up(h * h));
  // (a0 + a1 s + ra)(b0 + b1 s + rb); the s^2 term lies in [0, h^2].
  const Interval lin_a = c0_ + c1_ * s;
  const Interval lin_b = o.c0_ + o.c1_ * s;
  const Interval rem = c1_ * o.c1_ * s2 + rem_ * lin_b + o.rem_ * lin_a + rem_ * o.rem_;
  const Interval c1 = c0_ * o.c1_ + c1_ * o.c0_;
  c0_ = c0_ * o.c0_;
  c1_ = c1;
  rem_ = rem;
  h_ = h;
  return *this;
}

AffineForm& AffineForm::operator/=(const AffineForm& o) { return *this *= reciprocal(o); }

AffineForm reciprocal(const AffineForm& x) {
  const Interval X = x.range();
  if (X.contains_zero()) throw DomainError("division by an enclosure containing zero");
  const Interval x0(x.c0_.mid());
  const Interval g0 = Interval(1.0) / x0;
  const Interval dg = -(g0 * g0);
  // g'' / 2 = 1 / xi^3
  const Interval second = sqr(X - x0) / (X * sqr(X));
  return {g0 + dg * (x.c0_ - x0), dg * x.c1_, dg * x.rem_ + second, x.h_};
}

AffineForm real_sqrt(const AffineForm& x) {
  const Interval X = x.range();
  if (!(X.lower() > 0.0)) throw DomainError("square root of an enclosure reaching zero");
  const Interval x0(x.c0_.mid());
  const Interval g0 = sqrt(x0);
  const Interval dg = Interval(0.5) / g0;
  // g'' / 2 = -1 / (8 xi^{3/2})
  const Interval second = -(sqr(X - x0) / (Interval(8.0) * X * sqrt(X)));
  return {g0 + dg * (x.c0_ - x0), dg * x.c1_, dg * x.rem_ + second, x.h_};
}

std::ostream& operator<<(std::ostream& os, const AffineForm& x) {
  return os << x.constant() << " + " << x.slope() << "*s + " << x.remainder() << " (|s| <= " << x.radius() << ")";
}

}  // namespace chyp
