#pragma once

#include <string>

#include "chyp/hermitian/space.hpp"

namespace chyp {

enum class PointClass { Negative, Isotropic, Positive, Indeterminate };

std::string to_string(PointClass c);

template <class R>
Complex<R> inner(const ProjVector<R>& u, const ProjVector<R>& v) {
  u.require_same(v);
  return u.context()->pair(u.coords(), v.coords());
}

// Magnitude used for relative isotropy tests: max|G| * (sum |coord|)^2.
inline double form_scale(const ProjVector<double>& v) {
  double s = 0.0;
  for (const auto& c : v.coords()) s += abs(c);
  return std::max(1.0, max_abs(v.context()->matrix())) * s * s;
}

template <class R>
PointClass classify(const ProjVector<R>& v, double rel_tol = 1e-10) {
  const R n = inner(v, v).re;
  if constexpr (std::is_same_v<R, double>) {
    if (std::abs(n) <= rel_tol * form_scale(v)) return PointClass::Isotropic;
    return n < 0 ? PointClass::Negative : PointClass::Positive;
  } else {
    switch (certified_sign(n)) {
      case SignVerdict::Positive: return PointClass::Positive;
      case SignVerdict::Negative: return PointClass::Negative;
      default: return PointClass::Indeterminate;
    }
  }
}

template <class R>
void require_nonisotropic(const ProjVector<R>& v, const char* what) {
  if constexpr (std::is_same_v<R, double>) {
    if (classify(v) == PointClass::Isotropic)
      throw PreconditionError(std::string(what) + ": isotropic vector");
  } else {
    (void)v;
    (void)what;  // interval division throws when <v,v> may vanish
  }
}

// ta(x, y) = <x,y><y,x> / (<x,x><y,y>)
template <class R>
R tance(const ProjVector<R>& x, const ProjVector<R>& y) {
  require_nonisotropic(x, "tance");
  require_nonisotropic(y, "tance");
  return norm(inner(x, y)) / (inner(x, x).re * inner(y, y).re);
}

// R(p): x -> 2 <x,p>/<p,p> p - x
template <class R>
Isometry<R> reflection(const ProjVector<R>& p) {
  require_nonisotropic(p, "reflection");
  const auto& c = p.coords();
  const Vec3<R> row = p.context()->matrix() * conj(c);
  const R pp = inner(p, p).re;
  Mat3<R> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      m(i, j) = Complex<R>(R(2.0)) * c[i] * row[j] / pp;
      if (i == j) m(i, j) -= Complex<R>(R(1.0));
    }
  return {m, false};
}

// True iff every 2x2 minor of [u v] is below tol * |u| |v|.
bool projectively_equal(const ProjVector<double>& u, const ProjVector<double>& v, double tol = 1e-9);

// max | M^T G conj(M) - G' | where G' = G, or conj(G) for an antilinear map.
double form_residual(const Isometry<double>& t, const GramContext<double>& g);

struct TraceIdentityResiduals {
  double first = 0.0;   // <R(x2)x1, x1> against (2 ta(x1,x2) - 1) <x1,x1>
  double second = 0.0;  // tr R(x2)R(x1) against 4 ta(x1,x2) - 1
  double third = 0.0;   // tr R(x3)R(x2)R(x1) against the cyclic-product formula
  double max() const { return std::max({first, second, third}); }
};

TraceIdentityResiduals trace_identities_check(const ProjVector<double>& x1, const ProjVector<double>& x2,
                                              const ProjVector<double>& x3);

}  // namespace chyp
