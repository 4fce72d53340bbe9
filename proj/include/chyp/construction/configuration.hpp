#pragma once

#include <array>
#include <optional>

#include "chyp/construction/parameters.hpp"
#include "chyp/hermitian/geometry.hpp"

namespace chyp {

// The triangle of bisectors for one value of t: polar points p1, p2, p3 of the
// three complex geodesics, the spine midpoints m1, m2, the vertices c_i and
// d_i, the auxiliary points, and the reflections R0 = R(p1), R1 = R(m1),
// R2 = R(m2). Every vector keeps the exact representative of its defining formula.
template <class R>
struct TriangleConfiguration {
  ParameterTriple<R> params;
  GramPtr<R> gram;
  std::array<ProjVector<R>, 3> p;
  ProjVector<R> m1, m2, m3;
  ProjVector<R> c1, c2, c3;
  ProjVector<R> d1, d2, d3;
  ProjVector<R> b2, e2, q1, q3;
  R u;  // ta(c3, d3)
  std::optional<ProjVector<R>> w3;
  Isometry<R> R0, R1, R2;
};

struct BuildOptions {
  // Approximate backend: throw DomainError when a precondition fails.
  // Enclosure backend: throw only when it certifiably fails; ambiguous
  // enclosures surface later as square-root domain errors.
  bool check_preconditions = true;
};

template <class R>
TriangleConfiguration<R> build_configuration(const R& t, BuildOptions options = {});

// Products whose arguments are the angles beta_1, beta_2, beta_3:
//   <p2,c1><c1,p3>,  conj(th) <p3,c2><c2,p1>,  conj(th) <p1,c3><c3,p2>.
template <class R>
std::array<Complex<R>, 3> angle_products(const TriangleConfiguration<R>& cfg);

struct Angles {
  std::array<Complex<double>, 3> products;
  std::array<double, 3> beta;
  double sum = 0.0;
};

// Throws DomainError unless every product has certified positive real part.
Angles angles(const TriangleConfiguration<double>& cfg);

// Residuals of the two identities for the Gram shape [[1,t1,t],[t1,1,t2 conj(l)],[t,t2 l,1]]
// with m1 = (p1-p2)/sqrt(2(t1-1)), m2 = (l p2 - p3)/sqrt(2(t2-1)):
//   Re(<p1,m2><m1,m1> / (<m1,m2><p1,m1>)) against its closed form, and
//   tr R(m2)R(m1)R(p1) against its closed form.
struct MidpointIdentityResiduals {
  double ratio = 0.0;
  double trace = 0.0;
};
MidpointIdentityResiduals midpoint_identities(double t, double t1, double t2, Complex<double> lambda);

}  // namespace chyp
