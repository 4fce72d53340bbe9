#pragma once

#include <variant>

#include "chyp/hermitian/geometry.hpp"

namespace chyp {

// Geodesic with isotropic vertices v1, v2, <v1,v2> = -1/2, whose negative
// points are g(x) = x v1 + v2 / x for x > 0, all with <g(x),g(x)> = -1.
class GeodesicParam {
 public:
  GeodesicParam(ProjVector<double> v1, ProjVector<double> v2);

  const ProjVector<double>& v1() const { return v1_; }
  const ProjVector<double>& v2() const { return v2_; }

  ProjVector<double> at(double x) const;

  // x with p projectively equal to g(x). Throws if p is off the geodesic.
  double parameter_of(const ProjVector<double>& p, double tol = 1e-9) const;

  // Same geodesic with the roles of v1 and v2 exchanged (x -> 1/x).
  GeodesicParam reversed() const { return {v2_, v1_}; }

 private:
  ProjVector<double> v1_;
  ProjVector<double> v2_;
};

// Geodesic through two projectively distinct negative points, oriented so
// that parameter_of(a) < parameter_of(b).
GeodesicParam geodesic_through(const ProjVector<double>& a, const ProjVector<double>& b);

// Point of the geodesic closest to the complex geodesic polar to p (p positive).
// Throws DomainError if the geodesic meets that complex geodesic.
ProjVector<double> closest_point_on_geodesic(const GeodesicParam& geo, const ProjVector<double>& p);
double closest_parameter(const GeodesicParam& geo, const ProjVector<double>& p);

// Re(<p,g'><y,y> / (<y,g'><p,y>)) - 1; vanishes at the closest point y.
double stationarity_residual(const ProjVector<double>& p, const ProjVector<double>& y,
                             const ProjVector<double>& g_other);

struct ClosestTo {
  ProjVector<double> p;
};
struct AtPoint {
  ProjVector<double> g;
};
using DecomposeMode = std::variant<ClosestTo, AtPoint>;

struct LoxodromicDecomposition {
  GeodesicParam axis;
  double r = 1.0;  // eigenvalue of v1; tr I = 1 + r + 1/r
  double x = 1.0;  // g = axis.at(x), g' = axis.at(x * sqrt(r))
  ProjVector<double> g;
  ProjVector<double> g_prime;
  double residual = 0.0;  // max | R(g')R(g) - I |
};

// Writes a linear I with real trace > 3 as R(g')R(g), both points on the axis of I.
LoxodromicDecomposition loxodromic_decompose(const Isometry<double>& iso, GramPtr<double> context,
                                             const DecomposeMode& mode);

}  // namespace chyp
