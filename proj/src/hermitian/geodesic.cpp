#include "chyp/hermitian/geodesic.hpp"

#include <cmath>

namespace chyp {
namespace {

double vec_scale(const ProjVector<double>& v) { return euclidean_norm(v.coords()); }

// Largest column of adj(A); spans ker A when A has rank 2.
Vec3<double> kernel_vector(const Mat3<double>& a) {
  const Mat3<double> adj = adjugate(a);
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t j = 0; j < 3; ++j) {
    const double n = euclidean_norm(adj.column(j));
    if (n > best_norm) {
      best_norm = n;
      best = j;
    }
  }
  if (best_norm < 1e-12 * std::max(1.0, max_abs(a) * max_abs(a)))
    throw DomainError("degenerate eigenspace");
  return adj.column(best);
}

}  // namespace

GeodesicParam::GeodesicParam(ProjVector<double> v1, ProjVector<double> v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
  v1_.require_same(v2_);
  const double scale = std::max(1.0, max_abs(v1_.context()->matrix())) * vec_scale(v1_) * vec_scale(v2_);
  if (abs(inner(v1_, v2_) - Complex<double>(-0.5)) > 1e-9 * std::max(1.0, scale))
    throw PreconditionError("geodesic vertices must satisfy <v1,v2> = -1/2");
}

ProjVector<double> GeodesicParam::at(double x) const {
  if (!(x > 0)) throw PreconditionError("geodesic parameter must be positive");
  return x * v1_ + (1.0 / x) * v2_;
}

double GeodesicParam::parameter_of(const ProjVector<double>& p, double tol) const {
  // p = mu1 v1 + mu2 v2 + (component off the complex line)
  const Complex<double> mu1 = -2.0 * inner(p, v2_);
  const Complex<double> mu2 = -2.0 * inner(p, v1_);
  if (abs(mu1) == 0.0 || abs(mu2) == 0.0) throw PreconditionError("point is not on the geodesic");
  const double x = std::sqrt(abs(mu1) / abs(mu2));
  if (!projectively_equal(p, at(x), tol)) throw PreconditionError("point is not on the geodesic");
  return x;
}

GeodesicParam geodesic_through(const ProjVector<double>& a, const ProjVector<double>& b) {
  a.require_same(b);
  if (classify(a) != PointClass::Negative || classify(b) != PointClass::Negative)
    throw PreconditionError("geodesic_through: both points must be negative");
  if (projectively_equal(a, b)) throw PreconditionError("geodesic_through: coincident points");

  // Rephase b so that <a, b'> is real and negative; then span_R{a, b'} carries a
  // real form of signature (1,1) and its isotropic lines are the vertices.
  const Complex<double> h = inner(a, b);
  if (abs(h) == 0.0) throw PreconditionError("geodesic_through: orthogonal negative points");
  const ProjVector<double> bp = (-1.0 * h / abs(h)) * b;
  const double A = inner(a, a).re;
  const double B = inner(bp, bp).re;
  const double C = inner(a, bp).re;
  const double disc = C * C - A * B;
  if (!(disc > 0)) throw PreconditionError("geodesic_through: no real geodesic through the points");
  const double s = std::sqrt(disc);
  ProjVector<double> u1 = ((-C + s) / A) * a + bp;
  ProjVector<double> u2 = ((-C - s) / A) * a + bp;
  const double z = inner(u1, u2).re;
  u2 = (-0.5 / z) * u2;

  GeodesicParam geo(u1, u2);
  const double xa = geo.parameter_of(a);
  const double xb = geo.parameter_of(b);
  return xa < xb ? geo : geo.reversed();
}

double closest_parameter(const GeodesicParam& geo, const ProjVector<double>& p) {
  if (classify(p) != PointClass::Positive) throw PreconditionError("closest point: polar vector must be positive");
  const ProjVector<double> g = geo.at(1.0), gp = geo.at(2.0);
  const Complex<double> w = inner(g, p) * inner(p, gp) / inner(g, gp);
  if (std::abs(w.im) <= 1e-12 * std::max(1.0, abs(w)))
    throw DomainError("geodesic meets the complex geodesic polar to p");
  return std::sqrt(abs(inner(geo.v2(), p)) / abs(inner(geo.v1(), p)));
}

ProjVector<double> closest_point_on_geodesic(const GeodesicParam& geo, const ProjVector<double>& p) {
  return geo.at(closest_parameter(geo, p));
}

double stationarity_residual(const ProjVector<double>& p, const ProjVector<double>& y,
                             const ProjVector<double>& g_other) {
  const Complex<double> q = inner(p, g_other) * inner(y, y) / (inner(y, g_other) * inner(p, y));
  return q.re - 1.0;
}

LoxodromicDecomposition loxodromic_decompose(const Isometry<double>& iso, GramPtr<double> context,
                                             const DecomposeMode& mode) {
  if (iso.antilinear) throw PreconditionError("loxodromic_decompose: map must be linear");
  const Complex<double> tr = trace(iso.m);
  const double scale = std::max(1.0, max_abs(iso.m));
  if (std::abs(tr.im) > 1e-9 * scale) throw DomainError("loxodromic_decompose: trace is not real");
  if (certified_sign(tr.re - 3.0) != SignVerdict::Positive)
    throw DomainError("loxodromic_decompose: trace must exceed 3");

  const double s = tr.re - 1.0;
  const double r = (s + std::sqrt(s * s - 4.0)) / 2.0;
  const Mat3<double> id = Mat3<double>::identity();
  ProjVector<double> v1(context, kernel_vector(iso.m - Complex<double>(r) * id));
  ProjVector<double> v2(context, kernel_vector(iso.m - Complex<double>(1.0 / r) * id));
  const Complex<double> z = inner(v1, v2);
  if (abs(z) < 1e-12 * vec_scale(v1) * vec_scale(v2)) throw DomainError("degenerate eigenspace");
  v2 = (Complex<double>(-1.0) / (2.0 * conj(z))) * v2;
  GeodesicParam axis(v1, v2);

  double x = 1.0;
  if (const auto* c = std::get_if<ClosestTo>(&mode)) {
    x = closest_parameter(axis, c->p);
  } else {
    x = axis.parameter_of(std::get<AtPoint>(mode).g);
  }
  ProjVector<double> g = axis.at(x);
  ProjVector<double> gp = axis.at(x * std::sqrt(r));
  const double residual = max_abs_diff((reflection(gp) * reflection(g)).m, iso.m);
  if (residual > 1e-9 * scale) throw DomainError("loxodromic_decompose: reconstruction failed");
  return {axis, r, x, std::move(g), std::move(gp), residual};
}

}  // namespace chyp
