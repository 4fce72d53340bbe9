#include "chyp/verification/relations.hpp"

#include <cmath>
#include <numbers>

#include "chyp/hermitian/geodesic.hpp"

namespace chyp {

double circular_distance(double a, double b, double period) {
  double d = std::fmod(a - b, period);
  if (d < 0) d += period;
  return std::min(d, period - d);
}

RelationReport check_relation(const Realization& rz) {
  const Complex<double> th = theta<double>();
  const Complex<double> th2 = th * th;
  const Complex<double> th_m2 = Complex<double>(1.0) / th2;
  const Mat3<double> id = Mat3<double>::identity();

  RelationReport rep;
  const Isometry<double> full = realize_word(Word::parse("3123210"), rz);
  rep.linear = !full.antilinear;
  rep.residual = max_abs_diff(full.m, th_m2 * id);
  rep.scalar = trace(full.m) / 3.0;

  const Isometry<double> half = realize_word(Word::parse("312321"), rz);
  const Isometry<double> sq = half * half;
  rep.square_residual = sq.antilinear ? INFINITY : max_abs_diff(sq.m, th2 * id);
  rep.square_scalar = trace(sq.m) / 3.0;
  return rep;
}

namespace {

bool same_vertex_pair(const GeodesicParam& a, const GeodesicParam& b) {
  const auto eq = [](const ProjVector<double>& x, const ProjVector<double>& y) { return projectively_equal(x, y, 1e-7); };
  return (eq(a.v1(), b.v1()) && eq(a.v2(), b.v2())) || (eq(a.v1(), b.v2()) && eq(a.v2(), b.v1()));
}

double vec_residual(const Vec3<double>& a, const Vec3<double>& b) { return max_abs_diff(a, b); }

}  // namespace

MirrorVertexReport check_mirror_vertices(const Realization& rz) {
  const auto& cfg = rz.cfg;
  const Isometry<double>& R3 = rz.mirror.R3;
  const Complex<double> th = theta<double>();
  const Complex<double> th2 = th * th;
  const Complex<double> th_m2 = Complex<double>(1.0) / th2;
  constexpr double pi = std::numbers::pi;

  MirrorVertexReport rep;
  const Vec3<double> r3c3 = R3.apply(cfg.c3.coords());
  const Vec3<double> r3d1 = R3.apply(cfg.d1.coords());
  rep.r3c3_inverse_residual = vec_residual(r3c3, -1.0 * th_m2 * cfg.c3.coords());
  rep.r3c3_direct_residual = vec_residual(r3c3, -1.0 * th2 * cfg.c3.coords());
  rep.r3d1_inverse_residual = vec_residual(r3d1, -1.0 * th_m2 * cfg.d1.coords());
  rep.r3d1_direct_residual = vec_residual(r3d1, -1.0 * th2 * cfg.d1.coords());
  rep.r3c1_residual = vec_residual(R3.apply(cfg.c1.coords()), cfg.c1.coords());

  const Complex<double> c1c2 = inner(cfg.c1, cfg.c2);
  const Complex<double> c3c2 = inner(cfg.c3, cfg.c2);
  rep.q = inner(cfg.c1, cfg.c3) * c3c2 / c1c2;
  rep.arg_q = arg(rep.q);
  rep.arg_q_mod_pi = std::fmod(rep.arg_q + 2 * pi, pi);
  rep.deviation_conj_class = circular_distance(rep.arg_q, pi / 6, pi);
  rep.deviation_th_class = circular_distance(rep.arg_q, 5 * pi / 6, pi);
  rep.im_c1c2 = std::abs(c1c2.im) / abs(c1c2);
  rep.im_c3c2 = std::abs(c3c2.im) / abs(c3c2);

  const std::array<ProjVector<double>, 3> c{cfg.c1, cfg.c2, cfg.c3};
  const std::array<ProjVector<double>, 3> d{cfg.d1, cfg.d2, cfg.d3};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    rep.geodesics_distinct[i] = !same_vertex_pair(geodesic_through(c[i], c[j]), geodesic_through(d[i], d[j]));
  }
  return rep;
}

}  // namespace chyp
