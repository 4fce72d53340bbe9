#include "chyp/construction/mirror.hpp"

namespace chyp {

Mirror mirror_construction(const TriangleConfiguration<double>& cfg) {
  const Complex<double> th = theta<double>();
  const Isometry<double> I = scalar_isometry(th * th) * cfg.R2 * cfg.R1 * cfg.R0;
  const auto& p1 = cfg.p[0];

  LoxodromicDecomposition dec = loxodromic_decompose(I, cfg.gram, ClosestTo{p1});
  const ProjVector<double> m1p = dec.g;
  const ProjVector<double> m2p = dec.g_prime;
  const ProjVector<double> p2p = Complex<double>(-1.0) * reflection(m1p)(p1);

  const Mat3<double>& G = cfg.gram->matrix();
  const std::array<ProjVector<double>, 3> basis{p1, p2p, cfg.p[2]};
  Mat3<double> g2;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) g2(i, j) = inner(basis[i], basis[j]);
  const double conj_residual = max_abs_diff(g2, conj(G));
  if (conj_residual > 1e-9 * std::max(1.0, max_abs(G)))
    throw DomainError("mirror: Gram matrix of (p1, p2', p3) is not the conjugate Gram matrix");

  Vec3<double> e1{}, e3{};
  e1[0] = Complex<double>(1.0);
  e3[2] = Complex<double>(1.0);
  const Isometry<double> R3{Mat3<double>::from_columns(e1, p2p.coords(), e3), true};

  const Complex<double> norm_q = inner(p1, m2p) * inner(m1p, m1p) / (inner(m1p, m2p) * inner(p1, m1p));
  const double inv_res = max_abs_diff((R3 * R3).m, Mat3<double>::identity());
  return Mirror{std::move(dec), m1p, m2p, p2p, R3, trace(I.m), norm_q.re, conj_residual, inv_res,
                form_residual(R3, *cfg.gram)};
}

const Isometry<double>& Realization::generator(int letter) const {
  switch (letter) {
    case 0: return cfg.R0;
    case 1: return cfg.R1;
    case 2: return cfg.R2;
    case 3: return mirror.R3;
  }
  throw PreconditionError("generator index must be 0..3");
}

Realization realize(double t) {
  TriangleConfiguration<double> cfg = build_configuration(t);
  Mirror mirror = mirror_construction(cfg);
  return {std::move(cfg), std::move(mirror)};
}

}  // namespace chyp
