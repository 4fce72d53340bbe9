#pragma once

#include <array>

#include "chyp/construction/configuration.hpp"
#include "chyp/hermitian/geodesic.hpp"

namespace chyp {

// The antilinear reflection R3 obtained from th^2 R2 R1 R0 = R(m1') R(m2'):
// m1' is the point of the axis closest to C1, m2' its shift by sqrt(r),
// p2' = -R(m1') p1, and R3 maps a p1 + b p2 + c p3 to conj(a) p1 + conj(b) p2' + conj(c) p3.
struct Mirror {
  LoxodromicDecomposition decomposition;
  ProjVector<double> m1p, m2p, p2p;
  Isometry<double> R3;
  Complex<double> trace;          // tr(th^2 R2 R1 R0)
  double normalization = 0.0;     // Re(<p1,m2'><m1',m1'> / (<m1',m2'><p1,m1'>))
  double gram_conj_residual = 0.0;
  double involution_residual = 0.0;
  double form_residual = 0.0;
};

// Throws DomainError if the decomposition fails or the Gram matrix of
// (p1, p2', p3) is not the conjugate of that of (p1, p2, p3).
Mirror mirror_construction(const TriangleConfiguration<double>& cfg);

// A configuration together with its mirror; the four generators as letters 0..3.
struct Realization {
  TriangleConfiguration<double> cfg;
  Mirror mirror;

  const Isometry<double>& generator(int letter) const;
  const GramPtr<double>& gram() const { return cfg.gram; }
};

Realization realize(double t);

}  // namespace chyp
