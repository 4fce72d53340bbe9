#pragma once

#include <array>

#include "chyp/cake/word.hpp"

namespace chyp {

struct RelationReport {
  bool linear = false;
  double residual = 0.0;          // max | R3R1R2R3R2R1R0 - th^-2 Id |
  Complex<double> scalar;         // trace / 3 of the same word
  double square_residual = 0.0;   // max | (R3R1R2R3R2R1)^2 - th^2 Id |
  Complex<double> square_scalar;  // trace / 3 of the squared word
};

RelationReport check_relation(const Realization& rz);

// Behaviour of the vertices c3, d1 and c1 under R3, the phase of
// q = <c1,c3><c3,c2>/<c1,c2>, and distinctness of the geodesics through
// consecutive c's and consecutive d's.
struct MirrorVertexReport {
  double r3c3_inverse_residual = 0.0;    // | R3 c3 + th^-2 c3 |
  double r3c3_direct_residual = 0.0;     // | R3 c3 + th^2 c3 |
  double r3d1_inverse_residual = 0.0;    // | R3 d1 + th^-2 d1 |
  double r3d1_direct_residual = 0.0;     // | R3 d1 + th^2 d1 |
  double r3c1_residual = 0.0;            // | R3 c1 - c1 |
  Complex<double> q;
  double arg_q = 0.0;                    // principal branch
  double arg_q_mod_pi = 0.0;             // in [0, pi)
  double deviation_conj_class = 0.0;     // distance of arg q from pi/6 mod pi (q in R conj(th) i)
  double deviation_th_class = 0.0;       // distance of arg q from 5pi/6 mod pi (q in R th i)
  double im_c1c2 = 0.0;                  // Im <c1,c2> relative to |<c1,c2>|
  double im_c3c2 = 0.0;
  std::array<bool, 3> geodesics_distinct{};
};

MirrorVertexReport check_mirror_vertices(const Realization& rz);

// Distance from a to b on the circle R / (period Z).
double circular_distance(double a, double b, double period);

}  // namespace chyp
