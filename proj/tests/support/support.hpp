#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chyp/construction/mirror.hpp"
#include "chyp/hermitian/geodesic.hpp"
#include "chyp/hermitian/geometry.hpp"

namespace chyp::testing {

// Seeded generator for the property suites. Every draw goes through this
// class so a failing trial can be replayed from its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 20260101) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  // Log-uniform on [lo, hi].
  double log_uniform(double lo, double hi);

  Complex<double> complex(double radius = 1.0);
  Complex<double> unit();
  Complex<double> nonzero_scalar();
  Vec3<double> vec(double radius = 1.0);

  // Gram matrix A^T diag(1, 1, -1) conj(A) for a random well-conditioned A.
  GramPtr<double> gram();

  ProjVector<double> vector(const GramPtr<double>& g);
  // Rejection sampling with |<v,v>| at least `margin` times the form scale.
  ProjVector<double> negative(const GramPtr<double>& g, double margin = 0.05);
  ProjVector<double> positive(const GramPtr<double>& g, double margin = 0.05);
  ProjVector<double> nonisotropic(const GramPtr<double>& g, double margin = 0.05);

  // Product of 1..4 reflections in random points, optionally followed by an
  // antilinear map of the same context.
  Isometry<double> isometry(const GramPtr<double>& g, const Isometry<double>* antilinear = nullptr);

  std::mt19937_64& engine() { return rng_; }

 private:
  // Vector whose image under the diagonalizing map of g has the given sign
  // pattern; falls back to rejection when g was not produced by gram().
  ProjVector<double> signed_vector(const GramPtr<double>& g, bool negative, double margin);

  std::mt19937_64 rng_;
  // Inverse of A for every G = A^T diag(1,1,-1) conj(A) handed out.
  std::map<const GramContext<double>*, Mat3<double>> diagonalizers_;
};

// Eigenvalues of a hermitian matrix by cyclic Jacobi on its real 6x6 form;
// each eigenvalue appears once (the doubled copies are merged), ascending.
std::array<double, 3> hermitian_eigenvalues(const Mat3<double>& h);

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;
  double tol = 0.0;
  bool ok() const { return failures == 0 && trials > 0; }
};

// Each suite runs `trials` random instances and records the worst residual.
PropertyResult trace_identity_suite(Gen& gen, int trials);
PropertyResult midpoint_identity_suite(Gen& gen, int trials);
PropertyResult decomposition_suite(Gen& gen, int trials);
PropertyResult closest_point_suite(Gen& gen, int trials);
PropertyResult reflection_suite(Gen& gen, int trials);
PropertyResult tance_scale_suite(Gen& gen, int trials);
PropertyResult tance_isometry_suite(Gen& gen, int trials);
PropertyResult hermitian_symmetry_suite(Gen& gen, int trials);

std::vector<PropertyResult> identity_suites(std::uint64_t seed, int trials);

}  // namespace chyp::testing
