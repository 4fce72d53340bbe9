#include "chyp/hermitian/geometry.hpp"

namespace chyp {

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Negative: return "negative";
    case PointClass::Isotropic: return "isotropic";
    case PointClass::Positive: return "positive";
    case PointClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

bool projectively_equal(const ProjVector<double>& u, const ProjVector<double>& v, double tol) {
  u.require_same(v);
  const auto& a = u.coords();
  const auto& b = v.coords();
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) worst = std::max(worst, abs(a[i] * b[j] - a[j] * b[i]));
  return worst < tol * euclidean_norm(a) * euclidean_norm(b);
}

double form_residual(const Isometry<double>& t, const GramContext<double>& g) {
  const Mat3<double>& G = g.matrix();
  const Mat3<double> pulled = transpose(t.m) * G * conj(t.m);
  return max_abs_diff(pulled, t.antilinear ? conj(G) : G);
}

TraceIdentityResiduals trace_identities_check(const ProjVector<double>& x1, const ProjVector<double>& x2,
                                              const ProjVector<double>& x3) {
  const Isometry<double> r1 = reflection(x1), r2 = reflection(x2), r3 = reflection(x3);
  const double t12 = tance(x1, x2), t23 = tance(x2, x3), t31 = tance(x3, x1);
  const Complex<double> n1 = inner(x1, x1), n2 = inner(x2, x2), n3 = inner(x3, x3);

  TraceIdentityResiduals out;
  out.first = abs(inner(r2(x1), x1) - (2.0 * t12 - 1.0) * n1);
  out.second = abs(trace((r2 * r1).m) - Complex<double>(4.0 * t12 - 1.0));
  const Complex<double> cyc = inner(x1, x2) * inner(x2, x3) * inner(x3, x1) / (n1 * n2 * n3);
  const Complex<double> formula = 8.0 * cyc - Complex<double>(4.0 * (t12 + t23 + t31) - 3.0);
  out.third = abs(trace((r3 * r2 * r1).m) - formula);
  return out;
}

}  // namespace chyp
