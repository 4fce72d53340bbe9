#include "chyp/hermitian/space.hpp"

namespace chyp {

Isometry<double> inverse(const Isometry<double>& t) {
  const Complex<double> d = det(t.m);
  if (abs(d) < 1e-300) throw DomainError("inverse: singular matrix");
  const Mat3<double> inv = (Complex<double>(1.0) / d) * adjugate(t.m);
  return {t.antilinear ? conj(inv) : inv, t.antilinear};
}

std::optional<Complex<double>> scalar_part(const Isometry<double>& t, double tol) {
  if (t.antilinear) return std::nullopt;
  const Complex<double> s = trace(t.m) / 3.0;
  const double scale = std::max(1.0, max_abs(t.m));
  if (max_abs_diff(t.m, s * Mat3<double>::identity()) > tol * scale) return std::nullopt;
  return s;
}

}  // namespace chyp
