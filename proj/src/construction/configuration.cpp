#include "chyp/construction/configuration.hpp"

#include <cmath>

namespace chyp {

template <class R>
TriangleConfiguration<R> build_configuration(const R& t, BuildOptions options) {
  const ParameterTriple<R> params = solve_parameters(t);
  const GramPtr<R> gram = build_gram(params);
  const R one(1.0), two(2.0);
  const Complex<R> th = theta<R>();

  const auto p1 = ProjVector<R>::basis(gram, 0);
  const auto p2 = ProjVector<R>::basis(gram, 1);
  const auto p3 = ProjVector<R>::basis(gram, 2);

  const ProjVector<R> m1 = (p1 - p2) / real_sqrt(two * (params.t1 - one));
  const ProjVector<R> m2 = (th * p2 - p3) / real_sqrt(two * (params.t2 - one));
  const Isometry<R> R0 = reflection(p1), R1 = reflection(m1), R2 = reflection(m2);

  const ProjVector<R> c1 = p3 - t * p1;
  const ProjVector<R> c2 = R1(c1);
  const ProjVector<R> c3 = R2(c2);
  const ProjVector<R> d3 = p1 - t * p3;
  const ProjVector<R> d2 = R2(d3);
  const ProjVector<R> d1 = R1(d2);
  const ProjVector<R> b2 = p3 - (params.t2 * th) * p2;
  const ProjVector<R> e2 = p1 - params.t1 * p2;

  const R u = tance(c3, d3);
  const bool u_ok = std::is_same_v<R, double> ? lower(u) > 1.0 : upper(u) > 1.0;
  if (options.check_preconditions && !u_ok) throw DomainError("tance condition fails: ta(c3, d3) <= 1");

  std::optional<ProjVector<R>> w3;
  if (lower(u) >= 1.0 || !std::is_same_v<R, double>) {
    const Complex<R> k = inner(c3, d3) / inner(d3, d3);
    w3 = Complex<R>(u + real_sqrt(sqr(u) - u)) * c3 - k * d3;
  }

  return TriangleConfiguration<R>{
      params, gram, {p1, p2, p3}, m1, m2, p3 - p1, c1, c2, c3, d1, d2, d3,
      b2,     e2,   p1 + p2,      p3 + p1, u, std::move(w3), R0, R1, R2};
}

template <class R>
std::array<Complex<R>, 3> angle_products(const TriangleConfiguration<R>& cfg) {
  const auto& [p1, p2, p3] = cfg.p;
  const Complex<R> thb = conj(theta<R>());
  return {inner(p2, cfg.c1) * inner(cfg.c1, p3), thb * inner(p3, cfg.c2) * inner(cfg.c2, p1),
          thb * inner(p1, cfg.c3) * inner(cfg.c3, p2)};
}

Angles angles(const TriangleConfiguration<double>& cfg) {
  Angles out;
  out.products = angle_products(cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    if (certified_sign(out.products[i].re) != SignVerdict::Positive)
      throw DomainError("angle product " + std::to_string(i + 1) + " has nonpositive real part");
    out.beta[i] = arg(out.products[i]);
    out.sum += out.beta[i];
  }
  return out;
}

MidpointIdentityResiduals midpoint_identities(double t, double t1, double t2, Complex<double> lambda) {
  const ParameterTriple<double> params{t, t1, t2};
  const GramPtr<double> gram = make_gram(gram_matrix(params, lambda));
  const auto p1 = ProjVector<double>::basis(gram, 0);
  const auto p2 = ProjVector<double>::basis(gram, 1);
  const auto p3 = ProjVector<double>::basis(gram, 2);
  const ProjVector<double> m1 = (p1 - p2) / std::sqrt(2 * (t1 - 1));
  const ProjVector<double> m2 = (lambda * p2 - p3) / std::sqrt(2 * (t2 - 1));

  const double re_l = lambda.re;
  const double s = t1 + t2 - 1;
  const double e1 = t * t - t * t1 + t1 * t1 - (t2 - 1) * (t2 - 1);
  const double e2 = 2 * t * t1 - t - t1 + 1 - 2 * t2;

  const Complex<double> ratio = inner(p1, m2) * inner(m1, m1) / (inner(m1, m2) * inner(p1, m1));
  const double ratio_closed = 1 + (e1 + t * t1 * (1 - 2 * re_l)) / (s * s + t * t - 2 * t * s * re_l);

  const Complex<double> tr = trace((reflection(m2) * reflection(m1) * reflection(p1)).m);
  const Complex<double> tr_closed = 2 * t * (conj(lambda) - Complex<double>(1.0)) +
                                    Complex<double>(e2 / (t1 - 1) - (e1 + t * s * (1 - 2 * re_l)) / ((t1 - 1) * (t2 - 1)));
  return {std::abs(ratio.re - ratio_closed), abs(tr - tr_closed)};
}

template TriangleConfiguration<double> build_configuration(const double&, BuildOptions);
template TriangleConfiguration<Interval> build_configuration(const Interval&, BuildOptions);
template std::array<Complex<double>, 3> angle_products(const TriangleConfiguration<double>&);
template std::array<Complex<Interval>, 3> angle_products(const TriangleConfiguration<Interval>&);

template TriangleConfiguration<AffineForm> build_configuration(const AffineForm&, BuildOptions);
template std::array<Complex<AffineForm>, 3> angle_products(const TriangleConfiguration<AffineForm>&);
}  // namespace chyp
