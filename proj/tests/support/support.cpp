#include "support.hpp"

#include <algorithm>
#include <cmath>

#include "chyp/construction/configuration.hpp"
#include "chyp/numerics/errors.hpp"

namespace chyp::testing {

double Gen::log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

Complex<double> Gen::complex(double radius) { return {uniform(-radius, radius), uniform(-radius, radius)}; }

Complex<double> Gen::unit() {
  const double a = uniform(-M_PI, M_PI);
  return {std::cos(a), std::sin(a)};
}

Complex<double> Gen::nonzero_scalar() {
  const double r = log_uniform(1e-3, 1e3);
  return r * unit();
}

Vec3<double> Gen::vec(double radius) { return {complex(radius), complex(radius), complex(radius)}; }

GramPtr<double> Gen::gram() {
  for (;;) {
    Mat3<double> a;
    for (auto& row : a.rows) row = vec();
    if (abs(det(a)) < 0.3) continue;
    Mat3<double> d = Mat3<double>::identity();
    d(2, 2) = Complex<double>(-1.0);
    Mat3<double> g = transpose(a) * d * conj(a);
    // Symmetrize away rounding so the context accepts it.
    const Mat3<double> gh = conj(transpose(g));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g(i, j) = 0.5 * (g(i, j) + gh(i, j));
    GramPtr<double> out = make_gram(g);
    const Complex<double> d_inv = Complex<double>(1.0) / det(a);
    diagonalizers_[out.get()] = d_inv * adjugate(a);
    return out;
  }
}

ProjVector<double> Gen::vector(const GramPtr<double>& g) {
  for (;;) {
    const Vec3<double> v = vec();
    if (max_abs(v) > 1e-3) return ProjVector<double>(g, v);
  }
}

namespace {

double relative_norm(const ProjVector<double>& v) { return inner(v, v).re / form_scale(v); }

}  // namespace

ProjVector<double> Gen::signed_vector(const GramPtr<double>& g, bool negative, double margin) {
  const auto it = diagonalizers_.find(g.get());
  for (int attempt = 0;; ++attempt) {
    ProjVector<double> v = vector(g);
    if (it != diagonalizers_.end()) {
      // <A^-1 y, A^-1 y> = |y1|^2 + |y2|^2 - |y3|^2.
      Vec3<double> y = vec();
      const double big = uniform(1.0, 2.0), small = uniform(0.0, 0.9);
      if (negative) {
        const double rest = std::max(std::sqrt(norm(y[0]) + norm(y[1])), 1e-9);
        y = {(small * big / rest) * y[0], (small * big / rest) * y[1], big * unit()};
      } else {
        y[static_cast<std::size_t>(integer(0, 1))] = big * unit();
        y[2] = small * big * unit();
      }
      v = v.with_coords(it->second * y);
    }
    const double n = relative_norm(v);
    if (negative ? n < -margin : n > margin) return v;
    if (attempt > 2000) margin *= 0.5;
  }
}

ProjVector<double> Gen::negative(const GramPtr<double>& g, double margin) { return signed_vector(g, true, margin); }

ProjVector<double> Gen::positive(const GramPtr<double>& g, double margin) { return signed_vector(g, false, margin); }

ProjVector<double> Gen::nonisotropic(const GramPtr<double>& g, double margin) {
  for (;;) {
    ProjVector<double> v = vector(g);
    if (std::abs(relative_norm(v)) > margin) return v;
  }
}

Isometry<double> Gen::isometry(const GramPtr<double>& g, const Isometry<double>* antilinear) {
  Isometry<double> out;
  const int n = integer(1, 4);
  for (int i = 0; i < n; ++i) out = reflection(nonisotropic(g, 0.2)) * out;
  if (antilinear && integer(0, 1) == 1) out = *antilinear * out;
  return out;
}

std::array<double, 3> hermitian_eigenvalues(const Mat3<double>& h) {
  // [[Re H, -Im H], [Im H, Re H]] is real symmetric with each eigenvalue of H twice.
  double a[6][6];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto z = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      a[i][j] = z.re;
      a[i + 3][j + 3] = z.re;
      a[i][j + 3] = -z.im;
      a[i + 3][j] = z.im;
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 6; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 6; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 6> ev{};
  for (int i = 0; i < 6; ++i) ev[static_cast<std::size_t>(i)] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return {ev[0], ev[2], ev[4]};
}

namespace {

void record(PropertyResult& r, double residual) {
  ++r.trials;
  if (!(residual < r.tol)) ++r.failures;
  if (!(residual <= r.worst)) r.worst = std::isnan(residual) ? INFINITY : residual;
}

}  // namespace

PropertyResult trace_identity_suite(Gen& gen, int trials) {
  PropertyResult r{"trace identities against direct matrix traces", 0, 0, 0.0, 1e-10};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const auto x1 = gen.nonisotropic(g, 0.2), x2 = gen.nonisotropic(g, 0.2), x3 = gen.nonisotropic(g, 0.2);
    const TraceIdentityResiduals res = trace_identities_check(x1, x2, x3);
    // Scale each residual by the size of the quantities involved.
    const double t12 = std::abs(tance(x1, x2)), t23 = std::abs(tance(x2, x3)), t31 = std::abs(tance(x3, x1));
    const double scale = std::max(1.0, 8.0 * std::sqrt(t12 * t23 * t31) + 4.0 * (t12 + t23 + t31));
    const double first_scale = std::max(1.0, (2.0 * t12 + 1.0) * std::abs(inner(x1, x1).re));
    record(r, std::max({res.first / first_scale, res.second / std::max(1.0, 4.0 * t12), res.third / scale}));
  }
  return r;
}

PropertyResult midpoint_identity_suite(Gen& gen, int trials) {
  PropertyResult r{"midpoint ratio and trace identities", 0, 0, 0.0, 1e-9};
  for (int i = 0; i < trials; ++i) {
    const double t = gen.uniform(1.55, 4.0);
    const double t1 = gen.uniform(1.05, 4.0), t2 = gen.uniform(1.05, 4.0);
    Complex<double> lambda = gen.unit();
    if (abs(lambda - Complex<double>(1.0)) < 1e-3) lambda = Complex<double>(-1.0);
    const MidpointIdentityResiduals m = midpoint_identities(t, t1, t2, lambda);
    record(r, std::max(m.ratio, m.trace));
  }
  return r;
}

PropertyResult decomposition_suite(Gen& gen, int trials) {
  PropertyResult r{"loxodromic decomposition round trip", 0, 0, 0.0, 1e-9};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const ProjVector<double> a = gen.negative(g, 0.2), b = gen.negative(g, 0.2);
    if (projectively_equal(a, b, 1e-3)) {
      --i;
      continue;
    }
    const GeodesicParam geo = geodesic_through(a, b);
    const double x = gen.log_uniform(0.3, 3.0), s = gen.log_uniform(1.2, 3.0);
    const ProjVector<double> p = geo.at(x), q = geo.at(x * s);
    // Points far out towards the boundary make R(q)R(p) ill-conditioned.
    if (max_abs(p.coords()) * max_abs(q.coords()) * max_abs(g->matrix()) > 20.0) {
      --i;
      continue;
    }
    const Isometry<double> iso = reflection(q) * reflection(p);
    const double scale = std::max(1.0, max_abs(iso.m));
    const LoxodromicDecomposition d = loxodromic_decompose(iso, g, AtPoint{gen.integer(0, 1) ? p : geo.at(x * 1.7)});
    const Isometry<double> again = reflection(d.g_prime) * reflection(d.g);
    record(r, max_abs_diff(again.m, iso.m) / scale);
  }
  return r;
}

PropertyResult closest_point_suite(Gen& gen, int trials) {
  PropertyResult r{"closest point stationarity and grid minimum", 0, 0, 0.0, 1e-9};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const ProjVector<double> a = gen.negative(g, 0.2), b = gen.negative(g, 0.2);
    const ProjVector<double> p = gen.positive(g, 0.2);
    if (projectively_equal(a, b, 1e-3)) {
      --i;
      continue;
    }
    const GeodesicParam geo = geodesic_through(a, b);
    double xs = 0.0;
    try {
      xs = closest_parameter(geo, p);
    } catch (const DomainError&) {
      --i;  // the geodesic meets the complex geodesic; not in scope
      continue;
    }
    const ProjVector<double> y = geo.at(xs);
    // Near the rejected case <y,p> ~ 0 the stationarity ratio loses all digits.
    if (abs(inner(p, y)) < 1e-3 * max_abs(p.coords()) * max_abs(y.coords()) * max_abs(g->matrix())) {
      --i;
      continue;
    }
    const double stat = std::abs(stationarity_residual(p, y, geo.at(xs * 2.5)));

    // Grid oracle: |<g(x),p>|^2 is the quantity minimized by the closest point.
    const auto h = [&](double x) { return norm(inner(geo.at(x), p)); };
    const int n = 4001;
    double best_x = xs, best = INFINITY;
    for (int k = 0; k < n; ++k) {
      const double x = xs * std::exp(-3.0 + 6.0 * k / (n - 1));
      if (const double v = h(x); v < best) {
        best = v;
        best_x = x;
      }
    }
    const double step = 6.0 / (n - 1);
    const double grid_err = std::abs(std::log(best_x / xs)) > step ? 1.0 : 0.0;
    const double value_err = std::max(0.0, h(xs) - best) / std::max(1.0, best);
    record(r, std::max({stat, grid_err, value_err}));
  }
  return r;
}

PropertyResult reflection_suite(Gen& gen, int trials) {
  PropertyResult r{"reflection fixes p, squares to identity, det 1, preserves the form", 0, 0, 0.0, 1e-10};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const ProjVector<double> p = gen.nonisotropic(g, 0.2);
    const Isometry<double> rp = reflection(p);
    const double scale = std::max(1.0, max_abs(rp.m));
    const double fix = max_abs_diff(rp.apply(p.coords()), p.coords()) / max_abs(p.coords()) / scale;
    const double inv = max_abs_diff((rp * rp).m, Mat3<double>::identity()) / (scale * scale);
    const double dt = abs(det(rp.m) - Complex<double>(1.0)) / (scale * scale * scale);
    const double form = form_residual(rp, *g) / (scale * scale * std::max(1.0, max_abs(g->matrix())));
    record(r, std::max({fix, inv, dt, form}));
  }
  return r;
}

PropertyResult tance_scale_suite(Gen& gen, int trials) {
  PropertyResult r{"tance invariant under rescaling", 0, 0, 0.0, 1e-12};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const ProjVector<double> x = gen.nonisotropic(g, 0.2), y = gen.nonisotropic(g, 0.2);
    const double ta = tance(x, y);
    const double scaled = tance(gen.nonzero_scalar() * x, gen.nonzero_scalar() * y);
    record(r, std::abs(scaled - ta) / std::max(1.0, std::abs(ta)));
  }
  return r;
}

PropertyResult tance_isometry_suite(Gen& gen, int trials) {
  PropertyResult r{"tance invariant under isometries, including antilinear ones", 0, 0, 0.0, 1e-9};
  std::vector<Realization> rz;
  for (double t : {2.13, 2.2, 2.27, 2.34}) rz.push_back(realize(t));
  for (int i = 0; i < trials; ++i) {
    const Realization& z = rz[static_cast<std::size_t>(gen.integer(0, 3))];
    const GramPtr<double>& g = z.gram();
    const Isometry<double> iso = gen.isometry(g, &z.mirror.R3);
    const ProjVector<double> x = gen.nonisotropic(g, 0.2), y = gen.nonisotropic(g, 0.2);
    const double ta = tance(x, y);
    record(r, std::abs(tance(iso(x), iso(y)) - ta) / std::max(1.0, std::abs(ta)));
  }
  return r;
}

PropertyResult hermitian_symmetry_suite(Gen& gen, int trials) {
  PropertyResult r{"<u,v> = conj <v,u>", 0, 0, 0.0, 1e-12};
  for (int i = 0; i < trials; ++i) {
    const GramPtr<double> g = gen.gram();
    const ProjVector<double> u = gen.vector(g), v = gen.vector(g);
    record(r, abs(inner(u, v) - conj(inner(v, u))));
  }
  return r;
}

std::vector<PropertyResult> identity_suites(std::uint64_t seed, int trials) {
  Gen gen(seed);
  return {trace_identity_suite(gen, trials),  midpoint_identity_suite(gen, trials),
          decomposition_suite(gen, trials),   closest_point_suite(gen, trials),
          reflection_suite(gen, trials),      tance_scale_suite(gen, trials),
          tance_isometry_suite(gen, trials),  hermitian_symmetry_suite(gen, trials)};
}

}  // namespace chyp::testing
