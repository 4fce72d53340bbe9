#include "chyp/verification/invariants.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "chyp/hermitian/geodesic.hpp"
#include "chyp/numerics/phase.hpp"

namespace chyp {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator-(const Rational& a, const Rational& b) { return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_}; }
Rational operator*(const Rational& a, const Rational& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
Rational operator/(const Rational& a, const Rational& b) { return {a.num_ * b.den_, a.den_ * b.num_}; }

Rational abs(const Rational& r) { return r.num() < 0 ? Rational(-r.num(), r.den()) : r; }

Rational snap_to_two_thirds(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot snap a non-finite value");
  return {2 * static_cast<std::int64_t>(std::llround(x * 1.5)), 3};
}

double argument_variation(const ProjVector<double>& c1, const ProjVector<double>& ref, const ProjVector<double>& a,
                          const ProjVector<double>& b, std::size_t samples) {
  if (samples < 2) throw PreconditionError("argument_variation needs at least two samples");
  const GeodesicParam geo = geodesic_through(a, b);
  const double xa = geo.parameter_of(a), xb = geo.parameter_of(b);
  const Complex<double> denom = inner(c1, ref);
  std::vector<Complex<double>> f;
  f.reserve(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(samples);
    const ProjVector<double> x = geo.at(xa * std::pow(xb / xa, s));
    const Complex<double> v = inner(c1, x) * inner(x, ref) / denom;
    if (v.re > 0 && std::abs(v.im) <= 1e-9 * abs(v))
      throw DomainError("tracked function touches the nonnegative real axis");
    f.push_back(v);
  }
  return unwrap_phase(f);
}

ToledoReport toledo(const TriangleConfiguration<double>& cfg, std::size_t samples) {
  constexpr double pi = std::numbers::pi;
  const auto tau_of = [&](double variation) { return -(32.0 / pi) * ((pi + variation) / 2.0 - pi / 2.0); };

  ToledoReport rep;
  rep.samples = samples;
  rep.start_arg = arg(inner(cfg.c1, cfg.c2) * inner(cfg.c2, cfg.c2) / inner(cfg.c1, cfg.c2));
  rep.variation = argument_variation(cfg.c1, cfg.c2, cfg.c2, cfg.c3, samples);
  rep.end_arg = pi + rep.variation;
  rep.tau_raw = tau_of(rep.variation);
  rep.tau = snap_to_two_thirds(rep.tau_raw);
  rep.snap_deviation = std::abs(rep.tau_raw - rep.tau.value());

  const double refined = tau_of(argument_variation(cfg.c1, cfg.c2, cfg.c2, cfg.c3, 2 * samples));
  rep.refinement_delta = std::abs(refined - rep.tau_raw);

  const Complex<double> q = inner(cfg.c1, cfg.c3) * inner(cfg.c3, cfg.c2) / inner(cfg.c1, cfg.c2);
  const double a0 = std::fmod(arg(q) + 2 * pi, pi);
  int kept = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    const double lift = a0 + pi * static_cast<double>(i);
    rep.candidates[i] = snap_to_two_thirds(-(32.0 / pi) * (lift / 2.0 - pi / 2.0));
    if (abs(rep.candidates[i]).value() <= 4.0) {
      rep.selected = rep.candidates[i];
      ++kept;
    } else {
      rep.rejected = rep.candidates[i];
    }
  }
  if (kept != 1) throw DomainError("branch filter |tau| <= 4 does not select a unique candidate");
  rep.branch_agrees = rep.selected == rep.tau;

  rep.side_variation_1 = argument_variation(cfg.c1, cfg.c2, cfg.c1, cfg.c2, samples);
  rep.side_variation_3 = argument_variation(cfg.c1, cfg.c3, cfg.c3, cfg.c1, samples);
  return rep;
}

int euler_from_side(SignVerdict verdict) {
  switch (verdict) {
    case SignVerdict::Positive: return 0;
    case SignVerdict::Negative: return -16;
    default: throw DomainError("side value sign undecided");
  }
}

EulerSideTest euler_side_test(const TriangleConfiguration<double>& cfg, double zero_snap) {
  if (!cfg.w3) throw DomainError("configuration has no isotropic point w3");
  if (projectively_equal(cfg.b2, cfg.e2)) throw PreconditionError("b2 and e2 coincide");
  const ProjVector<double> f1 = (reflection(cfg.q1) * reflection(cfg.q3))(*cfg.w3);
  EulerSideTest out;
  out.side = (inner(cfg.b2, f1) * inner(f1, cfg.e2) / inner(cfg.b2, cfg.e2)).im;
  out.verdict = certified_sign(out.side, zero_snap);
  out.euler = euler_from_side(out.verdict);
  return out;
}

namespace {

CoverLedger make_cover(std::string name, int chi, int euler, const Rational& tau) {
  CoverLedger c{std::move(name), chi, (2 - chi) / 2, euler, tau, false, false};
  c.relation_holds = Rational(2 * (chi + euler)) == Rational(3) * tau;
  c.euler_mod8 = euler % 8 == 0;
  return c;
}

}  // namespace

InvariantLedger invariant_ledger(const Rational& tau, int euler, double angle_sum, double relation_residual) {
  constexpr int chi3 = 3 - 8 + 1;
  constexpr int chi2 = -2;
  InvariantLedger out;
  out.genus3 = make_cover("genus3", chi3, euler, tau);
  out.genus2 = make_cover("genus2", chi2, 0, tau * Rational(chi2, chi3));
  out.angle_sum = angle_sum;
  out.relation_residual = relation_residual;
  return out;
}

}  // namespace chyp
