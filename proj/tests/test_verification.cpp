#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "chyp/construction/mirror.hpp"
#include "chyp/verification/conditions.hpp"
#include "chyp/verification/invariants.hpp"
#include "chyp/verification/relations.hpp"
#include "chyp/verification/report.hpp"
#include "chyp/verification/scan.hpp"
#include "support/support.hpp"

using namespace chyp;
using std::numbers::pi;

namespace {

const Realization& rz222() {
  static const Realization rz = realize(2.22);
  return rz;
}

// Arg variation of <c1,x><x,c2>/<c1,c2> along [c2, c3], sampled uniformly in
// the geodesic parameter and unwrapped by principal increments.
double oracle_variation(const TriangleConfiguration<double>& cfg, int n) {
  const GeodesicParam geo = geodesic_through(cfg.c2, cfg.c3);
  const double xa = geo.parameter_of(cfg.c2), xb = geo.parameter_of(cfg.c3);
  const auto f = [&](double x) {
    const ProjVector<double> y = geo.at(x);
    return to_std(inner(cfg.c1, y) * inner(y, cfg.c2) / inner(cfg.c1, cfg.c2));
  };
  double total = 0.0;
  std::complex<double> prev = f(xa);
  for (int k = 1; k <= n; ++k) {
    const std::complex<double> cur = f(xa + (xb - xa) * k / n);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return total;
}

}  // namespace

TEST_CASE("condition values at 2.22 match the reference table") {
  const ConditionReport r = condition_report(2.22);
  const auto near = [](double v, double expected) { return std::abs(v - expected) <= 0.02 * std::max(1.0, std::abs(expected)); };
  CHECK(near(r.values.signature, 4.33));
  CHECK(near(r.values.transversal_a, 1.44));
  CHECK(near(r.values.transversal_b, 1.56));
  CHECK(near(r.values.elliptic, 1.86));
  CHECK(near(r.values.u, 1.43));
  CHECK(near(r.values.w3_pairing.re, -7.63));
  CHECK(near(r.values.w3_pairing.im, -4.41));
  CHECK(near(r.values.f1_side, 3.68));
  CHECK(near(r.values.angle_re[0], 13.11));
  CHECK(near(r.values.angle_re[1], 29.62));
  CHECK(near(r.values.angle_re[2], 31.05));
  CHECK(near(r.values.angle_pair_re, 248.24));
  CHECK(r.all_pass());
  CHECK_FALSE(r.first_failure().has_value());
}

TEST_CASE("condition keys round trip") {
  for (ConditionId id : kAllConditions) {
    const auto back = condition_from_key(condition_key(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
    CHECK_FALSE(condition_statement(id).empty());
  }
  CHECK_FALSE(condition_from_key("no_such_condition").has_value());
}

TEST_CASE("first failing condition outside the interval") {
  const ConditionReport r = condition_report(1.55);
  REQUIRE(r.first_failure().has_value());
  CHECK(condition_key(*r.first_failure()) == "transversal_a");
  CHECK_THROWS_AS(condition_report(1.4), DomainError);
}

TEST_CASE("rigorous and fast backends agree at 2.22") {
  const ConditionReport fast = condition_report(2.22, Backend::Fast);
  const ConditionReport rig = condition_report(2.22, Backend::Rigorous);
  CHECK(rig.all_pass());
  CHECK(rig.values.signature == doctest::Approx(fast.values.signature).epsilon(1e-9));
  CHECK(rig.values.f1_side == doctest::Approx(fast.values.f1_side).epsilon(1e-9));
}

TEST_CASE("group relation at 2.22 and random t") {
  const RelationReport r = check_relation(rz222());
  CHECK(r.linear);
  CHECK(r.residual < 1e-9);
  CHECK(abs(r.scalar - conj(theta<double>() * theta<double>())) < 1e-9);
  CHECK(r.square_residual < 1e-9);
  CHECK(abs(r.square_scalar - theta<double>() * theta<double>()) < 1e-9);

  chyp::testing::Gen gen(301);
  for (int i = 0; i < 20; ++i) {
    const double t = gen.uniform(2.13, 2.34);
    CAPTURE(t);
    const RelationReport rr = check_relation(realize(t));
    CHECK(rr.residual < 1e-9);
    CHECK(rr.square_residual < 1e-9);
  }
}

TEST_CASE("behaviour of the vertices under R3") {
  const MirrorVertexReport m = check_mirror_vertices(rz222());
  CHECK(m.r3c1_residual < 1e-9);
  CHECK(m.r3d1_inverse_residual < 1e-9);
  // Observed: c3 goes to -th^2 c3 and Arg q lands in the 5pi/6 class; see the ledger.
  CHECK(m.r3c3_direct_residual < 1e-9);
  CHECK(m.r3c3_inverse_residual > 1.0);
  CHECK(m.deviation_th_class < 1e-9);
  CHECK(m.arg_q_mod_pi == doctest::Approx(5 * pi / 6));
  CHECK(m.geodesics_distinct[0]);
  CHECK(m.geodesics_distinct[1]);
  CHECK(m.geodesics_distinct[2]);
  CHECK(circular_distance(0.1, pi - 0.1, pi) == doctest::Approx(0.2));
}

TEST_CASE("angle sum over the interval") {
  for (int i = 0; i < 22; ++i) {
    const double t = 2.13 + 0.21 * i / 21;
    CAPTURE(t);
    CHECK(std::abs(angles(build_configuration(t)).sum - pi / 2) < 1e-9);
  }
}

TEST_CASE("Toledo phase tracking against an independent sampler") {
  const auto& cfg = rz222().cfg;
  const ToledoReport tl = toledo(cfg);
  const double oracle = oracle_variation(cfg, 20000);
  CHECK(tl.variation == doctest::Approx(oracle).epsilon(1e-9));
  CHECK(tl.start_arg == doctest::Approx(pi));
  CHECK(tl.snap_deviation < 1e-6);
  CHECK(tl.refinement_delta < 1e-8);
  CHECK(tl.branch_agrees);
  CHECK(abs(tl.selected).value() <= 4.0);
  // Observed value; the expected sign is the opposite one.
  CHECK(tl.tau == Rational(8, 3));
  CHECK(tl.rejected == Rational(-40, 3));
  CHECK(-(32 / pi) * ((pi + oracle) / 2 - pi / 2) == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("rational arithmetic and snapping") {
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(-8, 3) * Rational(3)) == Rational(-8));
  CHECK(Rational(-8, 3).to_string() == "-8/3");
  CHECK(snap_to_two_thirds(-2.6666) == Rational(-8, 3));
  CHECK(snap_to_two_thirds(13.3) == Rational(40, 3));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(snap_to_two_thirds(NAN), DomainError);
}

TEST_CASE("Euler side test") {
  const EulerSideTest e = euler_side_test(rz222().cfg);
  CHECK(e.side == doctest::Approx(3.68).epsilon(0.01));
  CHECK(e.verdict == SignVerdict::Positive);
  CHECK(e.euler == 0);
  CHECK(euler_from_side(SignVerdict::Negative) == -16);
  CHECK_THROWS_AS(euler_from_side(SignVerdict::Indeterminate), DomainError);
}

TEST_CASE("invariant ledger arithmetic") {
  const InvariantLedger expected = invariant_ledger(Rational(-8, 3), 0, pi / 2, 0.0);
  CHECK(expected.genus3.chi == -4);
  CHECK(expected.genus2.chi == -2);
  CHECK(expected.genus2.tau == Rational(-4, 3));
  CHECK(expected.holds());
  CHECK_FALSE(invariant_ledger(Rational(-8, 3), -16, pi / 2, 0.0).genus3.relation_holds);

  const InvariantLedger computed = invariant_ledger(toledo(rz222().cfg).tau, euler_side_test(rz222().cfg).euler, pi / 2, 0.0);
  CHECK(computed.genus3.euler_mod8);
  CHECK_FALSE(computed.genus3.relation_holds);
  CHECK_FALSE(computed.holds());
}

TEST_CASE("scan over the interval") {
  const auto rows = scan(2.13, 2.34, 22);
  REQUIRE(rows.size() == 22);
  CHECK(rows.front().t == 2.13);
  CHECK(rows.back().t == doctest::Approx(2.34));
  for (const auto& r : rows) {
    CAPTURE(r.t);
    CHECK(r.all_pass());
    CHECK(std::abs(r.angle_sum - pi / 2) < 1e-9);
    CHECK(r.relation_residual < 1e-9);
  }
  CHECK(scan_grid(1.0, 2.0, 1) == std::vector<double>{1.0});

  std::ostringstream csv;
  write_scan_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(std::count(line.begin(), line.end(), ',') + 1 == static_cast<long>(scan_csv_columns().size()));
  int n = 0;
  while (std::getline(in, line)) ++n;
  CHECK(n == 22);

  const ScanRow bad = scan_row(1.4, Backend::Fast);
  CHECK_FALSE(bad.all_pass());
  CHECK_FALSE(bad.error.empty());
}

TEST_CASE("certification of a subinterval and its replay") {
  const Certification c = certify_conditions(2.20, 2.24, 12);
  CHECK(c.certified());
  const auto leaves = c.leaves();
  CHECK(replay_certificate(leaves, 2.20, 2.24).ok);
  CHECK_FALSE(replay_certificate(leaves, 2.20, 2.25).ok);

  std::stringstream ss;
  write_certificate(ss, leaves, {"subinterval"});
  CHECK(read_certificate(ss) == leaves);

  auto tampered = leaves;
  tampered.pop_back();
  CHECK_FALSE(replay_certificate(tampered, 2.20, 2.24).ok);
}

TEST_CASE("certification reports the failing condition below the interval") {
  const std::array<ConditionId, 1> ids{ConditionId::TransversalA};
  const Certification c = certify_conditions(1.52, 1.58, 10, ids);
  CHECK_FALSE(c.certified());
}

TEST_CASE("verification report") {
  const VerificationReport r = verify();
  CHECK_FALSE(r.all_pass());
  std::vector<std::string> failing;
  for (const auto& c : r.checks)
    if (!c.pass) failing.push_back(c.name);
  const std::vector<std::string> expected{"vertices.r3_c3_is_minus_theta_inv2_c3", "vertices.arg_q_is_pi_over_6_mod_pi",
                                          "toledo.value_is_minus_8_over_3",        "toledo.rejected_is_40_over_3",
                                          "ledger.genus3_relation",                "ledger.genus2_relation"};
  CHECK(failing == expected);
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name == expected.front());

  const auto doc = report_json(r);
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc.contains("parameters"));
  CHECK(doc.contains("conditions"));
  CHECK(doc.contains("relations"));
  CHECK(doc.contains("invariants"));
  CHECK(doc.contains("tolerances"));
  CHECK(doc.contains("backend"));
  CHECK(report_json(verify()).dump() == doc.dump());

  std::ostringstream text;
  write_text(text, r);
  CHECK(text.str().find("FAIL toledo.value_is_minus_8_over_3") != std::string::npos);

  ReportOptions off;
  off.t = 2.3;
  const VerificationReport r23 = verify(off);
  for (const auto& c : r23.checks) CHECK(c.name.rfind("reference.", 0) != 0);
}
