#include "chyp/verification/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "chyp/cake/cake.hpp"
#include "chyp/construction/mirror.hpp"
#include "chyp/numerics/errors.hpp"
#include "chyp/verification/invariants.hpp"
#include "chyp/verification/relations.hpp"

namespace chyp {

using nlohmann::ordered_json;

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double pi = std::numbers::pi;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string num(const Complex<double>& z) {
  return num(z.re) + (z.im < 0 ? " - " : " + ") + num(std::abs(z.im)) + "i";
}

ordered_json cjson(const Complex<double>& z) { return ordered_json::array({z.re, z.im}); }

class Checks {
 public:
  explicit Checks(std::vector<Check>& out) : out_(out) {}

  void add(std::string name, bool pass, std::string detail) {
    out_.push_back({std::move(name), pass, std::move(detail)});
  }
  // Residual-style check: pass iff value < tol.
  void below(std::string name, double value, double tol) {
    add(std::move(name), value < tol, num(value) + " < " + num(tol));
  }
  // Runs a stage; a DomainError or logic error becomes one failing check.
  bool stage(const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const std::exception& e) {
      add(name, false, std::string("stage failed: ") + e.what());
      return false;
    }
  }

 private:
  std::vector<Check>& out_;
};

struct ReferenceValue {
  const char* name;
  double expected;
  double computed;
};

void reference_values(const ReportOptions& opt, const ConditionValues<double>& v, const ParameterTriple<double>& p,
                      ordered_json& data, Checks& checks) {
  const std::array<ReferenceValue, 11> rows{{
      {"signature_lhs", 4.33, v.signature},
      {"transversal_a", 1.44, v.transversal_a},
      {"transversal_b", 1.56, v.transversal_b},
      {"elliptic", 1.86, v.elliptic},
      {"tance_c3_d3", 1.43, v.u},
      {"w3_pairing_re", -7.63, v.w3_pairing.re},
      {"w3_pairing_im", -4.41, v.w3_pairing.im},
      {"f1_side", 3.68, v.f1_side},
      {"angle_re_1", 13.11, v.angle_re[0]},
      {"angle_re_2", 29.62, v.angle_re[1]},
      {"angle_re_3", 31.05, v.angle_re[2]},
  }};
  ordered_json arr = ordered_json::array();
  const auto one = [&](const std::string& name, double expected, double computed) {
    const double tol = opt.tol_rel * std::max(1.0, std::abs(expected));
    const bool ok = std::abs(computed - expected) <= tol;
    arr.push_back({{"name", name}, {"expected", expected}, {"computed", computed}, {"tolerance", tol}, {"pass", ok}});
    checks.add("reference." + name, ok, num(computed) + " vs expected " + num(expected));
  };
  for (const auto& r : rows) one(r.name, r.expected, r.computed);
  one("angle_pair_re", 248.24, v.angle_pair_re);

  const auto two_decimals = [&](const std::string& name, double expected, double computed) {
    const bool ok = std::abs(std::round(computed * 100.0) / 100.0 - expected) < 1e-9;
    arr.push_back({{"name", name}, {"expected", expected}, {"computed", computed}, {"tolerance", "two decimals"},
                   {"pass", ok}});
    checks.add("reference." + name, ok, num(computed) + " rounds to " + num(std::round(computed * 100.0) / 100.0));
  };
  two_decimals("t1", 2.23, p.t1);
  two_decimals("t2", 3.22, p.t2);
  data["reference"] = std::move(arr);
}

}  // namespace

bool VerificationReport::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::first_failure() const {
  const auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

VerificationReport verify(const ReportOptions& opt) {
  VerificationReport rep;
  rep.options = opt;
  ordered_json& data = rep.data;
  Checks checks(rep.checks);

  // Conditions first: they need only the configuration, and a DomainError
  // here means the construction is undefined at t.
  const ConditionReport cond = condition_report(opt.t, opt.backend, opt.tol_abs);
  const ParameterTriple<double> params = solve_parameters(opt.t);

  {
    const auto [r1, r2] = parameter_equation_residuals(params);
    const GramPtr<double> gram = build_gram(params);
    const double det_gram = det(gram->matrix()).re;
    const auto minors = gram->leading_minors();
    data["parameters"] = {{"t", params.t},
                          {"t1", params.t1},
                          {"t2", params.t2},
                          {"equation_residuals", {r1, r2}},
                          {"t1_quadratic", t1_quadratic(params.t, params.t1)},
                          {"signature_lhs", signature_lhs(params)},
                          {"det_gram", det_gram},
                          {"leading_minors", {minors[0], minors[1], minors[2]}}};
    const double scale = std::max({1.0, params.t * params.t, params.t2 * params.t2});
    checks.below("parameters.equations", std::max(r1, r2) / scale, 1e-11);
    checks.add("parameters.t2_exceeds_t1", params.t2 > params.t1, num(params.t2) + " > " + num(params.t1));
    checks.below("parameters.det_gram", std::abs(det_gram - (1.0 - signature_lhs(params))), 1e-9 * scale);
  }

  {
    ordered_json arr = ordered_json::array();
    const auto& v = cond.values;
    for (std::size_t i = 0; i < kAllConditions.size(); ++i) {
      const ConditionId id = kAllConditions[i];
      ordered_json row{{"key", condition_key(id)}, {"statement", condition_statement(id)}};
      if (id == ConditionId::W3ImagesDistinct)
        row["value"] = cjson(v.w3_pairing);
      else
        row["value"] = [&] {
          switch (id) {
            case ConditionId::Signature: return v.signature;
            case ConditionId::TransversalA: return v.transversal_a;
            case ConditionId::TransversalB: return v.transversal_b;
            case ConditionId::Elliptic: return v.elliptic;
            case ConditionId::TanceC3D3: return v.u;
            case ConditionId::F1Side: return v.f1_side;
            case ConditionId::AngleRe1: return v.angle_re[0];
            case ConditionId::AngleRe2: return v.angle_re[1];
            case ConditionId::AngleRe3: return v.angle_re[2];
            default: return v.angle_pair_re;
          }
        }();
      row["margin"] = condition_margin(v, id);
      row["verdict"] = to_string(cond.verdicts[i]);
      arr.push_back(std::move(row));
      checks.add("condition." + std::string(condition_key(id)), cond.passes(id),
                 "margin " + num(condition_margin(v, id)) + " is " + std::string(to_string(cond.verdicts[i])));
    }
    data["conditions"] = std::move(arr);
  }

  if (std::abs(opt.t - kDefaultT) < 1e-15) reference_values(opt, cond.values, params, data, checks);

  std::optional<Realization> rz;
  checks.stage("mirror.construction", [&] { rz = realize(opt.t); });
  if (!rz) return rep;
  const auto& cfg = rz->cfg;
  const auto& mirror = rz->mirror;

  {
    const double m1 = std::abs(inner(cfg.m1, cfg.m1).re + 1.0);
    const double m2 = std::abs(inner(cfg.m2, cfg.m2).re + 1.0);
    const double r1p1 = max_abs_diff(cfg.R1.apply(cfg.p[0].coords()), Complex<double>(-1.0) * cfg.p[1].coords());
    const double r2p2 =
        max_abs_diff(cfg.R2.apply(theta<double>() * cfg.p[1].coords()), Complex<double>(-1.0) * cfg.p[2].coords());
    const double w3 = cfg.w3 ? abs(inner(*cfg.w3, *cfg.w3)) / form_scale(*cfg.w3) : INFINITY;
    data["construction"] = {{"midpoint_norm_residuals", {m1, m2}},
                            {"reflection_image_residuals", {r1p1, r2p2}},
                            {"w3_isotropy", w3},
                            {"c1_class", to_string(classify(cfg.c1))},
                            {"w3_class", cfg.w3 ? to_string(classify(*cfg.w3)) : "absent"}};
    checks.below("construction.midpoints_unit", std::max(m1, m2), kResidualTol);
    checks.below("construction.reflection_images", std::max(r1p1, r2p2), kResidualTol);
    checks.below("construction.w3_isotropic", w3, kResidualTol);
  }

  {
    const double trace_err = abs(mirror.trace - Complex<double>(2.0 * opt.t));
    data["mirror"] = {{"trace", cjson(mirror.trace)},
                      {"r", mirror.decomposition.r},
                      {"x", mirror.decomposition.x},
                      {"decomposition_residual", mirror.decomposition.residual},
                      {"normalization", mirror.normalization},
                      {"conjugate_gram_residual", mirror.gram_conj_residual},
                      {"involution_residual", mirror.involution_residual},
                      {"form_residual", mirror.form_residual}};
    checks.below("mirror.trace_equals_2t", trace_err, kResidualTol);
    checks.below("mirror.decomposition", mirror.decomposition.residual, kResidualTol);
    checks.below("mirror.conjugate_gram", mirror.gram_conj_residual, kResidualTol);
    checks.below("mirror.involution", mirror.involution_residual, kResidualTol);
  }

  ordered_json relations;
  double relation_residual = INFINITY;
  checks.stage("relation", [&] {
    const RelationReport rel = check_relation(*rz);
    relation_residual = rel.residual;
    relations["word"] = {{"linear", rel.linear},
                         {"residual", rel.residual},
                         {"scalar", cjson(rel.scalar)},
                         {"square_residual", rel.square_residual},
                         {"square_scalar", cjson(rel.square_scalar)}};
    checks.add("relation.linear", rel.linear, rel.linear ? "linear" : "antilinear");
    checks.below("relation.equals_theta_inverse_squared", rel.residual, kResidualTol);
    checks.below("relation.square_equals_theta_squared", rel.square_residual, kResidualTol);
  });
  checks.stage("mirror_vertices", [&] {
    const MirrorVertexReport mv = check_mirror_vertices(*rz);
    relations["mirror_vertices"] = {{"r3c3_minus_theta_inv2", mv.r3c3_inverse_residual},
                                    {"r3c3_minus_theta2", mv.r3c3_direct_residual},
                                    {"r3d1_minus_theta_inv2", mv.r3d1_inverse_residual},
                                    {"r3d1_minus_theta2", mv.r3d1_direct_residual},
                                    {"r3c1_fixed", mv.r3c1_residual},
                                    {"q", cjson(mv.q)},
                                    {"arg_q", mv.arg_q},
                                    {"arg_q_mod_pi", mv.arg_q_mod_pi},
                                    {"deviation_from_pi_over_6", mv.deviation_conj_class},
                                    {"deviation_from_5pi_over_6", mv.deviation_th_class},
                                    {"im_c1c2_relative", mv.im_c1c2},
                                    {"im_c3c2_relative", mv.im_c3c2},
                                    {"geodesics_distinct", mv.geodesics_distinct}};
    checks.add("vertices.r3_c3_is_minus_theta_inv2_c3", mv.r3c3_inverse_residual < kResidualTol,
               "residual " + num(mv.r3c3_inverse_residual) + "; against -th^2 c3: " + num(mv.r3c3_direct_residual));
    checks.add("vertices.r3_d1_is_minus_theta_inv2_d1", mv.r3d1_inverse_residual < kResidualTol,
               "residual " + num(mv.r3d1_inverse_residual) + "; against -th^2 d1: " + num(mv.r3d1_direct_residual));
    checks.below("vertices.r3_fixes_c1", mv.r3c1_residual, kResidualTol);
    checks.add("vertices.arg_q_is_pi_over_6_mod_pi", mv.deviation_conj_class < kResidualTol,
               "Arg q = " + num(mv.arg_q) + ", deviation " + num(mv.deviation_conj_class));
    const bool distinct = std::all_of(mv.geodesics_distinct.begin(), mv.geodesics_distinct.end(), [](bool b) { return b; });
    checks.add("vertices.geodesics_distinct", distinct, distinct ? "all three pairs distinct" : "coincident pair");
  });
  data["relations"] = std::move(relations);

  ordered_json invariants;
  double angle_sum = NAN;
  checks.stage("angles", [&] {
    const Angles a = angles(cfg);
    angle_sum = a.sum;
    invariants["angles"] = {{"beta", {a.beta[0], a.beta[1], a.beta[2]}}, {"sum", a.sum}, {"sum_minus_pi_over_2", a.sum - pi / 2}};
    checks.below("angles.sum_is_pi_over_2", std::abs(a.sum - pi / 2), kResidualTol);
  });

  std::optional<Rational> tau;
  checks.stage("toledo", [&] {
    const ToledoReport tr = toledo(cfg, opt.toledo_samples);
    tau = tr.tau;
    invariants["toledo"] = {{"samples", tr.samples},
                            {"start_arg", tr.start_arg},
                            {"variation", tr.variation},
                            {"end_arg", tr.end_arg},
                            {"tau_raw", tr.tau_raw},
                            {"tau", tr.tau.to_string()},
                            {"snap_deviation", tr.snap_deviation},
                            {"candidates", {tr.candidates[0].to_string(), tr.candidates[1].to_string()}},
                            {"selected", tr.selected.to_string()},
                            {"rejected", tr.rejected.to_string()},
                            {"branch_agrees", tr.branch_agrees},
                            {"side_variations", {tr.side_variation_1, tr.side_variation_3}},
                            {"refinement_delta", tr.refinement_delta}};
    checks.add("toledo.value_is_minus_8_over_3", tr.tau == Rational(-8, 3), "tracked tau = " + tr.tau.to_string());
    checks.below("toledo.snap_deviation", tr.snap_deviation, 1e-6);
    checks.add("toledo.rejected_is_40_over_3", tr.rejected == Rational(40, 3), "rejected " + tr.rejected.to_string());
    checks.add("toledo.branch_filter_agrees", tr.branch_agrees && abs(tr.selected).value() <= 4.0,
               "selected " + tr.selected.to_string());
    checks.below("toledo.side_variations", std::max(std::abs(tr.side_variation_1), std::abs(tr.side_variation_3)), 1e-6);
    checks.below("toledo.refinement", tr.refinement_delta, 1e-8);
  });

  std::optional<int> euler;
  checks.stage("euler", [&] {
    const EulerSideTest es = euler_side_test(cfg, opt.tol_abs);
    invariants["euler"] = {{"side_value", es.side}, {"verdict", to_string(es.verdict)}, {"euler", es.euler}};
    euler = es.euler;
    checks.add("euler.side_test_gives_zero", es.euler == 0, "e = " + std::to_string(es.euler));
  });

  if (tau && euler) {
    const InvariantLedger led = invariant_ledger(*tau, *euler, angle_sum, relation_residual);
    const auto cover = [](const CoverLedger& c) {
      return ordered_json{{"name", c.name},         {"chi", c.chi},
                          {"genus", c.genus},       {"euler", c.euler},
                          {"tau", c.tau.to_string()}, {"relation_holds", c.relation_holds},
                          {"euler_mod8", c.euler_mod8}};
    };
    invariants["ledger"] = {cover(led.genus3), cover(led.genus2)};
    const auto rel_text = [](const CoverLedger& c) {
      return "2(" + std::to_string(c.chi) + " + " + std::to_string(c.euler) + ") vs 3(" + c.tau.to_string() + ")";
    };
    checks.add("ledger.genus3_relation", led.genus3.relation_holds, rel_text(led.genus3));
    checks.add("ledger.genus2_relation", led.genus2.relation_holds, rel_text(led.genus2));
    checks.add("ledger.euler_mod_8", led.genus3.euler_mod8, "e = " + std::to_string(led.genus3.euler));
  }
  data["invariants"] = std::move(invariants);

  ordered_json cake_json;
  checks.stage("cake.mapping_tables", [&] {
    const auto maps = verify_mapping_tables(*rz);
    std::size_t good = 0;
    ordered_json rows = ordered_json::array();
    for (const auto& m : maps) {
      good += m.ok();
      rows.push_back({{"statement", m.statement}, {"expected", m.expected}, {"observed", m.observed}});
    }
    cake_json["mapping_tables"] = std::move(rows);
    checks.add("cake.mapping_tables", good == maps.size(),
               std::to_string(good) + "/" + std::to_string(maps.size()) + " as expected");
  });
  checks.stage("cake.identifications", [&] {
    const auto ids = verify_identifications(*rz);
    std::size_t good = 0;
    ordered_json rows = ordered_json::array();
    for (const auto& c : ids) {
      good += c.ok();
      rows.push_back({{"name", c.name},
                      {"form_residual", c.form_residual},
                      {"endpoints", {c.endpoints[0], c.endpoints[1]}}});
    }
    cake_json["identifications"] = std::move(rows);
    checks.add("cake.identifications", good == ids.size(),
               std::to_string(good) + "/" + std::to_string(ids.size()) + " map their sides");
  });
  checks.stage("cake.structure", [&] {
    const CakeStructure cake = build_cake(*rz);
    cake_json["structure"] = {{"triangles", cake.triangles.size()},
                              {"boundary_vertices", cake.boundary.size()},
                              {"edge_pairs", cake.edge_pairs},
                              {"vertex_cycles", cake.orbit_count},
                              {"euler_characteristic", cake.euler_characteristic},
                              {"genus", cake.genus},
                              {"all_counterclockwise", cake.all_counterclockwise}};
    checks.add("cake.triangle_count", cake.triangles.size() == 16, std::to_string(cake.triangles.size()));
    checks.add("cake.edge_pairs", cake.edge_pairs == 8, std::to_string(cake.edge_pairs));
    checks.add("cake.vertex_cycles", cake.orbit_count == 3, std::to_string(cake.orbit_count));
    checks.add("cake.genus", cake.euler_characteristic == -4 && cake.genus == 3,
               "chi " + std::to_string(cake.euler_characteristic) + ", genus " + std::to_string(cake.genus));
    checks.add("cake.orientation", cake.all_counterclockwise, cake.all_counterclockwise ? "all ccw" : "mixed");
  });
  checks.stage("cake.h5", [&] {
    const H5Check h5 = h5_presentation_check(*rz);
    cake_json["h5"] = {{"square_residuals", h5.square_residuals},
                       {"linear", h5.linear},
                       {"product_residual", h5.product_residual},
                       {"product_scalar", cjson(h5.product_scalar)}};
    checks.add("cake.h5_presentation", h5.ok(), "product residual " + num(h5.product_residual));
  });
  checks.stage("cake.sector_cycle", [&] {
    const SectorAngleCycle sc = c1_sector_cycle(*rz);
    cake_json["sector_cycle_total"] = sc.total;
    checks.below("cake.sector_cycle_is_2pi", std::abs(sc.total - 2 * pi), 1e-8);
  });
  data["cake"] = std::move(cake_json);
  return rep;
}

ordered_json report_json(const VerificationReport& report, const ordered_json& flags) {
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "verify";
  doc["flags"] = flags.is_null() ? ordered_json::object() : flags;
  doc["backend"] = to_string(report.options.backend);
  doc["tolerances"] = {{"reference_rel", report.options.tol_rel},
                       {"zero_snap", report.options.tol_abs},
                       {"residual", kResidualTol},
                       {"projective", 1e-9}};
  for (const auto& [key, value] : report.data.items()) doc[key] = value;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  doc["all_pass"] = report.all_pass();
  return doc;
}

void write_text(std::ostream& os, const VerificationReport& report) {
  const auto& d = report.data;
  os << "verification report at t = " << num(report.options.t) << " (backend " << to_string(report.options.backend)
     << ")\n";
  if (d.contains("parameters")) {
    const auto& p = d["parameters"];
    os << "parameters: t1 = " << num(p["t1"].get<double>()) << ", t2 = " << num(p["t2"].get<double>())
       << ", det G = " << num(p["det_gram"].get<double>()) << '\n';
  }
  if (d.contains("conditions")) {
    os << "conditions:\n";
    for (const auto& c : d["conditions"]) {
      os << "  " << c["key"].get<std::string>() << ": ";
      if (c["value"].is_array())
        os << num(Complex<double>{c["value"][0].get<double>(), c["value"][1].get<double>()});
      else
        os << num(c["value"].get<double>());
      os << " (" << c["verdict"].get<std::string>() << ")\n";
    }
  }
  if (d.contains("invariants") && d["invariants"].contains("toledo")) {
    const auto& tr = d["invariants"]["toledo"];
    os << "toledo: tau = " << tr["tau"].get<std::string>() << " (raw " << num(tr["tau_raw"].get<double>())
       << ", rejected branch " << tr["rejected"].get<std::string>() << ")\n";
  }
  std::size_t passed = 0;
  os << "checks:\n";
  for (const auto& c : report.checks) {
    passed += c.pass;
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
  }
  os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << " (" << passed << "/" << report.checks.size()
     << " checks)\n";
}

}  // namespace chyp
