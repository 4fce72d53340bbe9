#include "chyp/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chyp/cake/cake.hpp"
#include "chyp/numerics/errors.hpp"
#include "chyp/verification/report.hpp"
#include "chyp/verification/scan.hpp"

namespace chyp::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Backend parse_backend(const std::string& s) { return s == "rigorous" ? Backend::Rigorous : Backend::Fast; }

ordered_json flags_json(const RunOptions& o) {
  ordered_json f{{"command", o.command}};
  if (o.command == "verify" || o.command == "cake") f["t"] = o.t;
  if (o.command == "scan" || o.command == "certify") {
    f["lo"] = o.lo;
    f["hi"] = o.hi;
  }
  if (o.command == "scan") f["steps"] = o.steps;
  if (o.command == "certify") f["max_depth"] = o.max_depth;
  if (o.command == "verify" || o.command == "scan") f["backend"] = o.backend;
  f["format"] = o.format;
  f["tol_rel"] = o.tol_rel;
  f["tol_abs"] = o.tol_abs;
  return f;
}

void require_range(const RunOptions& o) {
  if (!(o.lo < o.hi)) throw UsageError("invalid range: --lo must be below --hi");
}

void require_format(const RunOptions& o, std::initializer_list<const char*> allowed) {
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* f) { return o.format == f; }))
    throw UsageError("format '" + o.format + "' is not available for " + o.command);
}

int run_verify(const RunOptions& o, std::ostream& out) {
  require_format(o, {"text", "structured"});
  ReportOptions ro;
  ro.t = o.t;
  ro.backend = parse_backend(o.backend);
  ro.tol_rel = o.tol_rel;
  ro.tol_abs = o.tol_abs;
  const VerificationReport rep = verify(ro);
  if (o.format == "structured")
    out << report_json(rep, flags_json(o)).dump(2) << '\n';
  else
    write_text(out, rep);
  return rep.all_pass() ? kPass : kVerificationFailure;
}

int run_scan(const RunOptions& o, std::ostream& out) {
  require_format(o, {"csv", "text", "structured"});
  if (o.steps == 0) throw UsageError("--steps must be at least 1");
  if (o.steps > 1) require_range(o);
  const auto rows = scan(o.lo, o.hi, o.steps, parse_backend(o.backend));
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.all_pass(); });
  if (o.format == "csv") {
    write_scan_csv(out, rows);
  } else if (o.format == "structured") {
    ordered_json doc{{"schema", kReportSchema}, {"command", "scan"}, {"flags", flags_json(o)}};
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row{{"t", r.t}, {"all_pass", r.all_pass()}};
      if (r.report) {
        const auto f = r.report->first_failure();
        row["first_failure"] = f ? std::string(condition_key(*f)) : "";
      }
      if (!r.error.empty()) row["error"] = r.error;
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    doc["all_pass"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << "t = " << r.t << ": ";
      if (!r.error.empty())
        out << "error: " << r.error;
      else if (r.all_pass())
        out << "all conditions hold";
      else
        out << "fails " << condition_key(*r.report->first_failure());
      out << '\n';
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kPass : kVerificationFailure;
}

int run_certify(const RunOptions& o, std::ostream& out) {
  require_format(o, {"text", "structured"});
  require_range(o);
  if (o.max_depth < 0) throw UsageError("--max-depth must be nonnegative");
  const Certification cert = certify_conditions(o.lo, o.hi, o.max_depth);
  const auto leaves = cert.leaves();
  const ReplayResult replay = cert.certified() ? replay_certificate(leaves, o.lo, o.hi) : ReplayResult{false, "not certified"};

  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot open " + o.out);
    std::ostringstream range;
    range << std::hexfloat << o.lo << ' ' << o.hi;
    write_certificate(file, leaves,
                      {"interval certificate for the triangle conditions", "range " + range.str(),
                       "max_depth " + std::to_string(o.max_depth),
                       std::string("status ") + (cert.certified() ? "certified" : "incomplete")});
  }

  if (o.format == "structured") {
    ordered_json doc{{"schema", kReportSchema}, {"command", "certify"}, {"flags", flags_json(o)}};
    ordered_json arr = ordered_json::array();
    for (const auto& c : cert.conditions) {
      ordered_json row{{"key", condition_key(c.id)},
                       {"status", to_string(c.outcome.status)},
                       {"leaves", c.outcome.leaves.size()},
                       {"deepest", c.outcome.deepest},
                       {"evaluations", c.outcome.evaluations}};
      if (!c.outcome.detail.empty()) row["detail"] = c.outcome.detail;
      arr.push_back(std::move(row));
    }
    doc["conditions"] = std::move(arr);
    doc["replay"] = {{"ok", replay.ok}, {"detail", replay.detail}};
    if (!o.out.empty()) doc["certificate"] = o.out;
    doc["certified"] = cert.certified() && replay.ok;
    out << doc.dump(2) << '\n';
  } else {
    out << "certifying [" << o.lo << ", " << o.hi << "] to depth " << o.max_depth << '\n';
    for (const auto& c : cert.conditions) {
      out << "  " << condition_key(c.id) << ": " << to_string(c.outcome.status) << ", " << c.outcome.leaves.size()
          << " leaves, depth " << c.outcome.deepest;
      if (!c.outcome.detail.empty()) out << " (" << c.outcome.detail << ")";
      out << '\n';
    }
    out << "replay: " << (replay.ok ? "ok" : "failed") << (replay.detail.empty() ? "" : " (" + replay.detail + ")")
        << '\n';
    if (!o.out.empty()) out << "certificate written to " << o.out << '\n';
    out << "result: " << (cert.certified() && replay.ok ? "PASS" : "FAIL") << '\n';
  }
  return cert.certified() && replay.ok ? kPass : kVerificationFailure;
}

int run_cake(const RunOptions& o, std::ostream& out) {
  require_format(o, {"text", "structured"});
  const Realization rz = realize(o.t);
  const CakeStructure cake = build_cake(rz);
  const auto maps = verify_mapping_tables(rz);
  const auto ids = verify_identifications(rz);
  const bool maps_ok = std::all_of(maps.begin(), maps.end(), [](const MappingCheck& m) { return m.ok(); });
  const bool ids_ok = std::all_of(ids.begin(), ids.end(), [](const IdentificationCheck& c) { return c.ok(); });
  const bool ok = maps_ok && ids_ok && cake.edge_pairs == 8 && cake.orbit_count == 3 && cake.genus == 3 &&
                  cake.all_counterclockwise;

  if (o.format == "structured") {
    ordered_json doc{{"schema", kReportSchema}, {"command", "cake"}, {"flags", flags_json(o)}};
    ordered_json tris = ordered_json::array();
    for (const auto& t : cake.triangles)
      tris.push_back({{"index", t.index}, {"word", t.word.to_string()}, {"primed", t.primed},
                      {"counterclockwise", t.counterclockwise()}});
    ordered_json boundary = ordered_json::array();
    for (std::size_t i = 0; i < cake.boundary.size(); ++i)
      boundary.push_back({{"vertex", cake.boundary[i].to_string()},
                          {"side_owner", cake.boundary_owner[i]},
                          {"orbit", cake.vertex_orbit[i]}});
    ordered_json pairs = ordered_json::array();
    for (const auto& p : cake.pairings)
      pairs.push_back({{"name", p.name}, {"source_side", p.source_side}, {"target_side", p.target_side}});
    doc["triangles"] = std::move(tris);
    doc["boundary"] = std::move(boundary);
    doc["pairings"] = std::move(pairs);
    doc["vertex_cycles"] = cake.orbit_count;
    doc["edge_pairs"] = cake.edge_pairs;
    doc["euler_characteristic"] = cake.euler_characteristic;
    doc["genus"] = cake.genus;
    doc["mapping_tables_ok"] = maps_ok;
    doc["identifications_ok"] = ids_ok;
    doc["all_pass"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    dump_cake(out, cake);
    out << "mapping_tables " << (maps_ok ? "ok" : "FAILED") << '\n'
        << "identifications " << (ids_ok ? "ok" : "FAILED") << '\n'
        << "result " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kPass : kVerificationFailure;
}

void add_common(CLI::App& sub, RunOptions& o, std::initializer_list<const char*> formats) {
  sub.add_option("--format", o.format, "output format")->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
  sub.add_option("--tol-rel", o.tol_rel, "relative tolerance for reference values")->capture_default_str();
  sub.add_option("--tol-abs", o.tol_abs, "zero snap for sign verdicts")->capture_default_str();
}

void add_backend(CLI::App& sub, RunOptions& o) {
  sub.add_option("--backend", o.backend, "fast or rigorous")
      ->check(CLI::IsMember({"fast", "rigorous"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunOptions o;
  CLI::App app{"Verification tool for a complex hyperbolic triangle-group surface bundle", "chyp"};
  app.require_subcommand(1);

  CLI::App* verify_cmd = app.add_subcommand("verify", "full verification pipeline at one parameter");
  verify_cmd->add_option("--t", o.t, "parameter t")->capture_default_str();
  add_backend(*verify_cmd, o);
  add_common(*verify_cmd, o, {"text", "structured"});

  CLI::App* scan_cmd = app.add_subcommand("scan", "evaluate the conditions on a grid");
  scan_cmd->add_option("--lo", o.lo)->capture_default_str();
  scan_cmd->add_option("--hi", o.hi)->capture_default_str();
  scan_cmd->add_option("--steps", o.steps, "number of grid points")->capture_default_str();
  add_backend(*scan_cmd, o);
  add_common(*scan_cmd, o, {"csv", "text", "structured"});

  CLI::App* certify_cmd = app.add_subcommand("certify", "interval certificate for the conditions");
  certify_cmd->add_option("--lo", o.lo)->capture_default_str();
  certify_cmd->add_option("--hi", o.hi)->capture_default_str();
  certify_cmd->add_option("--max-depth", o.max_depth, "bisection depth limit")->capture_default_str();
  certify_cmd->add_option("--out", o.out, "certificate file");
  add_common(*certify_cmd, o, {"text", "structured"});

  CLI::App* cake_cmd = app.add_subcommand("cake", "combinatorial audit of the fundamental domain");
  cake_cmd->add_option("--t", o.t, "parameter t")->capture_default_str();
  add_common(*cake_cmd, o, {"text", "structured"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  o.command = app.get_subcommands().front()->get_name();
  if (o.format == "text" && o.command == "scan" && scan_cmd->count("--format") == 0) o.format = "csv";
  try {
    if (o.command == "verify") return run_verify(o, out);
    if (o.command == "scan") return run_scan(o, out);
    if (o.command == "certify") return run_certify(o, out);
    return run_cake(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace chyp::cli
