#include "chyp/verification/scan.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "chyp/verification/relations.hpp"

namespace chyp {

std::vector<double> scan_grid(double lo, double hi, std::size_t steps) {
  if (!(lo < hi)) throw PreconditionError("scan range requires lo < hi");
  if (steps < 1) throw PreconditionError("scan requires at least one step");
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  if (steps > 1) out.back() = hi;
  return out;
}

ScanRow scan_row(double t, Backend backend) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  ScanRow row;
  row.t = t;
  row.angle_sum = nan;
  row.relation_residual = nan;
  try {
    const auto params = solve_parameters(t);
    row.t1 = params.t1;
    row.t2 = params.t2;
    row.report = condition_report(t, backend);
    const Realization rz = realize(t);
    row.relation_residual = check_relation(rz).residual;
    try {
      row.angle_sum = angles(rz.cfg).sum;
    } catch (const DomainError&) {
    }
  } catch (const std::exception& e) {
    if (!row.report) row.error = e.what();
  }
  return row;
}

std::vector<ScanRow> scan(double lo, double hi, std::size_t steps, Backend backend) {
  const std::vector<double> grid = scan_grid(lo, hi, steps);
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<ScanRow>>> parts;
  for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
    const std::size_t end = std::min(grid.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&grid, begin, end, backend] {
      std::vector<ScanRow> rows;
      for (std::size_t i = begin; i < end; ++i) rows.push_back(scan_row(grid[i], backend));
      return rows;
    }));
  }
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (auto& p : parts) {
    auto part = p.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

const std::vector<std::string>& scan_csv_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c{"t", "t1", "t2"};
    c.insert(c.end(), {"signature", "transversal_a", "transversal_b", "elliptic", "tance_c3_d3",
                       "w3_pairing_re", "w3_pairing_im", "f1_side", "angle_re_1", "angle_re_2", "angle_re_3",
                       "angle_pair_re", "angle_sum", "relation_residual", "backend", "all_pass", "first_failure",
                       "error"});
    return c;
  }();
  return cols;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  const auto& cols = scan_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  std::ostringstream num;
  num << std::setprecision(17);
  const auto fmt = [&num](double x) {
    num.str("");
    num << x;
    return num.str();
  };
  for (const auto& r : rows) {
    std::vector<std::string> f{fmt(r.t), fmt(r.t1), fmt(r.t2)};
    if (r.report) {
      const auto& v = r.report->values;
      for (double x : {v.signature, v.transversal_a, v.transversal_b, v.elliptic, v.u, v.w3_pairing.re,
                       v.w3_pairing.im, v.f1_side, v.angle_re[0], v.angle_re[1], v.angle_re[2], v.angle_pair_re})
        f.push_back(fmt(x));
    } else {
      f.insert(f.end(), 12, "");
    }
    f.push_back(fmt(r.angle_sum));
    f.push_back(fmt(r.relation_residual));
    f.emplace_back(r.report ? to_string(r.report->backend) : "");
    f.emplace_back(r.all_pass() ? "true" : "false");
    const auto ff = r.report ? r.report->first_failure() : std::nullopt;
    f.emplace_back(ff ? condition_key(*ff) : "");
    f.push_back(csv_escape(r.error));
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << '\n';
  }
}

bool Certification::certified() const {
  return !conditions.empty() &&
         std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.outcome.certified(); });
}

std::vector<CertificateLeaf> Certification::leaves() const {
  std::vector<CertificateLeaf> out;
  for (const auto& c : conditions) out.insert(out.end(), c.outcome.leaves.begin(), c.outcome.leaves.end());
  return out;
}

Certification certify_conditions(double lo, double hi, int max_depth, std::span<const ConditionId> ids) {
  if (!(lo < hi)) throw PreconditionError("certification range requires lo < hi");
  std::vector<std::future<CertifyOutcome>> jobs;
  for (ConditionId id : ids)
    jobs.push_back(std::async(std::launch::async, [=] {
      return certify_on_interval(condition_predicate(id), SignVerdict::Positive, lo, hi, max_depth,
                                 std::string(condition_key(id)));
    }));
  Certification out{lo, hi, max_depth, {}};
  for (std::size_t i = 0; i < ids.size(); ++i) out.conditions.push_back({ids[i], jobs[i].get()});
  return out;
}

ReplayResult replay_certificate(const std::vector<CertificateLeaf>& leaves, double lo, double hi) {
  std::map<std::string, std::vector<CertificateLeaf>> by_condition;
  for (const auto& l : leaves) by_condition[l.condition].push_back(l);
  for (ConditionId id : kAllConditions) {
    const std::string key(condition_key(id));
    auto it = by_condition.find(key);
    if (it == by_condition.end()) return {false, "no leaves for " + key};
    auto& ls = it->second;
    std::sort(ls.begin(), ls.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    double reach = lo;
    for (const auto& l : ls) {
      if (l.lo != reach) return {false, key + ": gap or overlap at " + std::to_string(l.lo)};
      if (l.verdict != SignVerdict::Positive) return {false, key + ": leaf without positive verdict"};
      reach = l.hi;
    }
    if (reach != hi) return {false, key + ": leaves stop at " + std::to_string(reach)};
    if (!replay_leaves(ls, key, condition_predicate(id))) return {false, key + ": replay disagrees"};
    by_condition.erase(it);
  }
  if (!by_condition.empty()) return {false, "unknown condition " + by_condition.begin()->first};
  return {true, "all leaves replayed"};
}

}  // namespace chyp
