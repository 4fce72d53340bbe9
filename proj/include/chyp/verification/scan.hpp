#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chyp/verification/conditions.hpp"

namespace chyp {

struct ScanRow {
  double t = 0.0;
  std::optional<ConditionReport> report;
  double t1 = 0.0;
  double t2 = 0.0;
  double angle_sum = 0.0;          // NaN when an angle product has nonpositive real part
  double relation_residual = 0.0;  // NaN when the mirror could not be built
  std::string error;               // set when the configuration could not be built

  bool all_pass() const { return report && report->all_pass(); }
};

// Equispaced grid of `steps` points from lo to hi (steps == 1 gives lo alone).
std::vector<double> scan_grid(double lo, double hi, std::size_t steps);

// Rows are evaluated concurrently and returned in grid order.
std::vector<ScanRow> scan(double lo, double hi, std::size_t steps, Backend backend = Backend::Fast);
ScanRow scan_row(double t, Backend backend);

const std::vector<std::string>& scan_csv_columns();
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

struct ConditionCertificate {
  ConditionId id;
  CertifyOutcome outcome;
};

struct Certification {
  double lo = 0.0;
  double hi = 0.0;
  int max_depth = 0;
  std::vector<ConditionCertificate> conditions;

  bool certified() const;
  std::vector<CertificateLeaf> leaves() const;
};

// Certifies every listed condition over [lo, hi] with the enclosure backend;
// conditions run concurrently and are reported in the listed order.
Certification certify_conditions(double lo, double hi, int max_depth,
                                 std::span<const ConditionId> ids = kAllConditions);

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

// Checks that, for every condition, the leaves tile [lo, hi] without gaps and
// that re-evaluating each leaf reproduces a positive verdict.
ReplayResult replay_certificate(const std::vector<CertificateLeaf>& leaves, double lo, double hi);

}  // namespace chyp
