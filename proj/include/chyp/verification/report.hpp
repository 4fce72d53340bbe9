#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chyp/verification/conditions.hpp"

namespace chyp {

inline constexpr const char* kReportSchema = "chyp-report/1";
inline constexpr double kDefaultT = 2.22;

struct ReportOptions {
  double t = kDefaultT;
  Backend backend = Backend::Fast;
  double tol_rel = 0.02;   // reference-value tolerance, relative to max(1, |expected|)
  double tol_abs = 1e-12;  // zero snap for sign verdicts
  std::size_t toledo_samples = 4096;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  ReportOptions options;
  nlohmann::ordered_json data;  // parameters, conditions, reference, relations, mirror, invariants, cake
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* first_failure() const;
};

// Runs the full pipeline at options.t. Throws DomainError when the
// configuration cannot be built at all; failures of later stages are recorded
// as failing checks.
VerificationReport verify(const ReportOptions& options = {});

// Structured document with stable key order; `flags` is echoed verbatim.
nlohmann::ordered_json report_json(const VerificationReport& report, const nlohmann::ordered_json& flags = {});
void write_text(std::ostream& os, const VerificationReport& report);

}  // namespace chyp
