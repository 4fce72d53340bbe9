#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chyp::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

struct RunOptions {
  std::string command;
  double t = 2.22;
  double lo = 2.13;
  double hi = 2.34;
  std::size_t steps = 22;
  std::string backend = "fast";
  std::string format = "text";
  double tol_rel = 0.02;
  double tol_abs = 1e-12;
  int max_depth = 16;
  std::string out;  // certificate path for `certify`
};

// Entry point shared by the binary and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chyp::cli
