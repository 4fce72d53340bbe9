#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chyp/numerics/interval.hpp"
#include "chyp/numerics/sign.hpp"

namespace chyp {

// Enclosure-valued function of a parameter enclosure.
using IntervalPredicate = std::function<Interval(const Interval&)>;

// One leaf of a bisection tree: on [lo, hi] the predicate enclosure for
// `condition` evaluated to `verdict`.
struct CertificateLeaf {
  double lo = 0.0;
  double hi = 0.0;
  std::string condition;
  SignVerdict verdict = SignVerdict::Indeterminate;

  friend bool operator==(const CertificateLeaf&, const CertificateLeaf&) = default;
};

enum class CertifyStatus {
  Certified,       // every leaf carries the required sign
  Counterexample,  // some subinterval certifiably carries the opposite sign
  DepthExceeded,   // a subinterval stayed indeterminate at max depth
  DomainFailure,   // a subinterval kept raising DomainError at max depth
};

std::string_view to_string(CertifyStatus s);

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::Certified;
  // Leaves in left-to-right order. On failure, holds the leaves certified
  // before the search stopped.
  std::vector<CertificateLeaf> leaves;
  std::optional<CertificateLeaf> offending;
  std::string detail;
  std::size_t evaluations = 0;
  int deepest = 0;

  bool certified() const { return status == CertifyStatus::Certified; }
};

// Adaptive bisection of [lo, hi]. A subinterval is certified when the
// predicate enclosure has the required sign there; a subinterval whose
// enclosure (or the enclosure at its midpoint) has the opposite sign is a
// counterexample; otherwise it is halved, up to max_depth levels.
CertifyOutcome certify_on_interval(const IntervalPredicate& predicate, SignVerdict required,
                                   double lo, double hi, int max_depth,
                                   const std::string& condition = "predicate");

// Re-evaluates the predicate on every leaf and checks the recorded verdict is
// reproduced. Leaves for other conditions are ignored.
bool replay_leaves(const std::vector<CertificateLeaf>& leaves, const std::string& condition,
                   const IntervalPredicate& predicate);

// Line-delimited certificate: '#' comment lines, then one leaf per line as
//   <lo> <hi> <condition-id> <verdict>
// with lo/hi in C99 hexadecimal floating-point so they round-trip exactly.
void write_certificate(std::ostream& os, const std::vector<CertificateLeaf>& leaves,
                       const std::vector<std::string>& header = {});
std::vector<CertificateLeaf> read_certificate(std::istream& is);

}  // namespace chyp
