#include "chyp/numerics/certify.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "chyp/numerics/errors.hpp"

namespace chyp {
namespace {

SignVerdict opposite(SignVerdict v) {
  return v == SignVerdict::Positive ? SignVerdict::Negative : SignVerdict::Positive;
}

struct Node {
  double lo;
  double hi;
  int depth;
};

std::string hex(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

}  // namespace

std::string_view to_string(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Certified: return "certified";
    case CertifyStatus::Counterexample: return "counterexample";
    case CertifyStatus::DepthExceeded: return "depth-exceeded";
    case CertifyStatus::DomainFailure: return "domain-failure";
  }
  return "?";
}

CertifyOutcome certify_on_interval(const IntervalPredicate& predicate, SignVerdict required,
                                   double lo, double hi, int max_depth,
                                   const std::string& condition) {
  if (!(lo < hi)) throw PreconditionError("certify_on_interval: need lo < hi");
  if (required != SignVerdict::Positive && required != SignVerdict::Negative)
    throw PreconditionError("certify_on_interval: required sign must be positive or negative");
  if (max_depth < 0) throw PreconditionError("certify_on_interval: negative max_depth");

  CertifyOutcome out;
  // Depth-first, left child on top, so leaves come out in parameter order.
  std::vector<Node> stack{{lo, hi, 0}};
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    out.deepest = std::max(out.deepest, node.depth);

    std::optional<SignVerdict> verdict;
    std::string domain_message;
    try {
      ++out.evaluations;
      verdict = certified_sign(predicate(Interval(node.lo, node.hi)));
    } catch (const DomainError& e) {
      domain_message = e.what();
    }

    if (verdict == required) {
      out.leaves.push_back({node.lo, node.hi, condition, required});
      continue;
    }
    if (verdict == opposite(required)) {
      out.status = CertifyStatus::Counterexample;
      out.offending = CertificateLeaf{node.lo, node.hi, condition, *verdict};
      return out;
    }
    // Cheap falsification probe before splitting further.
    const double m = 0.5 * node.lo + 0.5 * node.hi;
    try {
      ++out.evaluations;
      if (certified_sign(predicate(Interval(m))) == opposite(required)) {
        out.status = CertifyStatus::Counterexample;
        out.offending = CertificateLeaf{node.lo, node.hi, condition, opposite(required)};
        out.detail = "midpoint " + hex(m) + " has the opposite sign";
        return out;
      }
    } catch (const DomainError&) {
      // The point evaluation is outside the domain as well; keep splitting.
    }
    if (node.depth >= max_depth || !(node.lo < m && m < node.hi)) {
      out.offending = CertificateLeaf{node.lo, node.hi, condition, SignVerdict::Indeterminate};
      if (!domain_message.empty()) {
        out.status = CertifyStatus::DomainFailure;
        out.detail = domain_message;
      } else {
        out.status = CertifyStatus::DepthExceeded;
      }
      return out;
    }
    stack.push_back({m, node.hi, node.depth + 1});
    stack.push_back({node.lo, m, node.depth + 1});
  }
  return out;
}

bool replay_leaves(const std::vector<CertificateLeaf>& leaves, const std::string& condition,
                   const IntervalPredicate& predicate) {
  for (const auto& leaf : leaves) {
    if (leaf.condition != condition) continue;
    try {
      if (certified_sign(predicate(Interval(leaf.lo, leaf.hi))) != leaf.verdict) return false;
    } catch (const DomainError&) {
      return false;
    }
  }
  return true;
}

void write_certificate(std::ostream& os, const std::vector<CertificateLeaf>& leaves,
                       const std::vector<std::string>& header) {
  for (const auto& line : header) os << "# " << line << '\n';
  for (const auto& leaf : leaves) {
    os << hex(leaf.lo) << ' ' << hex(leaf.hi) << ' ' << leaf.condition << ' '
       << to_string(leaf.verdict) << '\n';
  }
}

std::vector<CertificateLeaf> read_certificate(std::istream& is) {
  std::vector<CertificateLeaf> leaves;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string lo, hi, condition, verdict;
    if (!(fields >> lo >> hi >> condition >> verdict))
      throw PreconditionError("certificate line " + std::to_string(line_no) + " is malformed");
    CertificateLeaf leaf;
    leaf.lo = std::strtod(lo.c_str(), nullptr);
    leaf.hi = std::strtod(hi.c_str(), nullptr);
    leaf.condition = condition;
    leaf.verdict = sign_verdict_from_string(verdict);
    if (!(leaf.lo <= leaf.hi))
      throw PreconditionError("certificate line " + std::to_string(line_no) + " has lo > hi");
    leaves.push_back(std::move(leaf));
  }
  return leaves;
}

}  // namespace chyp
