#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "chyp/construction/configuration.hpp"

namespace chyp {

// Exact rational with positive denominator in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

Rational abs(const Rational& r);

// Nearest element of (2/3)Z.
Rational snap_to_two_thirds(double x);

struct ToledoReport {
  std::size_t samples = 0;
  double start_arg = 0.0;   // Arg f at c2; pi since <c2,c2> < 0
  double variation = 0.0;   // continuous Arg variation of f from c2 to c3
  double end_arg = 0.0;     // start_arg + variation
  double tau_raw = 0.0;     // -(32/pi) (end_arg / 2 - pi/2)
  Rational tau;             // tau_raw snapped to (2/3)Z
  double snap_deviation = 0.0;
  // Branch bookkeeping from Arg q alone: the two lifts A, A + pi of Arg q mod pi.
  std::array<Rational, 2> candidates;
  Rational selected;        // the candidate with |tau| <= 4
  Rational rejected;
  bool branch_agrees = false;        // tracked tau equals the selected candidate
  double side_variation_1 = 0.0;     // along c1 -> c2 against f for (c1, c2)
  double side_variation_3 = 0.0;     // along c3 -> c1 against f for (c1, c3)
  double refinement_delta = 0.0;     // |tau_raw(2N) - tau_raw(N)|
};

// f(x) = <c1,x><x,c2>/<c1,c2> is tracked along the geodesic segment from c2 to c3.
// Throws DomainError if f comes close to the nonnegative real axis.
ToledoReport toledo(const TriangleConfiguration<double>& cfg, std::size_t samples = 4096);

// Continuous Arg variation of <c1,x><x,ref>/<c1,ref> as x runs over the geodesic from a to b.
double argument_variation(const ProjVector<double>& c1, const ProjVector<double>& ref, const ProjVector<double>& a,
                          const ProjVector<double>& b, std::size_t samples);

struct EulerSideTest {
  double side = 0.0;  // Im(<b2,f1><f1,e2>/<b2,e2>)
  SignVerdict verdict = SignVerdict::Indeterminate;
  int euler = 0;      // 0 on the positive side, -16 on the negative side
};

// Maps the sign of the side value to the Euler number; throws DomainError if undecided.
int euler_from_side(SignVerdict verdict);
EulerSideTest euler_side_test(const TriangleConfiguration<double>& cfg, double zero_snap = kDefaultZeroSnap);

struct CoverLedger {
  std::string name;
  int chi = 0;
  int genus = 0;
  int euler = 0;
  Rational tau;
  bool relation_holds = false;  // 2 (chi + e) = 3 tau
  bool euler_mod8 = false;      // e = 0 mod 8
};

struct InvariantLedger {
  CoverLedger genus3;
  CoverLedger genus2;
  double angle_sum = 0.0;
  double relation_residual = 0.0;
  bool holds() const { return genus3.relation_holds && genus2.relation_holds && genus3.euler_mod8; }
};

// The genus-3 surface (3 vertex cycles, 8 edge pairs) carries tau and e;
// the genus-2 cover has chi = -2, e = 0 and tau scaled by chi.
InvariantLedger invariant_ledger(const Rational& tau, int euler, double angle_sum, double relation_residual);

}  // namespace chyp
