#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chyp/construction/configuration.hpp"
#include "chyp/numerics/certify.hpp"

namespace chyp {

// The existence inequalities of the triangle, each reduced to "margin > 0".
enum class ConditionId {
  Signature,         // t^2 + t1^2 + t2^2 - t t1 t2 > 1
  TransversalA,      // 4 t t1 t2 - t^2 - 4 t1^2 - 4 t2^2 + 4 > 0
  TransversalB,      // 4 t t1 t2 - 4 t^2 - t1^2 - 4 t2^2 + 4 > 0
  Elliptic,          // sqrt(3) (1 + (lhs - 1) / ((t+1)(t1+1)(t2+1))) < 2
  TanceC3D3,         // u = ta(c3, d3) > 1
  W3ImagesDistinct,  // <R(m3) w3, R1 R2 w3> != 0
  F1Side,            // Im(<b2,f1><f1,e2> / <b2,e2>) > 0, f1 = R(q1) R(q3) w3
  AngleRe1,          // Re <p2,c1><c1,p3> > 0
  AngleRe2,          // Re conj(th) <p3,c2><c2,p1> > 0
  AngleRe3,          // Re conj(th) <p1,c3><c3,p2> > 0
  AnglePairRe,       // Re conj(th) <p2,c1><c1,p3><p3,c2><c2,p1> > 0
};

inline constexpr std::array<ConditionId, 11> kAllConditions{
    ConditionId::Signature,   ConditionId::TransversalA,     ConditionId::TransversalB, ConditionId::Elliptic,
    ConditionId::TanceC3D3,   ConditionId::W3ImagesDistinct, ConditionId::F1Side,       ConditionId::AngleRe1,
    ConditionId::AngleRe2,    ConditionId::AngleRe3,         ConditionId::AnglePairRe};

std::string_view condition_key(ConditionId id);
std::string_view condition_statement(ConditionId id);
std::optional<ConditionId> condition_from_key(std::string_view key);

// Left-hand sides as written in the inequalities (not yet shifted to margins).
template <class R>
struct ConditionValues {
  R signature;
  R transversal_a;
  R transversal_b;
  R elliptic;
  R u;
  Complex<R> w3_pairing;
  R f1_side;
  std::array<R, 3> angle_re;
  R angle_pair_re;
};

template <class R>
ConditionValues<R> evaluate_conditions(const TriangleConfiguration<R>& cfg);

// Positive iff the condition holds: lhs - 1, 2 - lhs, |pairing|^2, or the value itself.
template <class R>
R condition_margin(const ConditionValues<R>& v, ConditionId id);

enum class Backend { Fast, Rigorous };
std::string_view to_string(Backend b);

struct ConditionReport {
  double t = 0.0;
  Backend backend = Backend::Fast;
  ConditionValues<double> values;  // midpoints under the rigorous backend
  std::array<SignVerdict, kAllConditions.size()> verdicts{};

  bool passes(ConditionId id) const;
  bool all_pass() const;
  std::optional<ConditionId> first_failure() const;
};

// Builds the configuration at t and evaluates every condition. Throws
// DomainError when the configuration itself cannot be built.
ConditionReport condition_report(double t, Backend backend = Backend::Fast,
                                 double zero_snap = kDefaultZeroSnap);

// Enclosure of the margin of one condition as a function of a t-enclosure.
IntervalPredicate condition_predicate(ConditionId id);

}  // namespace chyp
