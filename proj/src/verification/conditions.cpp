#include "chyp/verification/conditions.hpp"

namespace chyp {
namespace {

struct ConditionText {
  ConditionId id;
  std::string_view key;
  std::string_view statement;
};

constexpr std::array<ConditionText, kAllConditions.size()> kText{{
    {ConditionId::Signature, "signature", "t^2 + t1^2 + t2^2 - t*t1*t2 > 1"},
    {ConditionId::TransversalA, "transversal_a", "4*t*t1*t2 - t^2 - 4*t1^2 - 4*t2^2 + 4 > 0"},
    {ConditionId::TransversalB, "transversal_b", "4*t*t1*t2 - 4*t^2 - t1^2 - 4*t2^2 + 4 > 0"},
    {ConditionId::Elliptic, "elliptic", "sqrt(3)*(1 + (t^2 + t1^2 + t2^2 - t*t1*t2 - 1)/((t+1)(t1+1)(t2+1))) < 2"},
    {ConditionId::TanceC3D3, "tance_c3_d3", "u = ta(c3,d3) > 1"},
    {ConditionId::W3ImagesDistinct, "w3_images_distinct", "<R(m3)w3, R1R2w3> != 0"},
    {ConditionId::F1Side, "f1_side", "Im(<b2,f1><f1,e2>/<b2,e2>) > 0, f1 = R(q1)R(q3)w3"},
    {ConditionId::AngleRe1, "angle_re_1", "Re(<p2,c1><c1,p3>) > 0"},
    {ConditionId::AngleRe2, "angle_re_2", "Re(conj(th)<p3,c2><c2,p1>) > 0"},
    {ConditionId::AngleRe3, "angle_re_3", "Re(conj(th)<p1,c3><c3,p2>) > 0"},
    {ConditionId::AnglePairRe, "angle_pair_re", "Re(conj(th)<p2,c1><c1,p3><p3,c2><c2,p1>) > 0"},
}};

std::size_t index_of(ConditionId id) { return static_cast<std::size_t>(id); }

}  // namespace

std::string_view condition_key(ConditionId id) { return kText[index_of(id)].key; }
std::string_view condition_statement(ConditionId id) { return kText[index_of(id)].statement; }

std::optional<ConditionId> condition_from_key(std::string_view key) {
  for (const auto& t : kText)
    if (t.key == key) return t.id;
  return std::nullopt;
}

std::string_view to_string(Backend b) { return b == Backend::Fast ? "fast" : "rigorous"; }

namespace {

// The conditions that depend on (t, t1, t2) alone.
template <class R>
void fill_parameter_conditions(ConditionValues<R>& v, const ParameterTriple<R>& p) {
  const auto& [t, t1, t2] = p;
  const R one(1.0), four(4.0);
  const R lhs3 = signature_lhs(p);
  v.signature = lhs3;
  v.transversal_a = four * t * t1 * t2 - sqr(t) - four * sqr(t1) - four * sqr(t2) + four;
  v.transversal_b = four * t * t1 * t2 - four * sqr(t) - sqr(t1) - four * sqr(t2) + four;
  v.elliptic = real_sqrt(R(3.0)) * (one + (lhs3 - one) / ((t + one) * (t1 + one) * (t2 + one)));
}

}  // namespace

template <class R>
ConditionValues<R> evaluate_conditions(const TriangleConfiguration<R>& cfg) {
  if (!cfg.w3) throw DomainError("configuration has no isotropic point w3");
  const ProjVector<R>& w3 = *cfg.w3;

  ConditionValues<R> v;
  fill_parameter_conditions(v, cfg.params);
  v.u = cfg.u;
  v.w3_pairing = inner(reflection(cfg.m3)(w3), (cfg.R1 * cfg.R2)(w3));
  const ProjVector<R> f1 = (reflection(cfg.q1) * reflection(cfg.q3))(w3);
  v.f1_side = (inner(cfg.b2, f1) * inner(f1, cfg.e2) / inner(cfg.b2, cfg.e2)).im;
  const auto prods = angle_products(cfg);
  for (std::size_t i = 0; i < 3; ++i) v.angle_re[i] = prods[i].re;
  v.angle_pair_re = (prods[0] * prods[1]).re;
  return v;
}

template <class R>
R condition_margin(const ConditionValues<R>& v, ConditionId id) {
  switch (id) {
    case ConditionId::Signature: return v.signature - R(1.0);
    case ConditionId::TransversalA: return v.transversal_a;
    case ConditionId::TransversalB: return v.transversal_b;
    case ConditionId::Elliptic: return R(2.0) - v.elliptic;
    case ConditionId::TanceC3D3: return v.u - R(1.0);
    case ConditionId::W3ImagesDistinct: return norm(v.w3_pairing);
    case ConditionId::F1Side: return v.f1_side;
    case ConditionId::AngleRe1: return v.angle_re[0];
    case ConditionId::AngleRe2: return v.angle_re[1];
    case ConditionId::AngleRe3: return v.angle_re[2];
    case ConditionId::AnglePairRe: return v.angle_pair_re;
  }
  throw PreconditionError("unknown condition");
}

bool ConditionReport::passes(ConditionId id) const { return verdicts[index_of(id)] == SignVerdict::Positive; }

bool ConditionReport::all_pass() const { return !first_failure(); }

std::optional<ConditionId> ConditionReport::first_failure() const {
  for (ConditionId id : kAllConditions)
    if (!passes(id)) return id;
  return std::nullopt;
}

namespace {

ConditionValues<double> midpoints(const ConditionValues<Interval>& v) {
  ConditionValues<double> out;
  out.signature = v.signature.mid();
  out.transversal_a = v.transversal_a.mid();
  out.transversal_b = v.transversal_b.mid();
  out.elliptic = v.elliptic.mid();
  out.u = v.u.mid();
  out.w3_pairing = midpoint(v.w3_pairing);
  out.f1_side = v.f1_side.mid();
  for (std::size_t i = 0; i < 3; ++i) out.angle_re[i] = v.angle_re[i].mid();
  out.angle_pair_re = v.angle_pair_re.mid();
  return out;
}

}  // namespace

ConditionReport condition_report(double t, Backend backend, double zero_snap) {
  ConditionReport rep;
  rep.t = t;
  rep.backend = backend;
  if (backend == Backend::Fast) {
    rep.values = evaluate_conditions(build_configuration(t));
    for (ConditionId id : kAllConditions)
      rep.verdicts[index_of(id)] = certified_sign(condition_margin(rep.values, id), zero_snap);
  } else {
    const auto values = evaluate_conditions(build_configuration(Interval(t)));
    rep.values = midpoints(values);
    for (ConditionId id : kAllConditions)
      rep.verdicts[index_of(id)] = certified_sign(condition_margin(values, id));
  }
  return rep;
}

namespace {

bool depends_on_parameters_only(ConditionId id) {
  return id == ConditionId::Signature || id == ConditionId::TransversalA || id == ConditionId::TransversalB ||
         id == ConditionId::Elliptic;
}

}  // namespace

IntervalPredicate condition_predicate(ConditionId id) {
  return [id](const Interval& t) {
    const AffineForm x = AffineForm::variable(t);
    if (depends_on_parameters_only(id)) {
      ConditionValues<AffineForm> v{};
      fill_parameter_conditions(v, solve_parameters(x));
      return condition_margin(v, id).range();
    }
    return condition_margin(evaluate_conditions(build_configuration(x, {.check_preconditions = false})), id).range();
  };
}

template ConditionValues<double> evaluate_conditions(const TriangleConfiguration<double>&);
template ConditionValues<Interval> evaluate_conditions(const TriangleConfiguration<Interval>&);
template double condition_margin(const ConditionValues<double>&, ConditionId);
template Interval condition_margin(const ConditionValues<Interval>&, ConditionId);

template ConditionValues<AffineForm> evaluate_conditions(const TriangleConfiguration<AffineForm>&);
template AffineForm condition_margin(const ConditionValues<AffineForm>&, ConditionId);
}  // namespace chyp
