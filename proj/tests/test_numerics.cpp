#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "chyp/numerics/affine.hpp"
#include "chyp/numerics/certify.hpp"
#include "chyp/numerics/errors.hpp"
#include "chyp/numerics/phase.hpp"
#include "chyp/numerics/sign.hpp"
#include "chyp/verification/conditions.hpp"
#include "support/support.hpp"

using namespace chyp;
using chyp::testing::Gen;

namespace {

struct Pair {
  Interval enclosure;
  long double exact;
};

// Random expression over point leaves, evaluated as an enclosure and in long double.
Pair random_tree(Gen& gen, int depth) {
  if (depth == 0 || gen.integer(0, 3) == 0) {
    const double x = gen.uniform(-10.0, 10.0);
    return {Interval(x), static_cast<long double>(x)};
  }
  const int op = gen.integer(0, 5);
  const Pair a = random_tree(gen, depth - 1);
  if (op == 4) return {sqr(a.enclosure), a.exact * a.exact};
  if (op == 5) {
    if (a.enclosure.lower() > 0.0) return {sqrt(a.enclosure), std::sqrt(a.exact)};
    return {sqr(a.enclosure), a.exact * a.exact};
  }
  const Pair b = random_tree(gen, depth - 1);
  switch (op) {
    case 0: return {a.enclosure + b.enclosure, a.exact + b.exact};
    case 1: return {a.enclosure - b.enclosure, a.exact - b.exact};
    case 2: return {a.enclosure * b.enclosure, a.exact * b.exact};
    default:
      if (b.enclosure.contains_zero()) return {a.enclosure + b.enclosure, a.exact + b.exact};
      return {a.enclosure / b.enclosure, a.exact / b.exact};
  }
}

bool inside(const Interval& x, long double v) {
  return static_cast<long double>(x.lower()) <= v && v <= static_cast<long double>(x.upper());
}

// Random expression in one variable; `at` evaluates it in long double at a sample.
struct Tree {
  int op = -1;  // -1 variable, -2 constant
  double c = 0.0;
  std::vector<Tree> kids;
};

Tree random_affine_tree(Gen& gen, int depth) {
  if (depth == 0 || gen.integer(0, 3) == 0) {
    if (gen.integer(0, 1) == 0) return {-1, 0.0, {}};
    return {-2, gen.uniform(-10.0, 10.0), {}};
  }
  Tree t{gen.integer(0, 5), 0.0, {}};
  t.kids.push_back(random_affine_tree(gen, depth - 1));
  if (t.op < 4) t.kids.push_back(random_affine_tree(gen, depth - 1));
  return t;
}

// Evaluates as an AffineForm; rewrites ops whose domain condition fails so the
// long double evaluation below follows the same path.
AffineForm eval_affine(Tree& t, const AffineForm& x) {
  if (t.op == -1) return x;
  if (t.op == -2) return AffineForm(t.c);
  const AffineForm a = eval_affine(t.kids[0], x);
  if (t.op == 4) return sqr(a);
  if (t.op == 5) {
    if (a.range().lower() > 0.0) return real_sqrt(a);
    t.op = 4;
    return sqr(a);
  }
  const AffineForm b = eval_affine(t.kids[1], x);
  switch (t.op) {
    case 0: return a + b;
    case 1: return a - b;
    case 2: return a * b;
    default:
      if (b.range().contains_zero()) {
        t.op = 0;
        return a + b;
      }
      return a / b;
  }
}

long double eval_exact(const Tree& t, long double x) {
  if (t.op == -1) return x;
  if (t.op == -2) return t.c;
  const long double a = eval_exact(t.kids[0], x);
  if (t.op == 4) return a * a;
  if (t.op == 5) return std::sqrt(a);
  const long double b = eval_exact(t.kids[1], x);
  switch (t.op) {
    case 0: return a + b;
    case 1: return a - b;
    case 2: return a * b;
    default: return a / b;
  }
}

}  // namespace

TEST_CASE("certified sign on enclosures and points") {
  CHECK(certified_sign(Interval(0.5, 0.6)) == SignVerdict::Positive);
  CHECK(certified_sign(Interval(-0.1, 0.1)) == SignVerdict::Indeterminate);
  CHECK(certified_sign(Interval(-0.6, -0.5)) == SignVerdict::Negative);
  CHECK(certified_sign(1e-13) == SignVerdict::Zero);
  CHECK(certified_sign(1e-13, 1e-14) == SignVerdict::Positive);
  CHECK(certified_sign(-2.0) == SignVerdict::Negative);

  const ConditionReport rep = condition_report(2.22, Backend::Rigorous);
  CHECK(rep.verdicts[0] == SignVerdict::Positive);
  CHECK(rep.values.signature == doctest::Approx(4.33).epsilon(0.005));
}

TEST_CASE("sign verdict names round trip") {
  for (auto v : {SignVerdict::Positive, SignVerdict::Negative, SignVerdict::Zero, SignVerdict::Indeterminate})
    CHECK(sign_verdict_from_string(to_string(v)) == v);
}

TEST_CASE("interval operations enclose long double evaluation of random trees") {
  Gen gen(11);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Pair p = random_tree(gen, 5);
    if (!std::isfinite(p.enclosure.lower()) || !std::isfinite(p.enclosure.upper())) continue;
    ++checked;
    INFO("trial " << i << " enclosure " << p.enclosure);
    CHECK(inside(p.enclosure, p.exact));
  }
  CHECK(checked > 900);
}

TEST_CASE("affine forms enclose every sample of random one-variable trees") {
  Gen gen(12);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Tree tree = random_affine_tree(gen, 4);
    const double center = gen.uniform(-5.0, 5.0), radius = gen.log_uniform(1e-8, 1e-1);
    const Interval xs(center - radius, center + radius);
    AffineForm value;
    try {
      value = eval_affine(tree, AffineForm::variable(xs));
    } catch (const DomainError&) {
      continue;  // a linearization point left the domain
    }
    const Interval range = value.range();
    if (!std::isfinite(range.lower()) || !std::isfinite(range.upper())) continue;
    ++checked;
    for (int k = 0; k <= 8; ++k) {
      const long double x = static_cast<long double>(xs.lower()) +
                            (static_cast<long double>(xs.upper()) - xs.lower()) * k / 8.0L;
      INFO("trial " << i << " sample " << k << " range " << range);
      CHECK(inside(range, eval_exact(tree, x)));
    }
  }
  CHECK(checked > 800);
}

TEST_CASE("affine forms keep the dependency that plain intervals lose") {
  const Interval t(2.22 - 1e-4, 2.22 + 1e-4);
  const AffineForm x = AffineForm::variable(t);
  // x^2 - 2 x^2 + x^2 vanishes identically.
  const Interval affine = (x * x - AffineForm(2.0) * x * x + x * x).range();
  const Interval plain = t * t - Interval(2.0) * t * t + t * t;
  CHECK(affine.contains_zero());
  CHECK(affine.width() < 1e-6);
  CHECK(plain.width() > 1e-3);
}

TEST_CASE("unwrap_phase on analytic arcs") {
  std::vector<Complex<double>> arc;
  for (int k = 0; k <= 10; ++k) {
    const double a = std::numbers::pi / 3 * k / 10;
    arc.push_back({std::cos(a), std::sin(a)});
  }
  CHECK(unwrap_phase(arc) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));

  const std::vector<Complex<double>> constant(5, Complex<double>(2.0, -1.0));
  CHECK(unwrap_phase(constant) == 0.0);

  // Two full turns stay continuous across the branch cut.
  std::vector<Complex<double>> turns;
  for (int k = 0; k <= 200; ++k) {
    const double a = 4 * std::numbers::pi * k / 200;
    turns.push_back({3 * std::cos(a), 3 * std::sin(a)});
  }
  CHECK(unwrap_phase(turns) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("unwrap_phase rejects under-sampled or vanishing paths") {
  const std::vector<Complex<double>> jump{{1.0, 0.0}, {-1.0, 0.1}};
  CHECK_THROWS_AS(unwrap_phase(jump), PreconditionError);
  const std::vector<Complex<double>> zero{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(unwrap_phase(zero), PreconditionError);
}

TEST_CASE("unwrap_phase is additive under concatenation") {
  Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    // Random smooth path: r(s) e^{i phi(s)} with bounded phase speed.
    const double a0 = gen.uniform(-3, 3), a1 = gen.uniform(-6, 6), a2 = gen.uniform(-6, 6);
    const int n = 400, cut = gen.integer(1, n - 1);
    std::vector<Complex<double>> path;
    for (int k = 0; k <= n; ++k) {
      const double s = static_cast<double>(k) / n;
      const double phi = a0 + a1 * s + a2 * s * s, r = 1.0 + 0.5 * std::sin(7 * s);
      path.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    const std::span<const Complex<double>> all(path);
    const double whole = unwrap_phase(all);
    const double split = unwrap_phase(all.first(static_cast<std::size_t>(cut) + 1)) +
                         unwrap_phase(all.subspan(static_cast<std::size_t>(cut)));
    CHECK(std::abs(whole - split) < 1e-9);
    CHECK(std::abs(whole - (a1 + a2)) < 1e-9);
  }
}

TEST_CASE("certify_on_interval on t^2 - 2") {
  const IntervalPredicate f = [](const Interval& t) { return sqr(t) - Interval(2.0); };

  const CertifyOutcome good = certify_on_interval(f, SignVerdict::Positive, 1.5, 2.0, 20, "square");
  CHECK(good.certified());
  CHECK(replay_leaves(good.leaves, "square", f));
  CHECK(good.leaves.front().lo == 1.5);
  CHECK(good.leaves.back().hi == 2.0);

  const CertifyOutcome bad = certify_on_interval(f, SignVerdict::Positive, 1.0, 2.0, 20, "square");
  CHECK(bad.status == CertifyStatus::Counterexample);
  REQUIRE(bad.offending.has_value());
  CHECK(bad.offending->lo >= 1.0);
  CHECK(bad.offending->lo < std::sqrt(2.0));

  // The root itself is never certified either way: depth runs out.
  const CertifyOutcome root = certify_on_interval(f, SignVerdict::Positive, std::sqrt(2.0), 2.0, 6, "square");
  CHECK_FALSE(root.certified());

  CHECK_THROWS_AS(certify_on_interval(f, SignVerdict::Positive, 2.0, 1.0, 5), PreconditionError);
}

TEST_CASE("certify_on_interval reports domain failures") {
  const IntervalPredicate f = [](const Interval& t) { return sqrt(t - Interval(1.5)); };
  const CertifyOutcome out = certify_on_interval(f, SignVerdict::Positive, 1.0, 2.0, 4, "root");
  CHECK(out.status == CertifyStatus::DomainFailure);
}

TEST_CASE("certificates round trip through the text format exactly") {
  const IntervalPredicate f = [](const Interval& t) { return sqr(t) - Interval(2.0); };
  const CertifyOutcome good = certify_on_interval(f, SignVerdict::Positive, 1.5, 2.0, 20, "square");
  std::stringstream ss;
  write_certificate(ss, good.leaves, {"test"});
  CHECK(ss.str().front() == '#');
  const auto back = read_certificate(ss);
  CHECK(back == good.leaves);

  std::stringstream broken("0x1p+0 garbage\n");
  CHECK_THROWS_AS(read_certificate(broken), PreconditionError);
}
