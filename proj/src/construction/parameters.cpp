#include "chyp/construction/parameters.hpp"

#include <cmath>

namespace chyp {

template <class R>
ParameterTriple<R> solve_parameters(const R& t) {
  if (!(lower(t) > 1.5)) throw DomainError("t must exceed 3/2");
  const R one(1.0), two(2.0);
  const R a = two * t - R(3.0);
  const R radicand = (two * sqr(t) - two * t - one) * (t - one) / (two * t + one);
  const R t1 = (t - one) / a + two / a * real_sqrt(radicand);
  const R t2 = (two * t * t1 - t - t1 + one) / two;
  return {t, t1, t2};
}

std::pair<double, double> parameter_equation_residuals(const ParameterTriple<double>& p) {
  const double first = p.t * p.t - p.t * p.t1 + p.t1 * p.t1 - (p.t2 - 1) * (p.t2 - 1);
  const double second = 2 * p.t * p.t1 - p.t - p.t1 + 1 - 2 * p.t2;
  return {first, second};
}

double t1_quadratic(double t, double x) {
  return (2 * t + 1) * (2 * t - 3) * x * x - 2 * (2 * t + 1) * (t - 1) * x - (3 * t + 1) * (t - 1);
}

template <class R>
Mat3<R> gram_matrix(const ParameterTriple<R>& p, const Complex<R>& lambda) {
  const Complex<R> one(R(1.0));
  Mat3<R> g;
  g.rows[0] = {one, Complex<R>(p.t1), Complex<R>(p.t)};
  g.rows[1] = {Complex<R>(p.t1), one, p.t2 * conj(lambda)};
  g.rows[2] = {Complex<R>(p.t), p.t2 * lambda, one};
  return g;
}

template <class R>
GramPtr<R> build_gram(const ParameterTriple<R>& p) {
  const R lhs = signature_lhs(p);
  if (!(upper(lhs) > 1.0) || (std::is_same_v<R, double> && !(lower(lhs) > 1.0)))
    throw DomainError("signature condition fails: t^2 + t1^2 + t2^2 - t t1 t2 <= 1");
  return make_gram(gram_matrix(p));
}

template ParameterTriple<double> solve_parameters(const double&);
template ParameterTriple<Interval> solve_parameters(const Interval&);
template Mat3<double> gram_matrix(const ParameterTriple<double>&, const Complex<double>&);
template Mat3<Interval> gram_matrix(const ParameterTriple<Interval>&, const Complex<Interval>&);
template GramPtr<double> build_gram(const ParameterTriple<double>&);
template GramPtr<Interval> build_gram(const ParameterTriple<Interval>&);

template ParameterTriple<AffineForm> solve_parameters(const AffineForm&);
template Mat3<AffineForm> gram_matrix(const ParameterTriple<AffineForm>&, const Complex<AffineForm>&);
template GramPtr<AffineForm> build_gram(const ParameterTriple<AffineForm>&);
}  // namespace chyp
