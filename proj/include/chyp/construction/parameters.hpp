#pragma once

#include <utility>

#include "chyp/hermitian/space.hpp"
#include "chyp/numerics/affine.hpp"

namespace chyp {

template <class R>
struct ParameterTriple {
  R t;
  R t1;
  R t2;
};

// t1 from the closed form, t2 = (2 t t1 - t - t1 + 1) / 2. Requires t > 3/2.
template <class R>
ParameterTriple<R> solve_parameters(const R& t);

// Residuals of  t^2 - t t1 + t1^2 - (t2-1)^2 = 0  and  2 t t1 - t - t1 + 1 - 2 t2 = 0.
std::pair<double, double> parameter_equation_residuals(const ParameterTriple<double>& p);

// The quadratic whose unique root above 1 is t1:
// f(x) = (2t+1)(2t-3) x^2 - 2(2t+1)(t-1) x - (3t+1)(t-1).
double t1_quadratic(double t, double x);

// Left-hand side t^2 + t1^2 + t2^2 - t t1 t2; the Gram matrix has signature (2,1) iff it exceeds 1.
template <class R>
R signature_lhs(const ParameterTriple<R>& p) {
  return sqr(p.t) + sqr(p.t1) + sqr(p.t2) - p.t * p.t1 * p.t2;
}

// Gram matrix [[1, t1, t], [t1, 1, t2 conj(th)], [t, t2 th, 1]] with th = exp(i pi/3).
template <class R>
Mat3<R> gram_matrix(const ParameterTriple<R>& p, const Complex<R>& lambda = theta<R>());

// Gram context for the parameters. Throws DomainError unless signature_lhs > 1.
template <class R>
GramPtr<R> build_gram(const ParameterTriple<R>& p);

}  // namespace chyp
