#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "chyp/numerics/interval.hpp"

namespace chyp {

// Complex number over either real backend (double or Interval).
// std::complex is only specified for floating-point types, hence this type.
template <class R>
struct Complex {
  R re{};
  R im{};

  constexpr Complex() = default;
  Complex(R real) : re(std::move(real)), im(0.0) {}  // NOLINT(google-explicit-constructor)
  Complex(R real, R imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const R& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const R& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const R n = norm(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
};

template <class R>
Complex<R> conj(const Complex<R>& z) {
  return {z.re, -z.im};
}

// |z|^2
template <class R>
R norm(const Complex<R>& z) {
  return sqr(z.re) + sqr(z.im);
}

inline double abs(const Complex<double>& z) { return std::hypot(z.re, z.im); }

// Principal argument in (-pi, pi].
inline double arg(const Complex<double>& z) {
  const double a = std::atan2(z.im, z.re);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

inline std::complex<double> to_std(const Complex<double>& z) { return {z.re, z.im}; }
inline Complex<double> from_std(const std::complex<double>& z) { return {z.real(), z.imag()}; }

inline Complex<double> midpoint(const Complex<Interval>& z) { return {z.re.mid(), z.im.mid()}; }
inline Complex<double> midpoint(const Complex<double>& z) { return z; }

// exp(i*pi/3), the sixth root of unity used throughout the construction.
template <class R>
Complex<R> theta() {
  return {R(0.5), real_sqrt(R(3.0)) / R(2.0)};
}

}  // namespace chyp
