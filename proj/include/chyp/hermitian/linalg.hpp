#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

#include "chyp/numerics/complex.hpp"

namespace chyp {

template <class R>
using Vec3 = std::array<Complex<R>, 3>;

// Dense 3x3 complex matrix, row-major.
template <class R>
struct Mat3 {
  std::array<Vec3<R>, 3> rows{};

  static Mat3 identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m.rows[i][i] = Complex<R>(R(1.0));
    return m;
  }
  static Mat3 from_columns(const Vec3<R>& a, const Vec3<R>& b, const Vec3<R>& c) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m.rows[i] = {a[i], b[i], c[i]};
    return m;
  }

  Complex<R>& operator()(std::size_t i, std::size_t j) { return rows[i][j]; }
  const Complex<R>& operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }

  Vec3<R> column(std::size_t j) const { return {rows[0][j], rows[1][j], rows[2][j]}; }
};

template <class R>
Vec3<R> operator+(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
template <class R>
Vec3<R> operator-(const Vec3<R>& a, const Vec3<R>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
template <class R>
Vec3<R> operator*(const Complex<R>& s, const Vec3<R>& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
template <class R>
Vec3<R> conj(const Vec3<R>& a) {
  return {conj(a[0]), conj(a[1]), conj(a[2])};
}

template <class R>
Vec3<R> operator*(const Mat3<R>& m, const Vec3<R>& v) {
  Vec3<R> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return out;
}

template <class R>
Mat3<R> operator*(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return out;
}

template <class R>
Mat3<R> operator*(const Complex<R>& s, const Mat3<R>& a) {
  Mat3<R> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = s * a(i, j);
  return out;
}

template <class R>
Mat3<R> operator-(const Mat3<R>& a, const Mat3<R>& b) {
  Mat3<R> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class R>
Mat3<R> conj(const Mat3<R>& a) {
  Mat3<R> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = conj(a(i, j));
  return out;
}

template <class R>
Mat3<R> transpose(const Mat3<R>& a) {
  Mat3<R> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(j, i);
  return out;
}

template <class R>
Complex<R> trace(const Mat3<R>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2);
}

template <class R>
Complex<R> det(const Mat3<R>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Transpose of the cofactor matrix; adj(A) * A = det(A) * Id.
template <class R>
Mat3<R> adjugate(const Mat3<R>& a) {
  auto cof = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
  };
  Mat3<R> out;
  out(0, 0) = cof(1, 2, 1, 2);
  out(0, 1) = -cof(0, 2, 1, 2);
  out(0, 2) = cof(0, 1, 1, 2);
  out(1, 0) = -cof(1, 2, 0, 2);
  out(1, 1) = cof(0, 2, 0, 2);
  out(1, 2) = -cof(0, 1, 0, 2);
  out(2, 0) = cof(1, 2, 0, 1);
  out(2, 1) = -cof(0, 2, 0, 1);
  out(2, 2) = cof(0, 1, 0, 1);
  return out;
}

inline double max_abs(const Vec3<double>& v) {
  return std::max({abs(v[0]), abs(v[1]), abs(v[2])});
}

inline double max_abs(const Mat3<double>& m) {
  double r = 0.0;
  for (const auto& row : m.rows) r = std::max(r, max_abs(row));
  return r;
}

inline double max_abs_diff(const Mat3<double>& a, const Mat3<double>& b) { return max_abs(a - b); }
inline double max_abs_diff(const Vec3<double>& a, const Vec3<double>& b) { return max_abs(a - b); }

inline double euclidean_norm(const Vec3<double>& v) {
  return std::sqrt(norm(v[0]) + norm(v[1]) + norm(v[2]));
}

}  // namespace chyp
