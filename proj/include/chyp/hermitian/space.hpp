#pragma once

#include <array>
#include <optional>
#include <memory>
#include <type_traits>

#include "chyp/hermitian/linalg.hpp"
#include "chyp/numerics/errors.hpp"
#include "chyp/numerics/sign.hpp"

namespace chyp {

// The hermitian form <u, v> = u^T G conj(v) on C^3, where G holds the Gram
// matrix <p_i, p_j> of the working basis p_1, p_2, p_3. The form is linear in
// the first slot and conjugate-linear in the second.
template <class R>
class GramContext {
 public:
  explicit GramContext(Mat3<R> g) : g_(std::move(g)) {
    if constexpr (std::is_same_v<R, double>) {
      const double scale = std::max(1.0, max_abs(g_));
      if (max_abs_diff(g_, conj(transpose(g_))) > 1e-12 * scale)
        throw PreconditionError("Gram matrix is not hermitian");
    }
  }

  const Mat3<R>& matrix() const { return g_; }

  Complex<R> pair(const Vec3<R>& u, const Vec3<R>& v) const {
    const Vec3<R> gv = g_ * conj(v);
    return u[0] * gv[0] + u[1] * gv[1] + u[2] * gv[2];
  }

  // d1 = g11, d2 = g11 g22 - |g12|^2, d3 = det G.
  std::array<R, 3> leading_minors() const {
    return {g_(0, 0).re, (g_(0, 0) * g_(1, 1) - g_(0, 1) * g_(1, 0)).re, det(g_).re};
  }

 private:
  Mat3<R> g_;
};

template <class R>
using GramPtr = std::shared_ptr<const GramContext<R>>;

template <class R>
GramPtr<R> make_gram(Mat3<R> g) {
  return std::make_shared<const GramContext<R>>(std::move(g));
}

// Signature (2,1) test: the sequence 1, d1, d2, d3 of leading principal
// minors must show exactly one sign change and no zero.
template <class R>
bool has_signature_21(const GramContext<R>& g, double zero_snap = kDefaultZeroSnap) {
  const auto minors = g.leading_minors();
  int changes = 0;
  SignVerdict prev = SignVerdict::Positive;
  for (const auto& d : minors) {
    const SignVerdict s = certified_sign(d, zero_snap);
    if (s != SignVerdict::Positive && s != SignVerdict::Negative) return false;
    if (s != prev) ++changes;
    prev = s;
  }
  return changes == 1;
}

// A vector of C^3 read in the basis p_1, p_2, p_3 of a given Gram context;
// represents a point of the projectivization.
template <class R>
class ProjVector {
 public:
  ProjVector(GramPtr<R> context, Vec3<R> coords)
      : context_(std::move(context)), coords_(std::move(coords)) {
    if (!context_) throw PreconditionError("ProjVector without a Gram context");
    if constexpr (std::is_same_v<R, double>) {
      if (max_abs(coords_) == 0.0) throw PreconditionError("ProjVector: zero vector");
    }
  }

  // The i-th basis vector p_{i+1}.
  static ProjVector basis(GramPtr<R> context, std::size_t i) {
    Vec3<R> c{};
    c[i] = Complex<R>(R(1.0));
    return ProjVector(std::move(context), c);
  }

  const Vec3<R>& coords() const { return coords_; }
  const GramPtr<R>& context() const { return context_; }

  ProjVector with_coords(Vec3<R> c) const { return ProjVector(context_, std::move(c)); }

  friend ProjVector operator+(const ProjVector& a, const ProjVector& b) {
    a.require_same(b);
    return a.with_coords(a.coords_ + b.coords_);
  }
  friend ProjVector operator-(const ProjVector& a, const ProjVector& b) {
    a.require_same(b);
    return a.with_coords(a.coords_ - b.coords_);
  }
  friend ProjVector operator*(const Complex<R>& s, const ProjVector& a) {
    return a.with_coords(s * a.coords_);
  }
  friend ProjVector operator*(const R& s, const ProjVector& a) {
    return a.with_coords(Complex<R>(s) * a.coords_);
  }
  friend ProjVector operator/(const ProjVector& a, const R& s) {
    return a.with_coords(Complex<R>(R(1.0) / s) * a.coords_);
  }

  void require_same(const ProjVector& o) const {
    if (context_ != o.context_) throw PreconditionError("vectors live in different Gram contexts");
  }

 private:
  GramPtr<R> context_;
  Vec3<R> coords_;
};

// A C-linear or C-antilinear map of C^3: v -> m v or v -> m conj(v).
template <class R>
struct Isometry {
  Mat3<R> m = Mat3<R>::identity();
  bool antilinear = false;

  static Isometry identity() { return {}; }

  Vec3<R> apply(const Vec3<R>& v) const { return m * (antilinear ? conj(v) : v); }
  ProjVector<R> operator()(const ProjVector<R>& v) const { return v.with_coords(apply(v.coords())); }

  // Composition: (a * b)(v) = a(b(v)).
  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    return {a.m * (a.antilinear ? conj(b.m) : b.m), a.antilinear != b.antilinear};
  }
};

template <class R>
Isometry<R> compose(const Isometry<R>& a, const Isometry<R>& b) {
  return a * b;
}

// The scalar map v -> s v.
template <class R>
Isometry<R> scalar_isometry(const Complex<R>& s) {
  return {s * Mat3<R>::identity(), false};
}

// Inverse map; for an antilinear T v = M conj(v) it is w -> conj(M^-1) conj(w).
Isometry<double> inverse(const Isometry<double>& t);

// If t is linear and its matrix is within tol * |m| of s*Id, returns s.
std::optional<Complex<double>> scalar_part(const Isometry<double>& t, double tol = 1e-9);

}  // namespace chyp
