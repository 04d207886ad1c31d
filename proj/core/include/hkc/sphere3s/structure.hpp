#pragma once

#include <cstdint>
#include <vector>

#include "hkc/numlin/diff.hpp"
#include "hkc/numlin/quaternion.hpp"
#include "hkc/numlin/random.hpp"
#include "hkc/numlin/vec.hpp"

namespace hkc::sphere3s {

using numlin::AmbientVector;
using numlin::Vec;

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr double kTangentTolerance = 1e-10;

/// A point of S^{4n+3} in R^{4(n+1)}.
class SpherePoint {
 public:
  /// Throws PreconditionError unless |x| = 1 within kUnitTolerance.
  explicit SpherePoint(AmbientVector x);
  /// Rescales a nonzero vector onto the sphere.
  static SpherePoint normalized(const AmbientVector& x);

  [[nodiscard]] const AmbientVector& coords() const { return x_; }
  [[nodiscard]] std::size_t dim() const { return x_.size(); }
  [[nodiscard]] bool same_as(const SpherePoint& o) const;

 private:
  AmbientVector x_;
};

/// Ambient vector orthogonal to its base point.
class TangentVector {
 public:
  /// Throws PreconditionError unless <v, base> = 0 within kTangentTolerance.
  TangentVector(SpherePoint base, AmbientVector v);
  /// Orthogonal projection of an arbitrary ambient vector onto T_x S.
  static TangentVector project(const SpherePoint& base, const AmbientVector& v);
  static TangentVector zero(const SpherePoint& base);

  [[nodiscard]] const SpherePoint& base() const { return base_; }
  [[nodiscard]] const AmbientVector& vec() const { return v_; }
  [[nodiscard]] double norm() const { return numlin::norm(v_); }

  friend TangentVector operator+(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator-(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator*(double s, const TangentVector& a);

 private:
  TangentVector(SpherePoint base, AmbientVector v, bool /*unchecked*/)
      : base_(std::move(base)), v_(std::move(v)) {}

  SpherePoint base_;
  AmbientVector v_;
};

void require_same_base(const TangentVector& a, const TangentVector& b, const char* what);

/// Orthonormal basis of the 3-contact distribution at one point.
struct HFrame {
  SpherePoint base;
  std::vector<TangentVector> vectors;
};

/// The canonical 3-Sasakian structure of the round sphere S^{4n+3}.
///
/// With complex structures I_a on R^{4(n+1)}:
///   xi_a(x)  = sign * I_a x
///   phi_a X  = I_a X - <I_a X, x> x
///   eta^a(X) = g(xi_a, X),   Omega^a(X, Y) = g(X, phi_a Y)
/// and g the round metric. The field kernels below are written for any jet
/// level so that connections can differentiate them exactly.
class ThreeSasakiStructure {
 public:
  ThreeSasakiStructure(int n, numlin::ComplexStructureTriple J, int sign);
  static ThreeSasakiStructure canonical(int n, int sign = -1);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return J_.dim(); }
  [[nodiscard]] int sign() const { return sign_; }
  [[nodiscard]] const numlin::ComplexStructureTriple& complex_structures() const { return J_; }
  [[nodiscard]] ThreeSasakiStructure with_sign(int sign) const;
  /// Same structure with I_alpha negated; used for failure injection.
  [[nodiscard]] ThreeSasakiStructure with_flipped(int alpha) const;

  // Field kernels, valid at any ambient y (exact on the sphere).
  template <class T>
  Vec<T> reeb_at(int alpha, const Vec<T>& y) const {
    return T(static_cast<double>(sign_)) * J_.at(alpha).apply(y);
  }
  template <class T>
  Vec<T> phi_at(int alpha, const Vec<T>& y, const Vec<T>& w) const {
    Vec<T> iw = J_.at(alpha).apply(w);
    const T c = dot(iw, y);
    return iw - c * y;
  }
  template <class T>
  T eta_at(int alpha, const Vec<T>& y, const Vec<T>& w) const {
    return dot(reeb_at(alpha, y), w);
  }
  template <class T>
  T omega_at(int alpha, const Vec<T>& y, const Vec<T>& a, const Vec<T>& b) const {
    return dot(a, phi_at(alpha, y, b));
  }
  template <class T>
  Vec<T> project_H_at(const Vec<T>& y, const Vec<T>& w) const {
    Vec<T> out = w;
    for (int a = 1; a <= 3; ++a) {
      const Vec<T> xi = reeb_at(a, y);
      out -= dot(xi, w) * xi;
    }
    return out;
  }

  // Point-wise operations on tangent vectors.
  [[nodiscard]] double metric(const TangentVector& X, const TangentVector& Y) const;
  [[nodiscard]] TangentVector reeb(int alpha, const SpherePoint& x) const;
  [[nodiscard]] TangentVector phi(int alpha, const TangentVector& X) const;
  [[nodiscard]] double eta(int alpha, const TangentVector& X) const;
  [[nodiscard]] double omega(int alpha, const TangentVector& X, const TangentVector& Y) const;
  [[nodiscard]] TangentVector project_H(const TangentVector& X) const;
  /// max_a |eta^a(X)|.
  [[nodiscard]] double vertical_size(const TangentVector& X) const;

  /// Deterministic g-orthonormal basis of H_x (4n vectors; empty for n = 0).
  [[nodiscard]] HFrame frame_H(const SpherePoint& x, std::uint64_t seed) const;

  /// h_{ab}(X) = 1/2 (L_{xi_a} phi_b)(X), computed from Lie brackets with the
  /// projection extension of X.
  [[nodiscard]] TangentVector h_tensor(int alpha, int beta, const TangentVector& X,
                                       const numlin::DiffScheme& scheme = numlin::DiffScheme::exact()) const;

 private:
  void require_dim(const SpherePoint& x) const;

  int n_;
  numlin::ComplexStructureTriple J_;
  int sign_;
};

/// Projection extension of v at x: y -> v - <v, y> y. Smooth on all of
/// R^{4(n+1)}, tangent on the sphere and equal to v at x.
template <class T>
Vec<T> projection_extension(const AmbientVector& v, const Vec<T>& y) {
  const Vec<T> lv = numlin::lift<T>(v);
  const T c = dot(lv, y);
  return lv - c * y;
}

// Random sampling helpers on the model.
SpherePoint random_point(std::size_t dim, numlin::SampleStream& rng);
TangentVector random_tangent(const SpherePoint& x, numlin::SampleStream& rng);
/// Uniformly distributed unit vector of H_x. Requires n >= 1.
TangentVector random_unit_H(const ThreeSasakiStructure& s, const SpherePoint& x,
                            numlin::SampleStream& rng);

}  // namespace hkc::sphere3s
