#pragma once

#include <array>
#include <memory>

#include "hkc/connections/vector_field.hpp"
#include "hkc/numlin/diff.hpp"

namespace hkc::connections {

enum class ConnectionKind { LeviCivita, HConnection };

const char* to_string(ConnectionKind kind);

/// Levi-Civita connection of the round metric and the H-connection
///   ∇̄_X Y = ∇_X Y − η^a(X) ∇_Y ξ_a − η^a(Y) ∇_X ξ_a + Ω^a(X, Y) ξ_a
/// on a 3-Sasakian sphere, with brackets, torsion and curvature evaluated by
/// nested directional differentiation of the fields involved.
///
/// ∇_X Y is the tangential part of the ambient derivative D_X Y (Gauss
/// formula for the unit sphere).
class Geometry {
 public:
  /// A consistency tolerance of 0 selects 1e-9 for the exact scheme and
  /// 1e-4 for finite differences.
  explicit Geometry(ThreeSasakiStructure s,
                    numlin::DiffScheme scheme = numlin::DiffScheme::exact(),
                    double consistency_tolerance = 0.0);

  [[nodiscard]] const ThreeSasakiStructure& structure() const { return *s_; }
  [[nodiscard]] std::shared_ptr<const ThreeSasakiStructure> structure_ptr() const { return s_; }
  [[nodiscard]] const numlin::DiffScheme& scheme() const { return scheme_; }
  [[nodiscard]] const VectorField& xi(int alpha) const;

  // Field builders bound to this structure.
  [[nodiscard]] VectorField phi_of(int alpha, VectorField X) const;
  [[nodiscard]] VectorField project_H_of(VectorField X) const;

  /// D_u Y at y (ambient, not projected).
  template <class T>
  Vec<T> ambient_derivative(const Vec<T>& y, const Vec<T>& u, const VectorField& Y) const {
    return numlin::directional_derivative([&Y](const auto& z) { return Y.at(z); }, y, u, scheme_);
  }

  /// ∇_u Y at y for a direction u.
  template <class T>
  Vec<T> levi_civita_at(const Vec<T>& y, const Vec<T>& u, const VectorField& Y) const {
    const Vec<T> d = ambient_derivative(y, u, Y);
    const T c = dot(d, y);
    return d - c * y;
  }

  /// ∇̄_u Y at y, evaluated literally from its definition.
  template <class T>
  Vec<T> hconnection_at(const Vec<T>& y, const Vec<T>& u, const VectorField& Y) const {
    const Vec<T> yv = Y.at(y);
    Vec<T> out = levi_civita_at(y, u, Y);
    for (int a = 1; a <= 3; ++a) {
      const VectorField& xa = xi(a);
      out -= s_->eta_at(a, y, u) * levi_civita_at(y, yv, xa);
      out -= s_->eta_at(a, y, yv) * levi_civita_at(y, u, xa);
      out += s_->omega_at(a, y, u, yv) * s_->reeb_at(a, y);
    }
    return out;
  }

  /// ∇̄_u Y with ∇ξ_a replaced by −φ_a.
  template <class T>
  Vec<T> hconnection_substituted_at(const Vec<T>& y, const Vec<T>& u, const VectorField& Y) const {
    const Vec<T> yv = Y.at(y);
    Vec<T> out = levi_civita_at(y, u, Y);
    for (int a = 1; a <= 3; ++a) {
      out += s_->eta_at(a, y, u) * s_->phi_at(a, y, yv);
      out += s_->eta_at(a, y, yv) * s_->phi_at(a, y, u);
      out += s_->omega_at(a, y, u, yv) * s_->reeb_at(a, y);
    }
    return out;
  }

  template <class T>
  Vec<T> connection_at(ConnectionKind kind, const Vec<T>& y, const Vec<T>& u,
                       const VectorField& Y) const {
    return kind == ConnectionKind::LeviCivita ? levi_civita_at(y, u, Y) : hconnection_at(y, u, Y);
  }

  /// The field y -> ∇_{X(y)} Y (one jet level below its inputs).
  [[nodiscard]] VectorField cov_deriv_field(ConnectionKind kind, const VectorField& X,
                                            const VectorField& Y) const;
  /// The field y -> [X, Y](y).
  [[nodiscard]] VectorField lie_bracket_field(const VectorField& X, const VectorField& Y) const;

  // Point-wise operations.
  [[nodiscard]] TangentVector lie_bracket(const VectorField& X, const VectorField& Y,
                                          const SpherePoint& x) const;
  /// For the H-connection both algebraic forms are computed and must agree
  /// within the consistency tolerance (InternalConsistencyError otherwise).
  [[nodiscard]] TangentVector cov_deriv(ConnectionKind kind, const VectorField& X,
                                        const VectorField& Y, const SpherePoint& x) const;
  /// Covariant derivative along a single tangent vector.
  [[nodiscard]] TangentVector cov_deriv(ConnectionKind kind, const TangentVector& u,
                                        const VectorField& Y) const;
  /// (∇_X φ_a) Y − g(X, Y) ξ_a + η^a(Y) X
  [[nodiscard]] TangentVector sasaki_defect(int alpha, const VectorField& X, const VectorField& Y,
                                            const SpherePoint& x) const;
  [[nodiscard]] TangentVector torsion(ConnectionKind kind, const VectorField& X,
                                      const VectorField& Y, const SpherePoint& x) const;
  /// R(X, Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z
  [[nodiscard]] TangentVector curvature(ConnectionKind kind, const VectorField& X,
                                        const VectorField& Y, const VectorField& Z,
                                        const SpherePoint& x) const;
  /// R(X, Y, Z, W) = g(R(X, Y)W, Z)
  [[nodiscard]] double curvature4(ConnectionKind kind, const VectorField& X, const VectorField& Y,
                                  const VectorField& Z, const VectorField& W,
                                  const SpherePoint& x) const;
  /// ∇̄_X(φ_a Y) − φ_a(∇̄_X Y) with X, Y first projected onto H. Passing
  /// LeviCivita swaps in ∇ for comparison.
  [[nodiscard]] TangentVector nabla_bar_phi_defect(
      int alpha, const VectorField& X, const VectorField& Y, const SpherePoint& x,
      ConnectionKind kind = ConnectionKind::HConnection) const;

  /// X(f) at x for the scalar field f(y) = g(Y(y), Z(y)).
  [[nodiscard]] double derivative_of_inner(const VectorField& X, const VectorField& Y,
                                           const VectorField& Z, const SpherePoint& x) const;

 private:
  std::shared_ptr<const ThreeSasakiStructure> s_;
  numlin::DiffScheme scheme_;
  double consistency_tol_;
  std::array<VectorField, 3> xi_;
};

/// Closed-form curvature of the unit sphere, s (g(Y, Z) X − g(X, Z) Y).
TangentVector sphere_curvature_oracle(const TangentVector& X, const TangentVector& Y,
                                      const TangentVector& Z, int curvature_sign = 1);

}  // namespace hkc::connections
