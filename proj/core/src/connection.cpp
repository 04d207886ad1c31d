#include "hkc/connections/connection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hkc::connections {
namespace {

constexpr int kDerivedMaxLevel = 2;

void require_finite(const AmbientVector& v, const char* what) {
  if (!numlin::all_finite(v)) throw NumericError(std::string(what) + ": non-finite value");
}

}  // namespace

const char* to_string(ConnectionKind kind) {
  return kind == ConnectionKind::LeviCivita ? "levi-civita" : "h-connection";
}

Geometry::Geometry(ThreeSasakiStructure s, numlin::DiffScheme scheme, double consistency_tolerance)
    : s_(std::make_shared<const ThreeSasakiStructure>(std::move(s))),
      scheme_(scheme),
      consistency_tol_(consistency_tolerance > 0.0 ? consistency_tolerance
                                                   : (scheme.is_exact() ? 1e-9 : 1e-4)),
      xi_{reeb_field(s_, 1), reeb_field(s_, 2), reeb_field(s_, 3)} {}

const VectorField& Geometry::xi(int alpha) const {
  if (alpha < 1 || alpha > 3) throw StructuralError("Reeb index out of range");
  return xi_[static_cast<std::size_t>(alpha - 1)];
}

VectorField Geometry::phi_of(int alpha, VectorField X) const {
  return connections::phi_of(s_, alpha, std::move(X));
}

VectorField Geometry::project_H_of(VectorField X) const {
  return connections::project_H_of(s_, std::move(X));
}

VectorField Geometry::cov_deriv_field(ConnectionKind kind, const VectorField& X,
                                      const VectorField& Y) const {
  const int loss = scheme_.is_exact() ? 1 : 0;
  const int level = std::min({X.max_level(), Y.max_level() - loss, kMaxJetLevel - loss});
  if (level < 0) throw StructuralError("cov_deriv_field: inputs not differentiable enough");
  std::string label = std::string(kind == ConnectionKind::LeviCivita ? "D" : "Dbar") + "_" +
                      X.label() + "(" + Y.label() + ")";
  return VectorField::from_generic<kDerivedMaxLevel>(
      [self = *this, kind, X, Y](const auto& y) {
        return self.connection_at(kind, y, X.at(y), Y);
      },
      std::move(label), level);
}

VectorField Geometry::lie_bracket_field(const VectorField& X, const VectorField& Y) const {
  const int loss = scheme_.is_exact() ? 1 : 0;
  const int level = std::min(X.max_level(), Y.max_level()) - loss;
  if (level < 0) throw StructuralError("lie_bracket_field: inputs not differentiable enough");
  return VectorField::from_generic<kDerivedMaxLevel>(
      [self = *this, X, Y](const auto& y) {
        return self.ambient_derivative(y, X.at(y), Y) - self.ambient_derivative(y, Y.at(y), X);
      },
      "[" + X.label() + "," + Y.label() + "]", level);
}

TangentVector Geometry::lie_bracket(const VectorField& X, const VectorField& Y,
                                    const SpherePoint& x) const {
  const AmbientVector& p = x.coords();
  const AmbientVector b = ambient_derivative(p, X.at(p), Y) - ambient_derivative(p, Y.at(p), X);
  require_finite(b, "lie_bracket");
  const double normal = dot(b, p);
  if (!(std::abs(normal) < consistency_tol_ * std::max(1.0, numlin::norm(b)))) {
    throw InternalConsistencyError("lie_bracket: bracket not tangent, normal part " +
                                   std::to_string(normal));
  }
  return TangentVector::project(x, b);
}

TangentVector Geometry::cov_deriv(ConnectionKind kind, const TangentVector& u,
                                  const VectorField& Y) const {
  const AmbientVector& p = u.base().coords();
  if (kind == ConnectionKind::LeviCivita) {
    const AmbientVector r = levi_civita_at(p, u.vec(), Y);
    require_finite(r, "cov_deriv");
    return TangentVector::project(u.base(), r);
  }
  const AmbientVector literal = hconnection_at(p, u.vec(), Y);
  const AmbientVector substituted = hconnection_substituted_at(p, u.vec(), Y);
  require_finite(literal, "cov_deriv");
  require_finite(substituted, "cov_deriv");
  const double gap = numlin::norm(literal - substituted);
  if (!(gap <= consistency_tol_ * std::max(1.0, numlin::norm(literal)))) {
    throw InternalConsistencyError(
        "cov_deriv: H-connection forms disagree by " + std::to_string(gap) +
        " (the identity ∇_X ξ = −φX does not hold for this structure)");
  }
  return TangentVector::project(u.base(), literal);
}

TangentVector Geometry::cov_deriv(ConnectionKind kind, const VectorField& X, const VectorField& Y,
                                  const SpherePoint& x) const {
  return cov_deriv(kind, X.value(x), Y);
}

TangentVector Geometry::sasaki_defect(int alpha, const VectorField& X, const VectorField& Y,
                                      const SpherePoint& x) const {
  const TangentVector Xv = X.value(x);
  const TangentVector Yv = Y.value(x);
  const TangentVector nabla_phi_y = cov_deriv(ConnectionKind::LeviCivita, Xv, phi_of(alpha, Y));
  const TangentVector phi_nabla_y =
      s_->phi(alpha, cov_deriv(ConnectionKind::LeviCivita, Xv, Y));
  return nabla_phi_y - phi_nabla_y - s_->metric(Xv, Yv) * s_->reeb(alpha, x) +
         s_->eta(alpha, Yv) * Xv;
}

TangentVector Geometry::torsion(ConnectionKind kind, const VectorField& X, const VectorField& Y,
                                const SpherePoint& x) const {
  return cov_deriv(kind, X, Y, x) - cov_deriv(kind, Y, X, x) - lie_bracket(X, Y, x);
}

TangentVector Geometry::curvature(ConnectionKind kind, const VectorField& X, const VectorField& Y,
                                  const VectorField& Z, const SpherePoint& x) const {
  const AmbientVector& p = x.coords();
  const VectorField yz = cov_deriv_field(kind, Y, Z);
  const VectorField xz = cov_deriv_field(kind, X, Z);
  const AmbientVector bracket = lie_bracket(X, Y, x).vec();
  const AmbientVector r = connection_at(kind, p, X.at(p), yz) -
                          connection_at(kind, p, Y.at(p), xz) - connection_at(kind, p, bracket, Z);
  require_finite(r, "curvature");
  return TangentVector::project(x, r);
}

double Geometry::curvature4(ConnectionKind kind, const VectorField& X, const VectorField& Y,
                            const VectorField& Z, const VectorField& W,
                            const SpherePoint& x) const {
  return s_->metric(curvature(kind, X, Y, W, x), Z.value(x));
}

TangentVector Geometry::nabla_bar_phi_defect(int alpha, const VectorField& X, const VectorField& Y,
                                             const SpherePoint& x, ConnectionKind kind) const {
  const VectorField Xh = project_H_of(X);
  const VectorField Yh = project_H_of(Y);
  const TangentVector u = Xh.value(x);
  return cov_deriv(kind, u, phi_of(alpha, Yh)) - s_->phi(alpha, cov_deriv(kind, u, Yh));
}

double Geometry::derivative_of_inner(const VectorField& X, const VectorField& Y,
                                     const VectorField& Z, const SpherePoint& x) const {
  const AmbientVector& p = x.coords();
  auto f = [&](const auto& y) {
    using V = std::decay_t<decltype(y)>;
    V out(1);
    out[0] = dot(Y.at(y), Z.at(y));
    return out;
  };
  return numlin::directional_derivative(f, p, X.at(p), scheme_)[0];
}

TangentVector sphere_curvature_oracle(const TangentVector& X, const TangentVector& Y,
                                      const TangentVector& Z, int curvature_sign) {
  sphere3s::require_same_base(X, Y, "sphere_curvature_oracle");
  sphere3s::require_same_base(X, Z, "sphere_curvature_oracle");
  const double s = curvature_sign >= 0 ? 1.0 : -1.0;
  return s * (dot(Y.vec(), Z.vec()) * X - dot(X.vec(), Z.vec()) * Y);
}

}  // namespace hkc::connections
