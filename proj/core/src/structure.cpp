#include "hkc/sphere3s/structure.hpp"

#include <cmath>
#include <string>

#include "hkc/errors.hpp"
#include "hkc/numlin/gram_schmidt.hpp"

namespace hkc::sphere3s {

SpherePoint::SpherePoint(AmbientVector x) : x_(std::move(x)) {
  const double r2 = dot(x_, x_);
  if (!(std::abs(r2 - 1.0) <= kUnitTolerance)) {
    throw PreconditionError("SpherePoint: |x|^2 = " + std::to_string(r2) + " is not 1");
  }
}

SpherePoint SpherePoint::normalized(const AmbientVector& x) {
  const double r = numlin::norm(x);
  if (!(r > 0.0) || !std::isfinite(r)) throw DegenerateInputError("SpherePoint: cannot normalize");
  AmbientVector u = (1.0 / r) * x;
  // One refinement step keeps |u|^2 - 1 at rounding level.
  u *= 1.0 / std::sqrt(dot(u, u));
  return SpherePoint(std::move(u));
}

bool SpherePoint::same_as(const SpherePoint& o) const {
  if (o.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (std::abs(x_[i] - o.x_[i]) > 1e-12) return false;
  }
  return true;
}

TangentVector::TangentVector(SpherePoint base, AmbientVector v)
    : base_(std::move(base)), v_(std::move(v)) {
  numlin::require_same_dim(base_.dim(), v_.size(), "TangentVector");
  const double c = dot(v_, base_.coords());
  if (!(std::abs(c) <= kTangentTolerance * std::max(1.0, numlin::norm(v_)))) {
    throw PreconditionError("TangentVector: <v, x> = " + std::to_string(c));
  }
}

TangentVector TangentVector::project(const SpherePoint& base, const AmbientVector& v) {
  numlin::require_same_dim(base.dim(), v.size(), "TangentVector::project");
  const auto& x = base.coords();
  AmbientVector t = v - dot(v, x) * x;
  t -= dot(t, x) * x;
  return {base, std::move(t), true};
}

TangentVector TangentVector::zero(const SpherePoint& base) {
  return {base, AmbientVector(base.dim()), true};
}

void require_same_base(const TangentVector& a, const TangentVector& b, const char* what) {
  if (!a.base().same_as(b.base())) {
    throw StructuralError(std::string(what) + ": tangent vectors live at different points");
  }
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b, "TangentVector::operator+");
  return {a.base_, a.v_ + b.v_, true};
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b, "TangentVector::operator-");
  return {a.base_, a.v_ - b.v_, true};
}

TangentVector operator*(double s, const TangentVector& a) { return {a.base_, s * a.v_, true}; }

ThreeSasakiStructure::ThreeSasakiStructure(int n, numlin::ComplexStructureTriple J, int sign)
    : n_(n), J_(std::move(J)), sign_(sign) {
  if (n < 0) throw StructuralError("n must be nonnegative");
  if (sign != 1 && sign != -1) throw StructuralError("Reeb sign must be +1 or -1");
  for (const auto& m : J_.I) {
    if (m.dim() != 4 * static_cast<std::size_t>(n + 1)) {
      throw StructuralError("complex structure has dimension " + std::to_string(m.dim()) +
                            ", expected " + std::to_string(4 * (n + 1)));
    }
  }
}

ThreeSasakiStructure ThreeSasakiStructure::canonical(int n, int sign) {
  return {n, numlin::quaternion_structures(n), sign};
}

ThreeSasakiStructure ThreeSasakiStructure::with_sign(int sign) const { return {n_, J_, sign}; }

ThreeSasakiStructure ThreeSasakiStructure::with_flipped(int alpha) const {
  numlin::ComplexStructureTriple J = J_;
  J.I[static_cast<std::size_t>(alpha - 1)] = -J_.at(alpha);
  return {n_, std::move(J), sign_};
}

void ThreeSasakiStructure::require_dim(const SpherePoint& x) const {
  numlin::require_same_dim(dim(), x.dim(), "ThreeSasakiStructure");
}

double ThreeSasakiStructure::metric(const TangentVector& X, const TangentVector& Y) const {
  require_same_base(X, Y, "metric");
  return dot(X.vec(), Y.vec());
}

TangentVector ThreeSasakiStructure::reeb(int alpha, const SpherePoint& x) const {
  require_dim(x);
  return TangentVector::project(x, reeb_at(alpha, x.coords()));
}

TangentVector ThreeSasakiStructure::phi(int alpha, const TangentVector& X) const {
  require_dim(X.base());
  return TangentVector::project(X.base(), phi_at(alpha, X.base().coords(), X.vec()));
}

double ThreeSasakiStructure::eta(int alpha, const TangentVector& X) const {
  require_dim(X.base());
  return eta_at(alpha, X.base().coords(), X.vec());
}

double ThreeSasakiStructure::omega(int alpha, const TangentVector& X, const TangentVector& Y) const {
  require_same_base(X, Y, "omega");
  return omega_at(alpha, X.base().coords(), X.vec(), Y.vec());
}

TangentVector ThreeSasakiStructure::project_H(const TangentVector& X) const {
  require_dim(X.base());
  return TangentVector::project(X.base(), project_H_at(X.base().coords(), X.vec()));
}

double ThreeSasakiStructure::vertical_size(const TangentVector& X) const {
  double m = 0.0;
  for (int a = 1; a <= 3; ++a) m = std::max(m, std::abs(eta(a, X)));
  return m;
}

HFrame ThreeSasakiStructure::frame_H(const SpherePoint& x, std::uint64_t seed) const {
  require_dim(x);
  HFrame frame{x, {}};
  if (n_ == 0) return frame;
  const std::size_t rank = 4 * static_cast<std::size_t>(n_);
  const numlin::SampleStream root(seed, numlin::stable_hash("frame_H"), 0);
  for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
    numlin::SampleStream rng = root.split(attempt);
    std::vector<AmbientVector> raw;
    raw.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      raw.push_back(project_H_at(x.coords(), TangentVector::project(x, rng.gaussian(dim())).vec()));
    }
    try {
      const auto ortho = numlin::gram_schmidt(raw);
      frame.vectors.clear();
      for (const auto& v : ortho) {
        // Re-project so rounding in the orthonormalization cannot leak into xi.
        frame.vectors.push_back(TangentVector::project(x, project_H_at(x.coords(), v)));
      }
      return frame;
    } catch (const DegenerateInputError&) {
      continue;
    }
  }
  throw DegenerateInputError("frame_H: sampling failed after 10 retries");
}

TangentVector ThreeSasakiStructure::h_tensor(int alpha, int beta, const TangentVector& X,
                                             const numlin::DiffScheme& scheme) const {
  require_dim(X.base());
  const AmbientVector& x = X.base().coords();
  const AmbientVector v = X.vec();
  auto xi = [&](const auto& y) { return reeb_at(alpha, y); };
  auto ext = [&](const auto& y) { return projection_extension(v, y); };
  auto phi_ext = [&](const auto& y) { return phi_at(beta, y, projection_extension(v, y)); };
  // [A, B](x) = D_{A(x)} B - D_{B(x)} A
  auto bracket = [&](auto&& A, auto&& B) {
    const AmbientVector ax = A(x);
    const AmbientVector bx = B(x);
    return numlin::directional_derivative(B, x, ax, scheme) -
           numlin::directional_derivative(A, x, bx, scheme);
  };
  const AmbientVector lie_phi_x = bracket(xi, phi_ext);
  const AmbientVector lie_x = bracket(xi, ext);
  const AmbientVector h = 0.5 * (lie_phi_x - phi_at(beta, x, lie_x));
  return TangentVector::project(X.base(), h);
}

SpherePoint random_point(std::size_t dim, numlin::SampleStream& rng) {
  for (;;) {
    const AmbientVector g = rng.gaussian(dim);
    if (numlin::norm(g) > 1e-3) return SpherePoint::normalized(g);
  }
}

TangentVector random_tangent(const SpherePoint& x, numlin::SampleStream& rng) {
  return TangentVector::project(x, rng.gaussian(x.dim()));
}

TangentVector random_unit_H(const ThreeSasakiStructure& s, const SpherePoint& x,
                            numlin::SampleStream& rng) {
  if (s.n() < 1) throw PreconditionError("random_unit_H: H is zero-dimensional for n = 0");
  for (;;) {
    const TangentVector h = s.project_H(random_tangent(x, rng));
    const double r = h.norm();
    if (r > 1e-3) {
      TangentVector u = (1.0 / r) * h;
      return (1.0 / u.norm()) * s.project_H(u);
    }
  }
}

}  // namespace hkc::sphere3s
