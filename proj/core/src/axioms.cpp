#include "hkc/sphere3s/axioms.hpp"

#include <array>
#include <cmath>

#include "hkc/numlin/random.hpp"

namespace hkc::sphere3s {
namespace {

constexpr std::array<std::array<int, 3>, 3> kEvenPermutations{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

double dist(const TangentVector& a, const TangentVector& b) { return (a - b).norm(); }

}  // namespace

std::vector<VerificationRecord> check_structure_axioms(const ThreeSasakiStructure& s,
                                                       const SampleSpec& samples,
                                                       double tolerance) {
  std::vector<VerificationRecord> out;
  const auto stream = numlin::stable_hash("axioms");

  // Point-independent: the complex structures themselves.
  {
    const auto& J = s.complex_structures();
    const auto id = numlin::Matrix::identity(s.dim());
    ResidualTracker quat("axioms.quaternion-relations", "§2, 3-structure relations", tolerance);
    ResidualTracker cplx("axioms.complex-structure", "§2, 3-structure relations", tolerance);
    for (const auto& p : kEvenPermutations) {
      quat.add((J.at(p[0]) * J.at(p[1]) - J.at(p[2])).max_abs());
    }
    for (int a = 1; a <= 3; ++a) {
      cplx.add((J.at(a) * J.at(a) + id).max_abs());
      cplx.add((J.at(a).transpose() + J.at(a)).max_abs());
    }
    out.push_back(quat.record());
    out.push_back(cplx.record());
  }

  for (std::size_t i = 0; i < samples.points; ++i) {
    numlin::SampleStream rng(samples.seed, stream, i);
    const SpherePoint x = random_point(s.dim(), rng);
    const TangentVector X = random_tangent(x, rng);
    const TangentVector Y = random_tangent(x, rng);
    std::array<TangentVector, 3> xi{s.reeb(1, x), s.reeb(2, x), s.reeb(3, x)};
    auto rec = [&](const char* id, const char* anchor) {
      return ResidualTracker(id, anchor, tolerance);
    };

    auto phi2 = rec("axioms.phi-squared", "§2, φ² = −I + η⊗ξ");
    auto eta_xi = rec("axioms.eta-xi", "§2, η(ξ) = 1");
    auto phi_xi = rec("axioms.phi-xi", "§2, φξ = 0");
    auto reeb_orth = rec("axioms.reeb-orthonormal", "§2, three global (Reeb) vector fields");
    auto compat_eta = rec("axioms.compat-eta", "Eq. (compat), η(X) = g(ξ,X)");
    auto compat_phi = rec("axioms.compat-phi", "Eq. (compat), g(φX,φY) = g(X,Y) − η(X)η(Y)");
    auto omega_skew = rec("axioms.omega-skew", "§2, fundamental 2-form Ω(X,Y) = g(X,φY)");
    for (int a = 1; a <= 3; ++a) {
      const auto& xa = xi[static_cast<std::size_t>(a - 1)];
      phi2.add(dist(s.phi(a, s.phi(a, X)), -1.0 * X + s.eta(a, X) * xa));
      eta_xi.add(s.eta(a, xa) - 1.0);
      phi_xi.add(s.phi(a, xa).norm());
      for (int b = 1; b <= 3; ++b) {
        reeb_orth.add(s.metric(xa, xi[static_cast<std::size_t>(b - 1)]) - (a == b ? 1.0 : 0.0));
      }
      compat_eta.add(s.eta(a, X) - s.metric(xa, X));
      compat_phi.add(s.metric(s.phi(a, X), s.phi(a, Y)) - s.metric(X, Y) +
                     s.eta(a, X) * s.eta(a, Y));
      omega_skew.add(s.omega(a, X, Y) + s.omega(a, Y, X));
    }

    auto phi_rel = rec("axioms.phi-relation", "§2, φ_θ = φ_βφ_γ − η^γ⊗ξ_β = −φ_γφ_β + η^β⊗ξ_γ");
    auto xi_rel = rec("axioms.xi-relation", "§2, ξ_θ = φ_βξ_γ = −φ_γξ_β");
    auto eta_rel = rec("axioms.eta-relation", "§2, η^θ = η^β∘φ_γ = −η^γ∘φ_β");
    for (const auto& p : kEvenPermutations) {
      const int b = p[0], c = p[1], t = p[2];
      const auto& xb = xi[static_cast<std::size_t>(b - 1)];
      const auto& xc = xi[static_cast<std::size_t>(c - 1)];
      const auto& xt = xi[static_cast<std::size_t>(t - 1)];
      const TangentVector phit = s.phi(t, X);
      phi_rel.add(dist(phit, s.phi(b, s.phi(c, X)) - s.eta(c, X) * xb));
      phi_rel.add(dist(phit, s.eta(b, X) * xc - s.phi(c, s.phi(b, X))));
      xi_rel.add(dist(xt, s.phi(b, xc)));
      xi_rel.add(dist(xt, -1.0 * s.phi(c, xb)));
      eta_rel.add(s.eta(t, X) - s.eta(b, s.phi(c, X)));
      eta_rel.add(s.eta(t, X) + s.eta(c, s.phi(b, X)));
    }
    for (const auto* t : {&phi2, &eta_xi, &phi_xi, &reeb_orth, &compat_eta, &compat_phi,
                          &omega_skew, &phi_rel, &xi_rel, &eta_rel}) {
      out.push_back(t->record());
    }
  }
  return out;
}

}  // namespace hkc::sphere3s
