#include <gtest/gtest.h>

#include "hkc/errors.hpp"
#include "hkc/harness/sampling.hpp"
#include "hkc/numlin/gram_schmidt.hpp"
#include "support.hpp"

using namespace hkc;
using namespace hkc::test;
using connections::ConnectionKind;
using connections::extension;
using connections::VectorField;

namespace {

constexpr auto LC = ConnectionKind::LeviCivita;
constexpr auto HC = ConnectionKind::HConnection;

struct Sample {
  SpherePoint x;
  VectorField X, Y, Z;
};

Sample draw(const Geometry& G, const char* name, std::uint64_t i = 0) {
  auto rng = stream(name, i);
  const auto x = sphere3s::random_point(G.structure().dim(), rng);
  auto X = harness::random_field(G, rng);
  auto Y = harness::random_field(G, rng);
  auto Z = harness::random_field(G, rng);
  return {x, X, Y, Z};
}

}  // namespace

TEST(VectorField, LevelsAndTangency) {
  Model m;
  const auto p = draw(m.G, "vf");
  EXPECT_NEAR(dot(p.X.value(p.x).vec(), p.x.coords()), 0.0, 1e-12);
  const auto D = m.G.cov_deriv_field(LC, p.X, p.Y);
  EXPECT_LT(D.max_level(), p.Y.max_level());
  const auto bad = VectorField::from_generic<0>([](const auto& y) { return y; }, "radial");
  EXPECT_THROW((void)bad.at(numlin::Vec<numlin::Jet1>(8)), StructuralError);
  EXPECT_THROW((void)bad.value(p.x), NumericError);
}

TEST(LieBracket, ReebBracketIsTwiceThird) {
  Model m;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto p = draw(m.G, "bracket", i);
    EXPECT_LT(dist(m.G.lie_bracket(m.G.xi(1), m.G.xi(2), p.x), 2.0 * m.s.reeb(3, p.x)), 1e-13);
    EXPECT_LT(m.G.lie_bracket(p.X, p.X, p.x).norm(), 1e-13);
    EXPECT_LT((m.G.lie_bracket(p.X, p.Y, p.x) + m.G.lie_bracket(p.Y, p.X, p.x)).norm(), 1e-13);
  }
}

TEST(CovDeriv, LeviCivitaOnReebFields) {
  Model m;
  const auto p = draw(m.G, "lc-reeb");
  const auto Xv = p.X.value(p.x);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_LT((m.G.cov_deriv(LC, p.X, m.G.xi(a), p.x) + m.s.phi(a, Xv)).norm(), 1e-13);
  }
  EXPECT_LT(dist(m.G.cov_deriv(LC, m.G.xi(1), m.G.xi(2), p.x), m.s.reeb(3, p.x)), 1e-13);
  EXPECT_LT(dist(m.G.cov_deriv(LC, m.G.xi(2), m.G.xi(1), p.x), -1.0 * m.s.reeb(3, p.x)), 1e-13);
}

TEST(CovDeriv, HConnectionKillsReeb) {
  Model m;
  const auto p = draw(m.G, "hc-reeb");
  for (int a = 1; a <= 3; ++a) {
    EXPECT_LT(m.G.cov_deriv(HC, p.X, m.G.xi(a), p.x).norm(), 1e-13);
    EXPECT_LT(m.G.cov_deriv(HC, m.G.xi(1), m.G.xi(a), p.x).norm(), 1e-13);
  }
}

TEST(CovDeriv, HConnectionFormsAgreeOnlyForCorrectSign) {
  // With the rejected sign ∇ξ = +φ, so the literal and substituted forms split.
  const Geometry wrong(ThreeSasakiStructure::canonical(1, +1));
  const auto p = draw(wrong, "forms");
  EXPECT_THROW((void)wrong.cov_deriv(HC, p.X, p.Y, p.x), InternalConsistencyError);
  Model m;
  EXPECT_NO_THROW((void)m.G.cov_deriv(HC, p.X, p.Y, p.x));
}

TEST(SasakiDefect, VanishesForCorrectSign) {
  Model m;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto p = draw(m.G, "defect", i);
    for (int a = 1; a <= 3; ++a) {
      EXPECT_LT(m.G.sasaki_defect(a, p.X, p.Y, p.x).norm(), 1e-12);
      EXPECT_LT(m.G.sasaki_defect(a, m.G.xi(a), m.G.xi(a), p.x).norm(), 1e-14);
    }
  }
}

TEST(SasakiDefect, WrongSignGivesNormTwo) {
  // X = Y = u unit in H: (∇_uφ)u = −ξ' instead of g(u,u)ξ, defect −2ξ'.
  Model m;
  const Geometry wrong(m.s.with_sign(+1));
  auto rng = stream("wrong");
  const auto x = sphere3s::random_point(8, rng);
  const auto u = harness::sample_unit_H(m.s, x, rng);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_NEAR(wrong.sasaki_defect(a, extension(u), extension(u), x).norm(), 2.0, 1e-13);
  }
}

TEST(Torsion, LeviCivitaFreeHConnectionTable) {
  Model m;
  const auto p = draw(m.G, "torsion");
  EXPECT_LT(m.G.torsion(LC, p.X, p.Y, p.x).norm(), 1e-9);
  EXPECT_LT(dist(m.G.torsion(HC, m.G.xi(1), m.G.xi(2), p.x), -2.0 * m.s.reeb(3, p.x)), 1e-13);
  auto rng = stream("torsion-h");
  const auto u = harness::sample_unit_H(m.s, p.x, rng);
  const auto v = harness::sample_unit_H(m.s, p.x, rng);
  auto expected = TangentVector::zero(p.x);
  for (int a = 1; a <= 3; ++a) expected = expected + 2.0 * m.s.omega(a, u, v) * m.s.reeb(a, p.x);
  EXPECT_LT(dist(m.G.torsion(HC, extension(u), extension(v), p.x), expected), 1e-13);
}

TEST(Curvature, LeviCivitaUnitPlaneAndReebSlot) {
  Model m;
  auto rng = stream("curv");
  const auto x = sphere3s::random_point(8, rng);
  const auto on = numlin::gram_schmidt(
      {sphere3s::random_tangent(x, rng).vec(), sphere3s::random_tangent(x, rng).vec()});
  const auto e1 = extension(TangentVector::project(x, on[0]));
  const auto e2 = extension(TangentVector::project(x, on[1]));
  EXPECT_NEAR(m.G.curvature4(LC, e1, e2, e1, e2, x), 1.0, 1e-12);
  EXPECT_NEAR(m.G.curvature4(LC, e1, e1, e2, e2, x), 0.0, 1e-12);

  const auto p = draw(m.G, "curv-xi");
  const auto Xv = p.X.value(p.x), Yv = p.Y.value(p.x);
  for (int a = 1; a <= 3; ++a) {
    const auto expected = m.s.eta(a, Yv) * Xv - m.s.eta(a, Xv) * Yv;
    EXPECT_LT(dist(m.G.curvature(LC, p.X, p.Y, m.G.xi(a), p.x), expected), 1e-11);
    EXPECT_LT(m.G.curvature(HC, p.X, p.Y, m.G.xi(a), p.x).norm(), 1e-11);
  }
}

TEST(Curvature, MatchesSphereOracle) {
  Model m;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto p = draw(m.G, "oracle", i);
    const auto R = m.G.curvature(LC, p.X, p.Y, p.Z, p.x);
    const auto O = connections::sphere_curvature_oracle(p.X.value(p.x), p.Y.value(p.x),
                                                        p.Z.value(p.x));
    EXPECT_LT(dist(R, O), 1e-10);
  }
}

TEST(SphereOracle, HandValues) {
  const SpherePoint x(AmbientVector::unit(4, 0));
  const TangentVector X(x, AmbientVector::unit(4, 1));
  const TangentVector Y(x, AmbientVector::unit(4, 2));
  // X = Z, Y ⟂ X, unit: R(X,Y)X = g(Y,X)X − g(X,X)Y = −Y.
  EXPECT_LT(dist(connections::sphere_curvature_oracle(X, Y, X), -1.0 * Y), 1e-15);
  EXPECT_LT(dist(connections::sphere_curvature_oracle(X, Y, X, -1), Y), 1e-15);
  EXPECT_LT(connections::sphere_curvature_oracle(X, X, Y).norm(), 1e-15);
}

TEST(NablaBarPhi, HConnectionParallelLeviCivitaNot) {
  Model m;
  auto rng = stream("varphi");
  const auto x = sphere3s::random_point(8, rng);
  const auto Hx = harness::random_H_field(m.G, rng);
  const auto Hy = harness::random_H_field(m.G, rng);
  const double g = m.s.metric(Hx.value(x), Hy.value(x));
  for (int a = 1; a <= 3; ++a) {
    EXPECT_LT(m.G.nabla_bar_phi_defect(a, Hx, Hy, x).norm(), 1e-12);
    EXPECT_LT(m.G.nabla_bar_phi_defect(a, Hx, m.G.phi_of(a, Hx), x).norm(), 1e-12);
    const auto lc = m.G.nabla_bar_phi_defect(a, Hx, Hy, x, LC);
    EXPECT_NEAR(lc.norm(), std::abs(g), 1e-12);
  }
  EXPECT_GT(std::abs(g), 1e-3);
}

TEST(Metricity, HConnection) {
  Model m;
  const auto p = draw(m.G, "metric");
  const auto Yv = p.Y.value(p.x), Zv = p.Z.value(p.x);
  const double lhs = m.G.derivative_of_inner(p.X, p.Y, p.Z, p.x);
  const double rhs = m.s.metric(m.G.cov_deriv(HC, p.X, p.Y, p.x), Zv) +
                     m.s.metric(Yv, m.G.cov_deriv(HC, p.X, p.Z, p.x));
  EXPECT_NEAR(lhs, rhs, 1e-11);
}
