#include <gtest/gtest.h>

#include "hkc/errors.hpp"
#include "hkc/sphere3s/axioms.hpp"
#include "support.hpp"

using namespace hkc;
using namespace hkc::test;

namespace {

const VerificationRecord* find(const std::vector<VerificationRecord>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(SpherePoint, RejectsNonUnit) {
  EXPECT_THROW(SpherePoint(AmbientVector{1.0, 1.0, 0.0, 0.0}), PreconditionError);
  EXPECT_NO_THROW(SpherePoint(AmbientVector{0.6, 0.8, 0.0, 0.0}));
  EXPECT_THROW(SpherePoint::normalized(AmbientVector(4)), DegenerateInputError);
}

TEST(TangentVector, RejectsNormalComponent) {
  const SpherePoint x(AmbientVector::unit(4, 0));
  EXPECT_THROW(TangentVector(x, AmbientVector{1.0, 0.0, 0.0, 0.0}), PreconditionError);
  const auto t = TangentVector::project(x, AmbientVector{3.0, 1.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(t.vec()[0], 0.0);
  EXPECT_DOUBLE_EQ(t.vec()[1], 1.0);
}

TEST(Metric, UnitAndSymmetric) {
  Model m;
  auto rng = stream("metric");
  const auto x = sphere3s::random_point(8, rng);
  auto X = sphere3s::random_tangent(x, rng);
  const auto Y = sphere3s::random_tangent(x, rng);
  X = (1.0 / X.norm()) * X;
  EXPECT_NEAR(m.s.metric(X, X), 1.0, 1e-15);
  EXPECT_NEAR(m.s.metric(X, Y), m.s.metric(Y, X), 1e-14);
  EXPECT_NEAR(m.s.metric(m.s.reeb(1, x), m.s.reeb(2, x)), 0.0, 1e-15);

  const auto other = sphere3s::random_point(8, rng);
  EXPECT_THROW((void)m.s.metric(X, sphere3s::random_tangent(other, rng)), StructuralError);
}

TEST(Reeb, FrozenValueAtE1) {
  // I_1 e_1 = (0,1,0,0) for left multiplication by i; resolved sign is −1.
  const SpherePoint x(AmbientVector::unit(4, 0));
  const auto minus = ThreeSasakiStructure::canonical(0);
  const auto plus = ThreeSasakiStructure::canonical(0, +1);
  EXPECT_EQ(minus.sign(), -1);
  const AmbientVector expected{0.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(numlin::norm(plus.reeb(1, x).vec() - expected), 0.0);
  EXPECT_EQ(numlin::norm(minus.reeb(1, x).vec() + expected), 0.0);
  EXPECT_THROW((void)minus.reeb(0, x), StructuralError);
  EXPECT_THROW((void)minus.reeb(4, x), StructuralError);
}

TEST(Reeb, TangentAndUnit) {
  Model m(2);
  auto rng = stream("reeb");
  const auto x = sphere3s::random_point(12, rng);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_NEAR(dot(m.s.reeb(a, x).vec(), x.coords()), 0.0, 1e-15);
    EXPECT_NEAR(m.s.metric(m.s.reeb(a, x), m.s.reeb(a, x)), 1.0, 1e-14);
  }
}

TEST(Phi, QuaternionicRelations) {
  Model m;
  auto rng = stream("phi");
  const auto x = sphere3s::random_point(8, rng);
  for (int a = 1; a <= 3; ++a) EXPECT_LT(m.s.phi(a, m.s.reeb(a, x)).norm(), 1e-15);
  EXPECT_LT(dist(m.s.phi(1, m.s.reeb(2, x)), m.s.reeb(3, x)), 1e-14);
  const auto X = sphere3s::random_unit_H(m.s, x, rng);
  EXPECT_LT(dist(m.s.phi(1, m.s.phi(2, X)), m.s.phi(3, X)), 1e-10);
}

TEST(Eta, DualToReebAndZeroOnH) {
  Model m;
  auto rng = stream("eta");
  const auto x = sphere3s::random_point(8, rng);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      EXPECT_NEAR(m.s.eta(a, m.s.reeb(b, x)), a == b ? 1.0 : 0.0, 1e-15);
    }
  }
  const auto u = sphere3s::random_unit_H(m.s, x, rng);
  for (int a = 1; a <= 3; ++a) EXPECT_NEAR(m.s.eta(a, u), 0.0, 1e-14);
  const auto X = sphere3s::random_tangent(x, rng);
  // η^θ = η^β ∘ φ_γ for even (θ, β, γ).
  EXPECT_NEAR(m.s.eta(1, X), m.s.eta(2, m.s.phi(3, X)), 1e-14);
  EXPECT_NEAR(m.s.eta(2, X), m.s.eta(3, m.s.phi(1, X)), 1e-14);
  EXPECT_NEAR(m.s.eta(3, X), m.s.eta(1, m.s.phi(2, X)), 1e-14);
}

TEST(Omega, HandValues) {
  Model m;
  auto rng = stream("omega");
  const auto x = sphere3s::random_point(8, rng);
  const auto u = sphere3s::random_unit_H(m.s, x, rng);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_NEAR(m.s.omega(a, u, u), 0.0, 1e-15);
    EXPECT_NEAR(m.s.omega(a, u, m.s.phi(a, u)), -1.0, 1e-14);
  }
  EXPECT_NEAR(m.s.omega(1, m.s.phi(1, u), u), 1.0, 1e-14);
}

TEST(ProjectH, SplitsOffReebPart) {
  Model m;
  auto rng = stream("projH");
  const auto x = sphere3s::random_point(8, rng);
  EXPECT_LT(m.s.project_H(m.s.reeb(2, x)).norm(), 1e-15);
  const auto u = sphere3s::random_unit_H(m.s, x, rng);
  EXPECT_LT(dist(m.s.project_H(u), u), 1e-15);
  const auto X = sphere3s::random_tangent(x, rng);
  for (int a = 1; a <= 3; ++a) EXPECT_NEAR(m.s.eta(a, m.s.project_H(X)), 0.0, 1e-14);
}

TEST(FrameH, OrthonormalHorizontalDeterministic) {
  Model m;
  auto rng = stream("frame");
  const auto x = sphere3s::random_point(8, rng);
  const auto f = m.s.frame_H(x, 99);
  ASSERT_EQ(f.vectors.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (int a = 1; a <= 3; ++a) EXPECT_NEAR(m.s.eta(a, f.vectors[i]), 0.0, 1e-10);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_NEAR(m.s.metric(f.vectors[i], f.vectors[j]), i == j ? 1.0 : 0.0, 1e-10);
    }
  }
  const auto g = m.s.frame_H(x, 99);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(dist(f.vectors[i], g.vectors[i]), 0.0);
  EXPECT_TRUE(Model(0).s.frame_H(SpherePoint(AmbientVector::unit(4, 0)), 1).vectors.empty());
}

TEST(HTensor, Table) {
  Model m;
  auto rng = stream("h");
  const auto x = sphere3s::random_point(8, rng);
  const auto X = sphere3s::random_tangent(x, rng);
  for (int a = 1; a <= 3; ++a) EXPECT_LT(m.s.h_tensor(a, a, X).norm(), 1e-13);
  EXPECT_LT(dist(m.s.h_tensor(1, 2, X), m.s.phi(3, X)), 1e-13);
  EXPECT_LT(dist(m.s.h_tensor(2, 1, X), -1.0 * m.s.phi(3, X)), 1e-13);
  EXPECT_LT(dist(m.s.h_tensor(3, 1, X), m.s.phi(2, X)), 1e-13);
  EXPECT_LT(dist(m.s.h_tensor(2, 3, X), m.s.phi(1, X)), 1e-13);
}

TEST(Axioms, CanonicalStructurePassesAtHundredPoints) {
  for (int n : {0, 1, 2}) {
    const auto recs = aggregate(
        sphere3s::check_structure_axioms(ThreeSasakiStructure::canonical(n), {100, 3}, 1e-9));
    ASSERT_FALSE(recs.empty());
    for (const auto& r : recs) EXPECT_TRUE(r.passed) << "n=" << n << " " << r.id;
  }
}

TEST(Axioms, FlippedI2BreaksQuaternionRelations) {
  const auto s = ThreeSasakiStructure::canonical(1).with_flipped(2);
  const auto recs = aggregate(sphere3s::check_structure_axioms(s, {10, 3}, 1e-9));
  const auto* q = find(recs, "axioms.quaternion-relations");
  ASSERT_NE(q, nullptr);
  EXPECT_FALSE(q->passed);
  // Still an almost contact metric structure one α at a time.
  EXPECT_TRUE(find(recs, "axioms.phi-squared")->passed);
  EXPECT_TRUE(find(recs, "axioms.compat-phi")->passed);
}

TEST(Sampling, RandomUnitHRequiresH) {
  Model m(0);
  auto rng = stream("n0");
  const auto x = sphere3s::random_point(4, rng);
  EXPECT_THROW((void)sphere3s::random_unit_H(m.s, x, rng), PreconditionError);
}
