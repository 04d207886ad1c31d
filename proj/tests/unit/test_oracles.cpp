// Values frozen from tests/oracles/hconnection_oracle.py, which evaluates the
// H-connection curvature in closed form (∇̄ = ∇ + A with the Sasakian
// identities) without any differentiation.
#include <gtest/gtest.h>

#include <array>

#include "hkc/curvature/analysis.hpp"
#include "hkc/harness/sampling.hpp"
#include "support.hpp"

using namespace hkc;
using namespace hkc::test;
using connections::ConnectionKind;
using connections::extension;

namespace {

SpherePoint fixed_point() {
  return SpherePoint::normalized(AmbientVector{1.0, 2.0, 0.0, -1.0, 3.0, 1.0, -2.0, 1.0});
}

}  // namespace

TEST(Oracle, FixedPointCoordinates) {
  const std::array<double, 8> frozen{0.2182178902359924,  0.4364357804719848, 0.0,
                                     -0.2182178902359924, 0.6546536707079772, 0.2182178902359924,
                                     -0.4364357804719848, 0.2182178902359924};
  const auto x = fixed_point();
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(x.coords()[i], frozen[i], 1e-15);
}

TEST(Oracle, RbarOnFixedMixedTriple) {
  const Model m;
  const auto x = fixed_point();
  const auto X = TangentVector::project(x, AmbientVector{1, 0, 0, 0, 0, 0, 0, 0});
  const auto Y = TangentVector::project(x, AmbientVector{0, 1, 0, 0, 1, 0, 0, 0});
  const auto Z = TangentVector::project(x, AmbientVector{0, 0, 1, 0, 0, 0, 0, -1});
  const std::array<double, 8> frozen{0.562358276643991,   -0.8707482993197275, -0.07256235827664395,
                                     -0.5804988662131519, -0.2902494331065759, 0.3446712018140591,
                                     -0.5986394557823128, -0.07256235827664392};
  const auto direct = m.G.curvature(ConnectionKind::HConnection, extension(X), extension(Y),
                                    extension(Z), x);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(direct.vec()[i], frozen[i], 1e-12) << i;
}

TEST(Oracle, RicciConstants) {
  // Oracle: Levi-Civita 6 / 10, H-connection 12 / 16 at n = 1 / 2.
  const std::array<std::array<double, 2>, 2> frozen{{{6.0, 12.0}, {10.0, 16.0}}};
  for (int n : {1, 2}) {
    const Model m(n);
    auto rng = stream("oracle-ricci", static_cast<std::uint64_t>(n));
    const auto x = sphere3s::random_point(m.s.dim(), rng);
    const auto u = harness::sample_unit_H(m.s, x, rng);
    const auto& f = frozen[static_cast<std::size_t>(n - 1)];
    EXPECT_NEAR(curvature::ricci(m.G, ConnectionKind::LeviCivita, u, u), f[0], 1e-10);
    EXPECT_NEAR(curvature::ricci(m.G, ConnectionKind::HConnection, u, u), f[1], 1e-10);
  }
}
