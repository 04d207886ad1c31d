#include <benchmark/benchmark.h>

#include "hkc/curvature/analysis.hpp"
#include "hkc/harness/sampling.hpp"
#include "hkc/harness/suite.hpp"

using namespace hkc;
using connections::ConnectionKind;

namespace {

struct Fixture {
  explicit Fixture(int n, numlin::DiffScheme scheme = numlin::DiffScheme::exact())
      : G(sphere3s::ThreeSasakiStructure::canonical(n), scheme),
        rng(1, numlin::stable_hash("bench"), 0),
        x(sphere3s::random_point(G.structure().dim(), rng)),
        X(harness::random_field(G, rng)),
        Y(harness::random_field(G, rng)),
        Z(harness::random_field(G, rng)) {}
  connections::Geometry G;
  numlin::SampleStream rng;
  sphere3s::SpherePoint x;
  connections::VectorField X, Y, Z;
};

void BM_CovDeriv(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const auto kind = static_cast<ConnectionKind>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(f.G.cov_deriv(kind, f.X, f.Y, f.x));
}
BENCHMARK(BM_CovDeriv)->ArgsProduct({{1, 2, 4}, {0, 1}});

void BM_Curvature(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const auto kind = static_cast<ConnectionKind>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(f.G.curvature(kind, f.X, f.Y, f.Z, f.x));
}
BENCHMARK(BM_Curvature)->ArgsProduct({{1, 2, 4}, {0, 1}});

void BM_CurvatureFiniteDifference(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), numlin::DiffScheme::central(1e-4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.G.curvature(ConnectionKind::LeviCivita, f.X, f.Y, f.Z, f.x));
  }
}
BENCHMARK(BM_CurvatureFiniteDifference)->Arg(1)->Arg(2);

void BM_RicciHConnection(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  const auto u = harness::sample_unit_H(f.G.structure(), f.x, f.rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature::ricci(f.G, ConnectionKind::HConnection, u, u));
  }
}
BENCHMARK(BM_RicciHConnection)->Arg(1)->Arg(2);

void BM_FullSuite(benchmark::State& state) {
  harness::RunConfig cfg;
  cfg.points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_suite(cfg));
}
BENCHMARK(BM_FullSuite)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
