#pragma once

#include <cmath>

#include "hkc/connections/connection.hpp"
#include "hkc/numlin/random.hpp"
#include "hkc/sphere3s/structure.hpp"

namespace hkc::test {

using connections::Geometry;
using numlin::AmbientVector;
using numlin::SampleStream;
using sphere3s::SpherePoint;
using sphere3s::TangentVector;
using sphere3s::ThreeSasakiStructure;

inline double dist(const TangentVector& a, const TangentVector& b) { return (a - b).norm(); }

inline SampleStream stream(const char* name, std::uint64_t index = 0, std::uint64_t seed = 17) {
  return {seed, numlin::stable_hash(name), index};
}

/// Canonical structure and geometry with the resolved Reeb sign (−1).
struct Model {
  explicit Model(int n = 1) : s(ThreeSasakiStructure::canonical(n)), G(s) {}
  ThreeSasakiStructure s;
  Geometry G;
};

}  // namespace hkc::test
