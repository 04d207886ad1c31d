#pragma once

#include "hkc/connections/connection.hpp"
#include "hkc/numlin/random.hpp"

namespace hkc::harness {

/// Deterministic unit vector of H_x drawn from `rng`. Requires n >= 1.
sphere3s::TangentVector sample_unit_H(const sphere3s::ThreeSasakiStructure& s,
                                      const sphere3s::SpherePoint& x, numlin::SampleStream& rng);

/// A random smooth field with nonzero first and second derivatives at every
/// point: ext(v) + (c + <a, y>) φ_b(ext(w)) for random v, w, a, c, b.
connections::VectorField random_field(const connections::Geometry& geometry,
                                      numlin::SampleStream& rng);

/// random_field projected onto H.
connections::VectorField random_H_field(const connections::Geometry& geometry,
                                        numlin::SampleStream& rng);

}  // namespace hkc::harness
