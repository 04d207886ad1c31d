#include "hkc/harness/sampling.hpp"

#include "hkc/errors.hpp"

namespace hkc::harness {

sphere3s::TangentVector sample_unit_H(const sphere3s::ThreeSasakiStructure& s,
                                      const sphere3s::SpherePoint& x, numlin::SampleStream& rng) {
  if (s.n() < 1) throw PreconditionError("sample_unit_H: H is zero-dimensional for n = 0");
  return sphere3s::random_unit_H(s, x, rng);
}

connections::VectorField random_field(const connections::Geometry& geometry,
                                      numlin::SampleStream& rng) {
  const std::size_t dim = geometry.structure().dim();
  const auto v = rng.gaussian(dim);
  const auto w = rng.gaussian(dim);
  connections::AffineScalar c{rng.normal(), rng.gaussian(dim)};
  const int b = 1 + static_cast<int>(rng.next_u64() % 3);
  return connections::sum(connections::extension(v),
                          connections::scaled(std::move(c),
                                              geometry.phi_of(b, connections::extension(w))));
}

connections::VectorField random_H_field(const connections::Geometry& geometry,
                                        numlin::SampleStream& rng) {
  return geometry.project_H_of(random_field(geometry, rng));
}

}  // namespace hkc::harness
