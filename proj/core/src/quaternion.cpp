#include "hkc/numlin/quaternion.hpp"

#include <string>

#include "hkc/errors.hpp"

namespace hkc::numlin {
namespace {

using Quat = std::array<int, 4>;

Quat hamilton(const Quat& p, const Quat& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Matrix left_multiplication(const Quat& unit, int n) {
  const std::size_t dim = 4 * static_cast<std::size_t>(n + 1);
  Matrix m(dim);
  for (std::size_t block = 0; block < dim; block += 4) {
    for (std::size_t c = 0; c < 4; ++c) {
      Quat basis{0, 0, 0, 0};
      basis[c] = 1;
      const Quat image = hamilton(unit, basis);
      for (std::size_t r = 0; r < 4; ++r) m(block + r, block + c) = image[r];
    }
  }
  return m;
}

}  // namespace

const Matrix& ComplexStructureTriple::at(int alpha) const {
  if (alpha < 1 || alpha > 3) {
    throw StructuralError("structure index out of range: " + std::to_string(alpha));
  }
  return I[static_cast<std::size_t>(alpha - 1)];
}

ComplexStructureTriple quaternion_structures(int n) {
  if (n < 0) throw StructuralError("quaternionic dimension must be nonnegative");
  return {{left_multiplication({0, 1, 0, 0}, n), left_multiplication({0, 0, 1, 0}, n),
           left_multiplication({0, 0, 0, 1}, n)}};
}

}  // namespace hkc::numlin
