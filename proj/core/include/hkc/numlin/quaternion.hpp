#pragma once

#include <array>

#include "hkc/numlin/matrix.hpp"

namespace hkc::numlin {

/// Three anticommuting complex structures on R^{4(n+1)} obeying the
/// quaternion relations I1 I2 = I3, I2 I3 = I1, I3 I1 = I2.
struct ComplexStructureTriple {
  std::array<Matrix, 3> I;

  /// alpha in 1..3.
  [[nodiscard]] const Matrix& at(int alpha) const;
  [[nodiscard]] std::size_t dim() const { return I[0].dim(); }
};

/// Block-diagonal left multiplication by the units i, j, k on H^{n+1},
/// with quaternion coordinates (a, b, c, d) = a + b i + c j + d k.
/// Entries lie in {-1, 0, 1}.
ComplexStructureTriple quaternion_structures(int n);

}  // namespace hkc::numlin
