#pragma once

#include <functional>
#include <vector>

#include "hkc/numlin/vec.hpp"

namespace hkc::numlin {

using BilinearForm = std::function<double(const AmbientVector&, const AmbientVector&)>;

inline double euclidean(const AmbientVector& a, const AmbientVector& b) { return dot(a, b); }

inline constexpr double kPivotTolerance = 1e-10;

/// Orthonormalizes `vectors` under `inner` (modified Gram-Schmidt, two passes).
/// Throws DegenerateInputError naming the 1-based index whose pivot norm
/// falls below kPivotTolerance.
std::vector<AmbientVector> gram_schmidt(const std::vector<AmbientVector>& vectors,
                                        const BilinearForm& inner = euclidean);

}  // namespace hkc::numlin
