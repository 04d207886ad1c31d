#include "hkc/numlin/gram_schmidt.hpp"

#include <cmath>
#include <string>

#include "hkc/errors.hpp"

namespace hkc::numlin {

std::vector<AmbientVector> gram_schmidt(const std::vector<AmbientVector>& vectors,
                                        const BilinearForm& inner) {
  std::vector<AmbientVector> basis;
  basis.reserve(vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (k > 0) require_same_dim(vectors[0].size(), vectors[k].size(), "gram_schmidt");
    AmbientVector w = vectors[k];
    const double scale = std::sqrt(std::abs(inner(w, w)));
    // The second pass restores orthogonality lost to cancellation.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= inner(q, w) * q;
    }
    const double pivot = std::sqrt(std::abs(inner(w, w)));
    if (!(pivot >= kPivotTolerance) || !(pivot >= kPivotTolerance * scale)) {
      throw DegenerateInputError("gram_schmidt: rank deficiency at index " + std::to_string(k + 1) +
                                 " (pivot norm " + std::to_string(pivot) + ")");
    }
    basis.push_back((1.0 / pivot) * w);
  }
  return basis;
}

}  // namespace hkc::numlin
