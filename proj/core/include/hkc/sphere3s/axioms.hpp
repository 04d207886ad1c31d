#pragma once

#include <vector>

#include "hkc/sphere3s/structure.hpp"
#include "hkc/verification.hpp"

namespace hkc::sphere3s {

/// Checks the almost contact axioms, metric compatibility and the
/// 3-structure relations at `samples.points` random points. Returns one
/// record per identity per point; failures are data, never exceptions.
std::vector<VerificationRecord> check_structure_axioms(const ThreeSasakiStructure& s,
                                                       const SampleSpec& samples,
                                                       double tolerance = 1e-9);

}  // namespace hkc::sphere3s
