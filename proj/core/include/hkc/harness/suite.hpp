#pragma once

#include <string>
#include <vector>

#include "hkc/harness/config.hpp"
#include "hkc/harness/report.hpp"

namespace hkc::harness {

/// Runs the selected suites in their fixed order and assembles the report.
///
/// The Reeb sign and the curvature sign are resolved before any suite runs.
/// A failing axioms suite skips everything downstream; a failing Levi-Civita
/// oracle gate skips the suites built on curvature analysis. An exception
/// inside a suite marks only that suite as errored.
VerificationReport run_suite(const RunConfig& config);

/// Every record id a full run can emit, in emission order.
const std::vector<std::string>& identity_registry();

}  // namespace hkc::harness
