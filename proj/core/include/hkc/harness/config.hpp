#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hkc/numlin/diff.hpp"

namespace hkc::harness {

/// Suites in their fixed execution order.
const std::vector<std::string>& all_suites();

struct RunConfig {
  int n = 1;
  std::size_t points = 25;
  std::uint64_t seed = 1;
  double tol_first = 1e-9;
  double tol_second = 1e-7;
  numlin::DiffScheme scheme = numlin::DiffScheme::exact();
  std::vector<std::string> suites = all_suites();
  /// Failure injection: negate I_2 before building the structure.
  bool debug_flip_i2 = false;

  /// Throws StructuralError on an invalid configuration.
  void validate() const;
  [[nodiscard]] bool wants(const std::string& suite) const;
};

/// Splits a comma-separated suite list; "all" expands to every suite.
std::vector<std::string> parse_suite_list(const std::string& list);

}  // namespace hkc::harness
