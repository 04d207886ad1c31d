#include "hkc/harness/config.hpp"

#include <algorithm>
#include <sstream>

#include "hkc/errors.hpp"

namespace hkc::harness {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> kSuites{"axioms",      "sasaki", "connection",
                                                "torsion",     "curvature", "cross-check",
                                                "ricci",       "sectional", "theorem-sec"};
  return kSuites;
}

void RunConfig::validate() const {
  if (n < 0) throw StructuralError("n must be nonnegative");
  if (n > 7) throw StructuralError("n > 7 exceeds the desk-scale ambient dimension limit of 32");
  if (points < 1) throw StructuralError("points must be at least 1");
  if (!(tol_first > 0.0) || !(tol_second > 0.0)) throw StructuralError("tolerances must be positive");
  if (tol_first > tol_second) throw StructuralError("tol_first must not exceed tol_second");
  if (!scheme.is_exact() && !(scheme.step > 0.0)) throw StructuralError("fd step must be positive");
  for (const auto& s : suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw StructuralError("unknown suite '" + s + "'");
    }
  }
}

bool RunConfig::wants(const std::string& suite) const {
  return std::find(suites.begin(), suites.end(), suite) != suites.end();
}

std::vector<std::string> parse_suite_list(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "all") return all_suites();
    if (std::find(all_suites().begin(), all_suites().end(), item) == all_suites().end()) {
      throw StructuralError("unknown suite '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw StructuralError("empty suite list");
  // Execution order is fixed regardless of how the list was written.
  std::vector<std::string> ordered;
  for (const auto& s : all_suites()) {
    if (std::find(out.begin(), out.end(), s) != out.end()) ordered.push_back(s);
  }
  return ordered;
}

}  // namespace hkc::harness
