#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkc/harness/config.hpp"
#include "hkc/verification.hpp"

namespace hkc::harness {

inline constexpr const char* kReportSchema = "hkc-report/1";

/// Sign choices fixed during a run. Resolved before any curvature suite and
/// never re-arbitrated afterwards.
struct ConventionLedger {
  std::optional<int> reeb_sign;
  std::optional<int> curvature_sign;
  std::optional<int> sectional_convention;
  std::string quaternion_side = "left";
};

enum class SuiteStatus { Pass, Fail, Errored, Skipped };
const char* to_string(SuiteStatus s);

/// One row of the φ-plane sectional residual table.
struct SweepRow {
  int alpha = 0;
  int beta = 0;
  double theta = 0.0;
  double eta_beta = 0.0;
  double kbar = 0.0;
  int k_convention = 0;
  bool kbar_normalized = false;
  double k = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
};

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::string message;
  std::vector<VerificationRecord> records;
  std::vector<SweepRow> table;
};

struct VerificationReport {
  RunConfig config;
  ConventionLedger conventions;
  std::vector<SuiteResult> suites;

  [[nodiscard]] bool overall_pass() const;
  [[nodiscard]] const SuiteResult* suite(const std::string& name) const;
  /// First record with this id across all suites.
  [[nodiscard]] const VerificationRecord* find(const std::string& id) const;
};

/// Deterministic JSON: sorted keys, floats at 17 significant digits.
std::string to_json(const VerificationReport& report);
/// One line per record, for terminals.
std::string to_text(const VerificationReport& report);

}  // namespace hkc::harness
