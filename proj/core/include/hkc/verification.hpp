#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hkc {

/// Outcome of checking one identity over a set of samples.
struct VerificationRecord {
  std::string id;
  std::string anchor;  // source label of the identity
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = true;
  bool informational = false;  // excluded from the overall verdict
  std::string note;
};

/// Accumulates the worst residual of one identity across samples.
class ResidualTracker {
 public:
  ResidualTracker(std::string id, std::string anchor, double tolerance)
      : id_(std::move(id)), anchor_(std::move(anchor)), tol_(tolerance) {}

  void add(double residual);
  [[nodiscard]] double max() const { return max_; }
  [[nodiscard]] std::size_t count() const { return n_; }
  [[nodiscard]] VerificationRecord record(std::string note = {}) const;

 private:
  std::string id_;
  std::string anchor_;
  double tol_;
  double max_ = 0.0;
  std::size_t n_ = 0;
  bool nan_ = false;
};

/// Collapses per-sample records sharing an id into one record each,
/// preserving first-appearance order.
std::vector<VerificationRecord> aggregate(const std::vector<VerificationRecord>& records);

}  // namespace hkc

namespace hkc {

/// Which deterministic samples a verifier draws: `points` samples from the
/// stream keyed by (seed, stream name).
struct SampleSpec {
  std::size_t points = 25;
  std::uint64_t seed = 0;
};

}  // namespace hkc
