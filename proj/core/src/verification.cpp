#include "hkc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hkc {

void ResidualTracker::add(double residual) {
  ++n_;
  if (std::isnan(residual)) {
    nan_ = true;
    return;
  }
  max_ = std::max(max_, std::abs(residual));
}

VerificationRecord ResidualTracker::record(std::string note) const {
  VerificationRecord r;
  r.id = id_;
  r.anchor = anchor_;
  r.max_residual = nan_ ? std::nan("") : max_;
  r.tolerance = tol_;
  r.samples = n_;
  r.passed = !nan_ && max_ < tol_;
  r.note = std::move(note);
  return r;
}

std::vector<VerificationRecord> aggregate(const std::vector<VerificationRecord>& records) {
  std::vector<VerificationRecord> out;
  std::map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, fresh] = slot.try_emplace(r.id, out.size());
    if (fresh) {
      out.push_back(r);
      continue;
    }
    auto& agg = out[it->second];
    if (std::isnan(r.max_residual) || std::isnan(agg.max_residual)) {
      agg.max_residual = std::nan("");
    } else {
      agg.max_residual = std::max(agg.max_residual, r.max_residual);
    }
    agg.samples += r.samples;
    agg.passed = agg.passed && r.passed;
    agg.tolerance = std::max(agg.tolerance, r.tolerance);
  }
  return out;
}

}  // namespace hkc
