#include "hkc/harness/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <json.hpp>

namespace hkc::harness {
namespace {

using nlohmann::json;

void dump(const json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump(j[i], out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN/Inf; they only arise from failed evaluations.
      out += std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json record_json(const VerificationRecord& r) {
  return {{"id", r.id},
          {"anchor", r.anchor},
          {"max_residual", r.max_residual},
          {"tolerance", r.tolerance},
          {"samples", r.samples},
          {"passed", r.passed},
          {"informational", r.informational},
          {"note", r.note}};
}

}  // namespace

const char* to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Errored: return "errored";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::overall_pass() const {
  for (const auto& s : suites) {
    if (s.status == SuiteStatus::Errored || s.status == SuiteStatus::Skipped) return false;
    for (const auto& r : s.records) {
      if (!r.informational && !r.passed) return false;
    }
  }
  return true;
}

const SuiteResult* VerificationReport::suite(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const VerificationRecord* VerificationReport::find(const std::string& id) const {
  for (const auto& s : suites) {
    for (const auto& r : s.records) {
      if (r.id == id) return &r;
    }
  }
  return nullptr;
}

std::string to_json(const VerificationReport& report) {
  const auto& c = report.config;
  json j;
  j["schema"] = kReportSchema;
  j["config"] = {{"n", c.n},
                 {"points", c.points},
                 {"seed", c.seed},
                 {"tol_first", c.tol_first},
                 {"tol_second", c.tol_second},
                 {"scheme", c.scheme.name()},
                 {"fd_step", c.scheme.is_exact() ? json(nullptr) : json(c.scheme.step)},
                 {"suites", c.suites},
                 {"debug_flip_i2", c.debug_flip_i2}};
  j["conventions"] = {{"reeb_sign", opt(report.conventions.reeb_sign)},
                      {"curvature_sign", opt(report.conventions.curvature_sign)},
                      {"sectional_convention", opt(report.conventions.sectional_convention)},
                      {"quaternion_side", report.conventions.quaternion_side}};
  json suites = json::array();
  for (const auto& s : report.suites) {
    json records = json::array();
    for (const auto& r : s.records) records.push_back(record_json(r));
    json js = {{"name", s.name},
               {"status", to_string(s.status)},
               {"message", s.message},
               {"records", records}};
    if (!s.table.empty()) {
      json rows = json::array();
      for (const auto& row : s.table) {
        rows.push_back({{"alpha", row.alpha},
                        {"beta", row.beta},
                        {"theta", row.theta},
                        {"eta_beta", row.eta_beta},
                        {"kbar", row.kbar},
                        {"k_convention", row.k_convention},
                        {"kbar_normalized", row.kbar_normalized},
                        {"k", row.k},
                        {"predicted", row.predicted},
                        {"residual", row.residual}});
      }
      js["table"] = rows;
    }
    suites.push_back(js);
  }
  j["suites"] = suites;
  j["overall"] = report.overall_pass() ? "pass" : "fail";
  std::string out;
  dump(j, out, 2, 0);
  out += "\n";
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::string out;
  const auto& cv = report.conventions;
  auto sgn = [](const std::optional<int>& v) { return v ? fmt::format("{:+d}", *v) : "unset"; };
  out += fmt::format("hkc verify  n={} points={} seed={} scheme={}\n", report.config.n,
                     report.config.points, report.config.seed, report.config.scheme.name());
  out += fmt::format("conventions: reeb_sign={} curvature_sign={} sectional={} quaternion={}\n",
                     sgn(cv.reeb_sign), sgn(cv.curvature_sign), sgn(cv.sectional_convention),
                     cv.quaternion_side);
  for (const auto& s : report.suites) {
    out += fmt::format("[{}] {}{}\n", to_string(s.status), s.name,
                       s.message.empty() ? "" : "  (" + s.message + ")");
    for (const auto& r : s.records) {
      const char* tag = r.informational ? "info" : (r.passed ? "PASS" : "FAIL");
      out += fmt::format("  {:4} {:<40} res={:<11.3e} tol={:<9.1e} n={:<4} {}{}\n", tag, r.id,
                         r.max_residual, r.tolerance, r.samples, r.anchor,
                         r.note.empty() ? "" : "  | " + r.note);
    }
  }
  out += fmt::format("overall: {}\n", report.overall_pass() ? "PASS" : "FAIL");
  return out;
}

}  // namespace hkc::harness
