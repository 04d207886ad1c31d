#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hkc/curvature/analysis.hpp"
#include "hkc/errors.hpp"
#include "hkc/harness/report.hpp"
#include "hkc/harness/sampling.hpp"
#include "hkc/harness/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("HKC_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t used = 0;
  const std::string s(env);
  const auto v = std::stoull(s, &used, 0);
  if (used != s.size()) throw hkc::StructuralError("HKC_SEED is not an integer: " + s);
  return v;
}

int run_verify(hkc::harness::RunConfig cfg, const std::string& scheme, double fd_step,
               const std::string& suites, const std::string& out, const std::string& format) {
  using namespace hkc::harness;
  cfg.seed = seed_from_env(cfg.seed);
  cfg.scheme = scheme == "fd" ? hkc::numlin::DiffScheme::central(fd_step)
                              : hkc::numlin::DiffScheme::exact();
  cfg.suites = parse_suite_list(suites);
  cfg.validate();

  const VerificationReport report = run_suite(cfg);
  const std::string body = format == "text" ? to_text(report) : to_json(report);
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw hkc::StructuralError("cannot open output file " + out);
    f << body;
    std::cerr << fmt::format("report written to {} ({})\n", out,
                             report.overall_pass() ? "pass" : "fail");
  }
  return report.overall_pass() ? kExitPass : kExitFail;
}

int run_curvature(int n, std::uint64_t seed, int alpha, std::size_t points) {
  using namespace hkc;
  seed = seed_from_env(seed);
  if (alpha < 1 || alpha > 3) throw StructuralError("alpha must be 1, 2 or 3");
  if (n < 1 || n > 7) throw StructuralError("n must lie in [1, 7] for H-vectors to exist");
  const connections::Geometry G(sphere3s::ThreeSasakiStructure::canonical(n));
  const auto& s = G.structure();

  std::cout << fmt::format("n = {}  seed = {}  alpha = {}\n", n, seed, alpha);
  std::cout << fmt::format("{:>4}  {:>22}  {:>22}  {:>22}  {:>22}  {:>12}\n", "i", "Hbar_1",
                           "Hbar_2", "Hbar_3", "sum", "|sum-12|");
  double worst = 0.0, worst_alpha = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    numlin::SampleStream rng(seed, numlin::stable_hash("cli/curvature"), i);
    const auto x = sphere3s::random_point(s.dim(), rng);
    const auto u = harness::sample_unit_H(s, x, rng);
    std::array<double, 3> h{};
    for (int a = 1; a <= 3; ++a) {
      h[static_cast<std::size_t>(a - 1)] = curvature::holomorphic_sectional_bar(G, a, u);
    }
    const double sum = h[0] + h[1] + h[2];
    worst = std::max(worst, std::abs(sum - 12.0));
    worst_alpha = std::max(worst_alpha, std::abs(h[static_cast<std::size_t>(alpha - 1)] - 4.0));
    std::cout << fmt::format("{:>4}  {:>22.17g}  {:>22.17g}  {:>22.17g}  {:>22.17g}  {:>12.3e}\n",
                             i, h[0], h[1], h[2], sum, std::abs(sum - 12.0));
  }
  const bool ok = worst < 1e-6 && worst_alpha < 1e-6;
  std::cout << fmt::format("max |Hbar_{} - 4| = {:.3e}\n", alpha, worst_alpha);
  std::cout << fmt::format("sum check: max |Hbar_1 + Hbar_2 + Hbar_3 - 12| = {:.3e}  {}\n", worst,
                           ok ? "PASS" : "FAIL");
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identity verifier for the canonical 3-Sasakian sphere"};
  app.require_subcommand(1);

  hkc::harness::RunConfig cfg;
  std::string scheme = "exact", suites = "all", out, format = "json";
  double fd_step = 1e-4;
  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a report");
  verify->add_option("--n", cfg.n, "Quaternionic dimension (sphere S^{4n+3})")->check(CLI::Range(0, 7));
  verify->add_option("--points", cfg.points, "Sample points per identity")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Sampling seed (HKC_SEED overrides)");
  verify->add_option("--tol-first", cfg.tol_first, "Tolerance for first-derivative identities");
  verify->add_option("--tol-second", cfg.tol_second, "Tolerance for second-derivative identities");
  verify->add_option("--scheme", scheme, "Differentiation scheme")
      ->check(CLI::IsMember({"exact", "fd"}));
  verify->add_option("--fd-step", fd_step, "Central difference step for --scheme fd");
  verify->add_option("--suites", suites, "Comma-separated suites or 'all'");
  verify->add_option("--out", out, "Write the report to this file");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--debug-flip-i2", cfg.debug_flip_i2, "Negate I_2 (failure injection)")
      ->group("");

  int cn = 1, alpha = 1;
  std::uint64_t cseed = 1;
  std::size_t cpoints = 10;
  auto* curv = app.add_subcommand("curvature", "Print the holomorphic sectional table");
  curv->add_option("--n", cn, "Quaternionic dimension")->required();
  curv->add_option("--seed", cseed, "Sampling seed (HKC_SEED overrides)")->required();
  curv->add_option("--alpha", alpha, "Structure index 1..3")->required();
  curv->add_option("--points", cpoints, "Rows in the table")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*verify) return run_verify(cfg, scheme, fd_step, suites, out, format);
    return run_curvature(cn, cseed, alpha, cpoints);
  } catch (const hkc::StructuralError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
