#include "hkc/curvature/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hkc/errors.hpp"
#include "hkc/numlin/random.hpp"

namespace hkc::curvature {
namespace {

using connections::extension;
using sphere3s::ThreeSasakiStructure;

constexpr double kUnitTol = 1e-10;

void require_horizontal(const ThreeSasakiStructure& s, const TangentVector& X, const char* what) {
  if (!(s.vertical_size(X) <= 1e-10 * std::max(1.0, X.norm()))) {
    throw PreconditionError(std::string(what) + ": argument is not in H (max |η| = " +
                            std::to_string(s.vertical_size(X)) + ")");
  }
}

void require_unit(const TangentVector& X, const char* what) {
  if (!(std::abs(dot(X.vec(), X.vec()) - 1.0) <= kUnitTol)) {
    throw PreconditionError(std::string(what) + ": argument is not a unit vector");
  }
}

std::array<int, 2> others(int alpha) {
  switch (alpha) {
    case 1: return {2, 3};
    case 2: return {3, 1};
    case 3: return {1, 2};
    default: throw StructuralError("structure index out of range: " + std::to_string(alpha));
  }
}

double rbar4(const Geometry& G, const TangentVector& X, const TangentVector& Y,
             const TangentVector& Z, const TangentVector& W) {
  return G.curvature4(ConnectionKind::HConnection, extension(X), extension(Y), extension(Z),
                      extension(W), X.base());
}

}  // namespace

CurvatureSource oracle_source(int curvature_sign) {
  return [curvature_sign](const TangentVector& X, const TangentVector& Y, const TangentVector& Z) {
    return connections::sphere_curvature_oracle(X, Y, Z, curvature_sign);
  };
}

CurvatureSource differential_source(const Geometry& geometry) {
  return [&geometry](const TangentVector& X, const TangentVector& Y, const TangentVector& Z) {
    return geometry.curvature(ConnectionKind::LeviCivita, extension(X), extension(Y), extension(Z),
                              X.base());
  };
}

TangentVector rbar_algebraic(const ThreeSasakiStructure& s, const CurvatureSource& R,
                             const TangentVector& X, const TangentVector& Y,
                             const TangentVector& Z) {
  sphere3s::require_same_base(X, Y, "rbar_algebraic");
  sphere3s::require_same_base(X, Z, "rbar_algebraic");
  const SpherePoint& x = X.base();
  auto eta = [&](int a, const TangentVector& V) { return s.eta(a, V); };
  auto Om = [&](int a, const TangentVector& V, const TangentVector& W) { return s.omega(a, V, W); };
  auto phi = [&](int a, const TangentVector& V) { return s.phi(a, V); };
  auto xi = [&](int a) { return s.reeb(a, x); };
  auto g = [&](const TangentVector& V, const TangentVector& W) { return s.metric(V, W); };

  TangentVector out = R(X, Y, Z);

  for (int a = 1; a <= 3; ++a) {
    out = out - 2.0 * Om(a, Y, X) * phi(a, Z) - Om(a, Z, X) * phi(a, Y) + Om(a, Z, Y) * phi(a, X);
    out = out + eta(a, X) * eta(a, Z) * Y - eta(a, Y) * eta(a, Z) * X;
    out = out + 2.0 * eta(a, Y) * g(X, Z) * xi(a) - 2.0 * eta(a, X) * g(Y, Z) * xi(a);
  }

  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      out = out - eta(a, Z) * eta(b, Y) * phi(b, phi(a, X)) +
            eta(a, Z) * eta(b, X) * phi(b, phi(a, Y));
      out = out + 2.0 * eta(a, Y) * eta(b, X) * phi(b, phi(a, Z)) +
            2.0 * eta(a, Z) * Om(b, X, phi(a, Y)) * xi(b);
      out = out - eta(a, X) * Om(b, Y, phi(a, Z)) * xi(b) +
            eta(a, Y) * Om(b, X, phi(a, Z)) * xi(b);
      out = out + eta(a, Y) * eta(b, phi(a, Z)) * phi(b, X) +
            eta(a, Z) * eta(b, phi(a, Y)) * phi(b, X);
      out = out - eta(a, X) * eta(b, phi(a, Z)) * phi(b, Y) -
            eta(a, Z) * eta(b, phi(a, X)) * phi(b, Y);
    }
  }
  return out;
}

const char* to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::Horizontal: return "horizontal";
    case TripleKind::Mixed: return "mixed";
    case TripleKind::ReebSlot: return "reeb-slot";
  }
  return "?";
}

std::vector<CurvatureSample> cross_check_rbar(const Geometry& geometry, const SampleSpec& samples,
                                              TripleKind kind) {
  const auto& s = geometry.structure();
  const auto R = differential_source(geometry);
  const auto stream = numlin::stable_hash(std::string("cross-check/") + to_string(kind));
  std::vector<CurvatureSample> out;
  out.reserve(samples.points);
  for (std::size_t i = 0; i < samples.points; ++i) {
    numlin::SampleStream rng(samples.seed, stream, i);
    const SpherePoint x = sphere3s::random_point(s.dim(), rng);
    std::vector<TangentVector> args;
    for (int k = 0; k < 3; ++k) {
      TangentVector v = sphere3s::random_tangent(x, rng);
      if (kind == TripleKind::Horizontal) v = s.project_H(v);
      const double r = v.norm();
      args.push_back(r > 0.0 ? (1.0 / r) * v : v);
    }
    if (kind == TripleKind::ReebSlot) {
      args[i % 3] = s.reeb(static_cast<int>((i / 3) % 3) + 1, x);
    }
    TangentVector direct = geometry.curvature(ConnectionKind::HConnection, extension(args[0]),
                                              extension(args[1]), extension(args[2]), x);
    TangentVector algebraic = rbar_algebraic(s, R, args[0], args[1], args[2]);
    const double residual = (direct - algebraic).norm();
    out.push_back({x, std::move(args), std::move(direct), std::move(algebraic), residual});
  }
  return out;
}

namespace {

std::vector<TangentVector> trace_basis(const Geometry& G, const SpherePoint& x,
                                       std::uint64_t seed) {
  const auto& s = G.structure();
  std::vector<TangentVector> basis = s.frame_H(x, seed).vectors;
  for (int a = 1; a <= 3; ++a) basis.push_back(s.reeb(a, x));
  return basis;
}

}  // namespace

double ricci(const Geometry& geometry, ConnectionKind kind, const TangentVector& X,
             const TangentVector& Y, std::uint64_t frame_seed) {
  sphere3s::require_same_base(X, Y, "ricci");
  const auto& s = geometry.structure();
  if (kind == ConnectionKind::HConnection) {
    require_horizontal(s, X, "ricci");
    require_horizontal(s, Y, "ricci");
  }
  const auto fX = extension(X);
  const auto fY = extension(Y);
  double acc = 0.0;
  for (const auto& E : trace_basis(geometry, X.base(), frame_seed)) {
    const auto fE = extension(E);
    acc += geometry.curvature4(kind, fE, fX, fE, fY, X.base());
  }
  return acc;
}

double ricci_bar_algebraic(const Geometry& geometry, const TangentVector& X,
                           const TangentVector& Y, std::uint64_t frame_seed) {
  sphere3s::require_same_base(X, Y, "ricci_bar_algebraic");
  const auto& s = geometry.structure();
  require_horizontal(s, X, "ricci_bar_algebraic");
  require_horizontal(s, Y, "ricci_bar_algebraic");
  const auto R = oracle_source(1);
  double acc = 0.0;
  for (const auto& E : trace_basis(geometry, X.base(), frame_seed)) {
    acc += s.metric(rbar_algebraic(s, R, E, X, Y), E);
  }
  return acc;
}

double sectional(const Geometry& geometry, const TangentVector& X, const TangentVector& Y,
                 int convention) {
  sphere3s::require_same_base(X, Y, "sectional");
  const auto& s = geometry.structure();
  const double gram = s.metric(X, X) * s.metric(Y, Y) - s.metric(X, Y) * s.metric(X, Y);
  if (!(gram > 1e-10)) {
    throw DegenerateInputError("sectional: degenerate plane, Gram determinant " +
                               std::to_string(gram));
  }
  const auto fX = extension(X);
  const auto fY = extension(Y);
  const double r = geometry.curvature4(ConnectionKind::LeviCivita, fX, fY, fX, fY, X.base());
  return (convention >= 0 ? 1.0 : -1.0) * (-r) / gram;
}

double holomorphic_sectional_bar(const Geometry& geometry, int alpha, const TangentVector& X) {
  const auto& s = geometry.structure();
  require_unit(X, "holomorphic_sectional_bar");
  require_horizontal(s, X, "holomorphic_sectional_bar");
  const TangentVector pX = s.phi(alpha, X);
  return rbar4(geometry, X, pX, X, pX);
}

SecRelaResult verify_sec_rela(const Geometry& geometry, int alpha, const TangentVector& X,
                              double tolerance) {
  SecRelaResult res;
  ResidualTracker t("sectional.sec-rela." + std::to_string(alpha), "Theorem (sec rela)", tolerance);
  const auto& s = geometry.structure();
  if (s.n() == 0) {
    res.record = t.record("skipped: H is zero-dimensional");
    res.record.informational = true;
    return res;
  }
  res.k = holomorphic_sectional_bar(geometry, alpha, X);
  const TangentVector pX = s.phi(alpha, X);
  res.sectional = {sectional(geometry, X, pX, +1), sectional(geometry, X, pX, -1)};
  double best = std::abs(res.k - res.sectional[0] - 3.0);
  int conv = +1;
  const double alt = std::abs(res.k - res.sectional[1] - 3.0);
  if (alt < best) {
    best = alt;
    conv = -1;
  }
  t.add(best);
  if (best < tolerance) res.convention = conv;
  res.record = t.record("k=" + std::to_string(res.k) + " convention=" + std::to_string(conv));
  return res;
}

VerificationRecord verify_cor_xxx(const Geometry& geometry, const TangentVector& X,
                                  double tolerance) {
  const auto& s = geometry.structure();
  require_horizontal(s, X, "verify_cor_xxx");
  ResidualTracker t("curvature.cor-xxx", "Corollary (X X1 X2 X3)", tolerance);
  const TangentVector p1 = s.phi(1, X), p2 = s.phi(2, X), p3 = s.phi(3, X);
  const double lhs = rbar4(geometry, X, p1, p2, p3);
  const double rhs = geometry.curvature4(ConnectionKind::LeviCivita, extension(X), extension(p1),
                                         extension(p2), extension(p3), X.base());
  t.add(lhs - rhs);
  return t.record();
}

TheoremSecResult verify_theorem_sec(const Geometry& geometry, int alpha, const TangentVector& X,
                                    double tolerance) {
  const auto& s = geometry.structure();
  require_unit(X, "verify_theorem_sec");
  TheoremSecResult res;
  for (int a = 1; a <= 3; ++a) res.eta[static_cast<std::size_t>(a - 1)] = s.eta(a, X);
  const auto [b, c] = others(alpha);
  const double eb = res.eta[static_cast<std::size_t>(b - 1)];
  const double ec = res.eta[static_cast<std::size_t>(c - 1)];
  const double poly = 3.0 + 4.0 * (eb * ec) * (eb * ec) +
                      6.0 * (eb * eb * eb * eb + ec * ec * ec * ec) - 8.0 * (eb * eb + ec * ec);

  const TangentVector pX = s.phi(alpha, X);
  const double gram = s.metric(X, X) * s.metric(pX, pX) - s.metric(X, pX) * s.metric(X, pX);
  const double k_plus = sectional(geometry, X, pX, +1);  // throws on degenerate planes
  const double kbar_raw = rbar4(geometry, X, pX, X, pX);

  double best = std::numeric_limits<double>::infinity();
  for (int kc : {+1, -1}) {
    for (bool normalized : {false, true}) {
      SecConventionResidual r;
      r.k_convention = kc;
      r.kbar_normalized = normalized;
      r.kbar = normalized ? kbar_raw / gram : kbar_raw;
      r.k = kc > 0 ? k_plus : -k_plus;
      r.predicted = r.k + poly;
      r.residual = std::abs(r.kbar - r.predicted);
      if (r.residual < best) {
        best = r.residual;
        if (r.residual < tolerance) res.passing = res.conventions.size();
      }
      res.conventions.push_back(r);
    }
  }
  ResidualTracker t("theorem-sec." + std::to_string(alpha), "Theorem (sec)", tolerance);
  t.add(best);
  res.record = t.record();
  return res;
}

std::vector<VerificationRecord> verify_symmetries(const Geometry& geometry,
                                                  const SampleSpec& samples, double tolerance) {
  const auto& s = geometry.structure();
  ResidualTracker first("curvature.rbar-first-pair", "Lemma (cur pro), first pair", tolerance);
  ResidualTracker last("curvature.rbar-last-pair", "Lemma (cur pro), last pair", tolerance);
  ResidualTracker cyclic("curvature.rbar-bianchi", "Lemma (cur pro), cyclic sum", tolerance);
  ResidualTracker swap("curvature.rbar-pair-swap", "Eq. (curvature2), pair symmetry", tolerance);
  if (s.n() > 0) {
    const auto stream = numlin::stable_hash("symmetries");
    for (std::size_t i = 0; i < samples.points; ++i) {
      numlin::SampleStream rng(samples.seed, stream, i);
      const SpherePoint x = sphere3s::random_point(s.dim(), rng);
      const TangentVector X = sphere3s::random_unit_H(s, x, rng);
      const TangentVector Y = sphere3s::random_unit_H(s, x, rng);
      const TangentVector Z = sphere3s::random_unit_H(s, x, rng);
      const TangentVector U = sphere3s::random_unit_H(s, x, rng);
      const double xyzu = rbar4(geometry, X, Y, Z, U);
      const double xyuz = rbar4(geometry, X, Y, U, Z);
      first.add(xyzu + rbar4(geometry, Y, X, Z, U));
      last.add(xyzu + xyuz);
      cyclic.add(xyuz + rbar4(geometry, Y, Z, U, X) + rbar4(geometry, Z, X, U, Y));
      swap.add(xyzu - rbar4(geometry, Z, U, X, Y));
    }
  }
  std::vector<VerificationRecord> out{first.record(), last.record(), cyclic.record(),
                                      swap.record()};
  if (s.n() == 0) {
    for (auto& r : out) {
      r.informational = true;
      r.note = "skipped: H is zero-dimensional";
    }
  }
  return out;
}

}  // namespace hkc::curvature
