#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hkc/connections/connection.hpp"
#include "hkc/verification.hpp"

namespace hkc::curvature {

using connections::ConnectionKind;
using connections::Geometry;
using connections::VectorField;
using sphere3s::SpherePoint;
using sphere3s::TangentVector;

/// Supplies the Levi-Civita curvature R(X, Y)Z at a point.
using CurvatureSource =
    std::function<TangentVector(const TangentVector&, const TangentVector&, const TangentVector&)>;

/// R from the closed form of the unit sphere.
CurvatureSource oracle_source(int curvature_sign = 1);
/// R from nested differentiation of projection extensions.
CurvatureSource differential_source(const Geometry& geometry);

/// R̄(X, Y)Z expanded in terms of R, Ω, η, φ and ξ, term by term. Sums
/// carrying both indices a and b run over ordered pairs with a != b.
TangentVector rbar_algebraic(const sphere3s::ThreeSasakiStructure& s, const CurvatureSource& R,
                             const TangentVector& X, const TangentVector& Y,
                             const TangentVector& Z);

struct CurvatureSample {
  SpherePoint point;
  std::vector<TangentVector> args;
  TangentVector value_direct;
  TangentVector value_algebraic;
  double residual = 0.0;  // |value_direct - value_algebraic|
};

enum class TripleKind { Horizontal, Mixed, ReebSlot };
const char* to_string(TripleKind kind);

/// Compares curvature(HConnection, ...) with rbar_algebraic (R taken from
/// the differential pipeline) on random triples of the requested kind.
std::vector<CurvatureSample> cross_check_rbar(const Geometry& geometry, const SampleSpec& samples,
                                              TripleKind kind = TripleKind::Mixed);

/// S(X, Y) = Σ_i R(E_i, X, E_i, Y) over a g-orthonormal basis made of a
/// seed-derived H-frame and the three Reeb vectors. For the H-connection
/// both arguments must lie in H.
double ricci(const Geometry& geometry, ConnectionKind kind, const TangentVector& X,
             const TangentVector& Y, std::uint64_t frame_seed = 0);

/// The same trace with R̄ replaced by rbar_algebraic (closed-form R).
double ricci_bar_algebraic(const Geometry& geometry, const TangentVector& X,
                           const TangentVector& Y, std::uint64_t frame_seed = 0);

/// convention * (−R(X, Y, X, Y)) / (g(X,X) g(Y,Y) − g(X,Y)²) for ∇.
double sectional(const Geometry& geometry, const TangentVector& X, const TangentVector& Y,
                 int convention);

/// H̄_a(X) = R̄(X, φ_a X, X, φ_a X) for unit X in H.
double holomorphic_sectional_bar(const Geometry& geometry, int alpha, const TangentVector& X);

struct SecRelaResult {
  VerificationRecord record;
  double k = 0.0;                              // H̄_a(X)
  std::array<double, 2> sectional{0.0, 0.0};   // under conventions +1, -1
  std::optional<int> convention;               // one that satisfies k - K = 3
};

/// H̄_a(X) = k  <=>  K(X, φ_a X) = k − 3, for unit X in H.
SecRelaResult verify_sec_rela(const Geometry& geometry, int alpha, const TangentVector& X,
                              double tolerance = 1e-6);

/// R̄(X, φ1X, φ2X, φ3X) = R(X, φ1X, φ2X, φ3X) for X in H.
VerificationRecord verify_cor_xxx(const Geometry& geometry, const TangentVector& X,
                                  double tolerance = 1e-6);

/// One way of reading the relation between K̄ and K on a φ_a-plane.
struct SecConventionResidual {
  int k_convention = 1;      // sign applied to −R(X,Y,X,Y)/gram
  bool kbar_normalized = false;  // whether K̄ is divided by the Gram determinant
  double kbar = 0.0;
  double k = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
};

struct TheoremSecResult {
  VerificationRecord record;
  std::array<double, 3> eta{0.0, 0.0, 0.0};
  std::vector<SecConventionResidual> conventions;
  std::optional<std::size_t> passing;  // index into conventions
};

/// K̄(Π) = K(Π) + 3 + 4(η^b η^c)² + 6((η^b)⁴ + (η^c)⁴) − 8((η^b)² + (η^c)²)
/// on Π = span{X, φ_a X} for unit X, evaluated under every convention.
TheoremSecResult verify_theorem_sec(const Geometry& geometry, int alpha, const TangentVector& X,
                                    double tolerance = 1e-6);

/// Curvature identities of R̄ on random H-quadruples: antisymmetry in each
/// pair, the cyclic sum and pair exchange.
std::vector<VerificationRecord> verify_symmetries(const Geometry& geometry,
                                                  const SampleSpec& samples,
                                                  double tolerance = 1e-6);

}  // namespace hkc::curvature
