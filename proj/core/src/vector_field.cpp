#include "hkc/connections/vector_field.hpp"

#include <algorithm>
#include <cmath>

namespace hkc::connections {

TangentVector VectorField::value(const SpherePoint& x) const {
  const AmbientVector v = at(x.coords());
  if (!numlin::all_finite(v)) throw NumericError("vector field '" + label() + "': non-finite value");
  const double c = dot(v, x.coords());
  if (!(std::abs(c) <= sphere3s::kTangentTolerance * std::max(1.0, numlin::norm(v)))) {
    throw NumericError("vector field '" + label() + "' is not tangent: <X, x> = " +
                       std::to_string(c));
  }
  return TangentVector::project(x, v);
}

VectorField extension(const AmbientVector& v) {
  return VectorField::from_generic(
      [v](const auto& y) { return sphere3s::projection_extension(v, y); }, "extension");
}

VectorField extension(const TangentVector& v) { return extension(v.vec()); }

VectorField reeb_field(std::shared_ptr<const ThreeSasakiStructure> s, int alpha) {
  if (alpha < 1 || alpha > 3) throw StructuralError("Reeb index out of range");
  return VectorField::from_generic([s, alpha](const auto& y) { return s->reeb_at(alpha, y); },
                                   "xi" + std::to_string(alpha));
}

VectorField phi_of(std::shared_ptr<const ThreeSasakiStructure> s, int alpha, VectorField X) {
  if (alpha < 1 || alpha > 3) throw StructuralError("phi index out of range");
  const int level = X.max_level();
  std::string label = "phi" + std::to_string(alpha) + "(" + X.label() + ")";
  return VectorField::from_generic(
      [s, alpha, X = std::move(X)](const auto& y) { return s->phi_at(alpha, y, X.at(y)); },
      std::move(label), level);
}

VectorField project_H_of(std::shared_ptr<const ThreeSasakiStructure> s, VectorField X) {
  const int level = X.max_level();
  std::string label = "H(" + X.label() + ")";
  return VectorField::from_generic(
      [s, X = std::move(X)](const auto& y) { return s->project_H_at(y, X.at(y)); },
      std::move(label), level);
}

VectorField scaled(AffineScalar c, VectorField X) {
  const int level = X.max_level();
  std::string label = "c*" + X.label();
  return VectorField::from_generic(
      [c = std::move(c), X = std::move(X)](const auto& y) { return c.at(y) * X.at(y); },
      std::move(label), level);
}

VectorField sum(VectorField X, VectorField Y) {
  const int level = std::min(X.max_level(), Y.max_level());
  std::string label = X.label() + "+" + Y.label();
  return VectorField::from_generic(
      [X = std::move(X), Y = std::move(Y)](const auto& y) { return X.at(y) + Y.at(y); },
      std::move(label), level);
}

VectorField linear_combination(std::vector<std::pair<AffineScalar, VectorField>> terms) {
  if (terms.empty()) throw StructuralError("linear_combination: no terms");
  int level = kMaxJetLevel;
  for (const auto& t : terms) level = std::min(level, t.second.max_level());
  return VectorField::from_generic(
      [terms = std::move(terms)](const auto& y) {
        auto acc = terms.front().first.at(y) * terms.front().second.at(y);
        for (std::size_t i = 1; i < terms.size(); ++i) {
          acc += terms[i].first.at(y) * terms[i].second.at(y);
        }
        return acc;
      },
      "lincomb", level);
}

}  // namespace hkc::connections
