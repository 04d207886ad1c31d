#pragma once

#include <string>
#include <utility>

#include "hkc/errors.hpp"
#include "hkc/numlin/dual.hpp"
#include "hkc/numlin/vec.hpp"

namespace hkc::numlin {

/// How directional derivatives are taken.
struct DiffScheme {
  enum class Kind { ExactForward, CentralDifference };

  Kind kind = Kind::ExactForward;
  double step = 1e-5;  // central difference only

  static DiffScheme exact() { return {Kind::ExactForward, 0.0}; }
  static DiffScheme central(double h);

  [[nodiscard]] bool is_exact() const { return kind == Kind::ExactForward; }
  [[nodiscard]] std::string name() const { return is_exact() ? "exact" : "fd"; }
};

inline DiffScheme DiffScheme::central(double h) {
  if (!(h > 0.0)) throw StructuralError("central-difference step must be positive");
  return {Kind::CentralDifference, h};
}

/// D_v f(x) for a map f that is generic over the scalar type.
///
/// `f` must accept Vec<T> and, for the exact scheme, Vec<Dual<T>>. Because
/// the result at level T only uses f at level Dual<T>, the result is itself
/// differentiable by this same function at the next level down.
template <class T, class F>
Vec<T> directional_derivative(F&& f, const Vec<T>& x, const Vec<T>& v, const DiffScheme& scheme) {
  require_same_dim(x.size(), v.size(), "directional_derivative");
  Vec<T> out;
  if (scheme.is_exact()) {
    Vec<Dual<T>> seeded(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) seeded[i] = Dual<T>(x[i], v[i]);
    const Vec<Dual<T>> fx = std::forward<F>(f)(seeded);
    out = Vec<T>(fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) out[i] = fx[i].d;
  } else {
    if (!(scheme.step > 0.0)) throw StructuralError("central-difference step must be positive");
    const T h(scheme.step);
    const Vec<T> fp = f(x + h * v);
    const Vec<T> fm = f(x - h * v);
    out = (T(0.5 / scheme.step)) * (fp - fm);
  }
  if (!all_finite(out)) {
    throw NumericError("directional_derivative: non-finite derivative (dim " +
                       std::to_string(out.size()) + ")");
  }
  return out;
}

}  // namespace hkc::numlin
