#pragma once

#include <functional>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hkc/errors.hpp"
#include "hkc/numlin/dual.hpp"
#include "hkc/numlin/vec.hpp"
#include "hkc/sphere3s/structure.hpp"

namespace hkc::connections {

using numlin::AmbientVector;
using numlin::Jet0;
using numlin::Jet1;
using numlin::Jet2;
using numlin::Jet3;
using numlin::Vec;
using sphere3s::SpherePoint;
using sphere3s::TangentVector;
using sphere3s::ThreeSasakiStructure;

template <class T>
inline constexpr int jet_level = -1;
template <>
inline constexpr int jet_level<Jet0> = 0;
template <>
inline constexpr int jet_level<Jet1> = 1;
template <>
inline constexpr int jet_level<Jet2> = 2;
template <>
inline constexpr int jet_level<Jet3> = 3;

inline constexpr int kMaxJetLevel = 3;

/// A smooth tangent vector field on the sphere, given as a smooth map on the
/// ambient space whose restriction to S^{4n+3} is tangent.
///
/// Evaluation is available at jet levels 0..max_level(); a field built from
/// derivatives of other fields loses one level per derivative taken. Copies
/// share the immutable evaluators.
class VectorField {
 public:
  /// Wraps a callable generic over Vec<T> for every jet level up to MaxLevel.
  template <int MaxLevel = kMaxJetLevel, class F>
  static VectorField from_generic(F f, std::string label, int max_level = MaxLevel) {
    static_assert(MaxLevel >= 0 && MaxLevel <= kMaxJetLevel);
    auto impl = std::make_shared<Impl>();
    impl->label = std::move(label);
    impl->max_level = std::min(max_level, MaxLevel);
    impl->f0 = [f](const Vec<Jet0>& y) { return f(y); };
    if constexpr (MaxLevel >= 1) impl->f1 = [f](const Vec<Jet1>& y) { return f(y); };
    if constexpr (MaxLevel >= 2) impl->f2 = [f](const Vec<Jet2>& y) { return f(y); };
    if constexpr (MaxLevel >= 3) impl->f3 = [f](const Vec<Jet3>& y) { return f(y); };
    return VectorField(std::move(impl));
  }

  template <class T>
  [[nodiscard]] Vec<T> at(const Vec<T>& y) const {
    constexpr int level = jet_level<T>;
    static_assert(level >= 0, "unsupported scalar type for field evaluation");
    if (level > impl_->max_level) {
      throw StructuralError("vector field '" + impl_->label + "' is not differentiable to order " +
                            std::to_string(level));
    }
    if constexpr (level == 0) return impl_->f0(y);
    if constexpr (level == 1) return impl_->f1(y);
    if constexpr (level == 2) return impl_->f2(y);
    if constexpr (level == 3) return impl_->f3(y);
  }

  /// Value at a point of the sphere; throws NumericError if it is not
  /// tangent within kTangentTolerance.
  [[nodiscard]] TangentVector value(const SpherePoint& x) const;

  [[nodiscard]] int max_level() const { return impl_->max_level; }
  [[nodiscard]] const std::string& label() const { return impl_->label; }

 private:
  struct Impl {
    std::string label;
    int max_level = 0;
    std::function<Vec<Jet0>(const Vec<Jet0>&)> f0;
    std::function<Vec<Jet1>(const Vec<Jet1>&)> f1;
    std::function<Vec<Jet2>(const Vec<Jet2>&)> f2;
    std::function<Vec<Jet3>(const Vec<Jet3>&)> f3;
  };
  explicit VectorField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Smooth scalar coefficient c + <a, y>.
struct AffineScalar {
  double constant = 1.0;
  AmbientVector slope;

  template <class T>
  T at(const Vec<T>& y) const {
    T acc(constant);
    for (std::size_t i = 0; i < slope.size(); ++i) {
      if (slope[i] != 0.0) acc += T(slope[i]) * y[i];
    }
    return acc;
  }
};

// Closed-form field constructors.

/// y -> v - <v, y> y
VectorField extension(const AmbientVector& v);
VectorField extension(const TangentVector& v);
VectorField reeb_field(std::shared_ptr<const ThreeSasakiStructure> s, int alpha);
VectorField phi_of(std::shared_ptr<const ThreeSasakiStructure> s, int alpha, VectorField X);
VectorField project_H_of(std::shared_ptr<const ThreeSasakiStructure> s, VectorField X);
VectorField scaled(AffineScalar c, VectorField X);
VectorField sum(VectorField X, VectorField Y);
VectorField linear_combination(std::vector<std::pair<AffineScalar, VectorField>> terms);

}  // namespace hkc::connections
