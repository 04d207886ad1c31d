#pragma once

#include <cmath>
#include <concepts>

namespace hkc::numlin {

/// Forward-mode dual number a + b·ε with ε² = 0.
///
/// Nesting (Dual<Dual<double>>) yields exact mixed second derivatives; each
/// level carries one independent infinitesimal. Arithmetic operators are
/// hidden friends so plain doubles convert implicitly at every nesting depth.
template <class T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(double r) : v(r), d(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(const T& r)                  // NOLINT(google-explicit-constructor)
    requires(!std::same_as<T, double>)
      : v(r), d(0.0) {}
  constexpr Dual(const T& r, const T& e) : v(r), d(e) {}

  friend constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend constexpr Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(1.0) / b.v;
    return {a.v * inv, (a.d - a.v * inv * b.d) * inv};
  }
  constexpr Dual& operator+=(const Dual& o) { return *this = *this + o; }
  constexpr Dual& operator-=(const Dual& o) { return *this = *this - o; }
  constexpr Dual& operator*=(const Dual& o) { return *this = *this * o; }
};

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

/// Strips every infinitesimal part.
constexpr double primal(double x) { return x; }
template <class T>
constexpr double primal(const Dual<T>& x) {
  return primal(x.v);
}

/// True when every component at every nesting level is finite.
inline bool all_finite(double x) { return std::isfinite(x); }
template <class T>
bool all_finite(const Dual<T>& x) {
  return all_finite(x.v) && all_finite(x.d);
}

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  const T r = sqrt(x.v);
  return {r, x.d / (T(2.0) * r)};
}

// Jet levels used by vector fields: each level differentiates once more.
using Jet0 = double;
using Jet1 = Dual<Jet0>;
using Jet2 = Dual<Jet1>;
using Jet3 = Dual<Jet2>;

}  // namespace hkc::numlin
