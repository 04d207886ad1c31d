#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hkc/errors.hpp"
#include "hkc/numlin/dual.hpp"

namespace hkc::numlin {

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw StructuralError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

/// Dense ambient vector over a (possibly dual) scalar type.
template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : c_(dim, T(0.0)) {}
  Vec(std::initializer_list<T> init) : c_(init) {}
  explicit Vec(std::vector<T> coords) : c_(std::move(coords)) {}

  [[nodiscard]] std::size_t size() const { return c_.size(); }
  T& operator[](std::size_t i) { return c_[i]; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] const std::vector<T>& coords() const { return c_; }

  static Vec unit(std::size_t dim, std::size_t i) {
    Vec e(dim);
    e[i] = T(1.0);
    return e;
  }

  Vec& operator+=(const Vec& o) {
    require_same_dim(size(), o.size(), "Vec::operator+=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    require_same_dim(size(), o.size(), "Vec::operator-=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Vec operator*(const T& s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, const T& s) { return a *= s; }

  friend T dot(const Vec& a, const Vec& b) {
    require_same_dim(a.size(), b.size(), "dot");
    T acc(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a.c_[i] * b.c_[i];
    return acc;
  }

 private:
  std::vector<T> c_;
};

using AmbientVector = Vec<double>;

inline double norm(const AmbientVector& v) { return std::sqrt(dot(v, v)); }

inline double max_abs(const AmbientVector& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

/// Lifts a double vector to any jet level (zero infinitesimal parts).
template <class T>
Vec<T> lift(const AmbientVector& v) {
  Vec<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = T(v[i]);
  return out;
}

/// Primal part of every component.
template <class T>
AmbientVector primal(const Vec<T>& v) {
  AmbientVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = primal(v[i]);
  return out;
}

template <class T>
bool all_finite(const Vec<T>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!all_finite(v[i])) return false;
  }
  return true;
}

}  // namespace hkc::numlin
