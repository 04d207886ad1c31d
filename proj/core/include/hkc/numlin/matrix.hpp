#pragma once

#include <cstddef>
#include <vector>

#include "hkc/numlin/vec.hpp"

namespace hkc::numlin {

/// Small dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : n_(dim), a_(dim * dim, 0.0) {}

  static Matrix identity(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  [[nodiscard]] Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  /// Largest absolute entry.
  [[nodiscard]] double max_abs() const;

  template <class T>
  [[nodiscard]] Vec<T> apply(const Vec<T>& x) const {
    require_same_dim(n_, x.size(), "Matrix::apply");
    Vec<T> y(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      T acc(0.0);
      for (std::size_t c = 0; c < n_; ++c) {
        const double m = a_[r * n_ + c];
        if (m != 0.0) acc += T(m) * x[c];
      }
      y[r] = acc;
    }
    return y;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

}  // namespace hkc::numlin
