#include "hkc/numlin/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hkc::numlin {

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a.n_, b.n_, "Matrix::operator*");
  Matrix p(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const double ark = a(r, k);
      if (ark == 0.0) continue;
      for (std::size_t c = 0; c < a.n_; ++c) p(r, c) += ark * b(k, c);
    }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a.n_, b.n_, "Matrix::operator+");
  Matrix s = a;
  for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += b.a_[i];
  return s;
}

Matrix operator-(const Matrix& a) {
  Matrix s = a;
  for (auto& x : s.a_) x = -x;
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace hkc::numlin
