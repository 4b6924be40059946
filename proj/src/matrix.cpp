#include "magnus/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace magnus {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const int n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace magnus
