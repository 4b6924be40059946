#ifndef MAGNUS_MATRIX_HPP
#define MAGNUS_MATRIX_HPP

#include <vector>

#include "magnus/rational.hpp"

namespace magnus {

/// Small dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  /// Gauss-Jordan inverse; throws std::domain_error if singular.
  RationalMatrix inverse() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace magnus

#endif  // MAGNUS_MATRIX_HPP
