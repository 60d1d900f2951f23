#pragma once

#include <stdexcept>
#include <vector>

#include "qito/errors.hpp"
#include "qito/scalar/qscalar.hpp"

namespace qito {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
    return static_cast<std::size_t>(r * cols_ + c);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// An operator V^p -> V^r as the d_r x d_p array of <v^r_n, Q v^p_i>.
using OpMatrix = Matrix<QScalar>;

OpMatrix op_zero(int rows, int cols);
OpMatrix op_identity(int n);
OpMatrix operator+(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator-(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
OpMatrix operator*(const QScalar& s, const OpMatrix& a);
bool is_zero(const OpMatrix& a);

/// P^{pr}_{ij}: v^p_k -> delta_{ik} v^r_j, i.e. a unit at row j, column i.
OpMatrix projector(int dp, int dr, int i, int j);

}  // namespace qito
