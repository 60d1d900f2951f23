#include "qito/corep/matrix.hpp"

namespace qito {

OpMatrix op_zero(int rows, int cols) { return OpMatrix(rows, cols); }

OpMatrix op_identity(int n) {
  OpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = QScalar(1);
  return m;
}

namespace {
void require_same_shape(const OpMatrix& a, const OpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("operator shape mismatch");
}
}  // namespace

OpMatrix operator+(const OpMatrix& a, const OpMatrix& b) {
  require_same_shape(a, b);
  OpMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

OpMatrix operator-(const OpMatrix& a, const OpMatrix& b) {
  require_same_shape(a, b);
  OpMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("operator composition shape mismatch");
  OpMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

OpMatrix operator*(const QScalar& s, const OpMatrix& a) {
  OpMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

bool is_zero(const OpMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

OpMatrix projector(int dp, int dr, int i, int j) {
  if (i < 0 || i >= dp || j < 0 || j >= dr) throw DomainError("projector index out of range");
  OpMatrix m(dr, dp);
  m(j, i) = QScalar(1);
  return m;
}

}  // namespace qito
