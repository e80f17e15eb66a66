#include "sqcx/matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <string>

namespace sqcx {

RMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  if (r == 0) throw DimensionError("matrix literal needs at least one row");
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  if (c == 0) throw DimensionError("matrix literal needs at least one column");
  RMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw DimensionError("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

RMatrix identity(Eigen::Index n) { return RMatrix::Identity(n, n); }

RMatrix zeros(Eigen::Index rows, Eigen::Index cols) {
  return RMatrix::Zero(rows, cols);
}

RMatrix ones_column(Eigen::Index n) { return RMatrix::Ones(n, 1); }

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ": inner sizes differ");
  return a * b;
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

bool mat_eq(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

} // namespace sqcx
