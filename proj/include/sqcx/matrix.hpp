#pragma once

#include <Eigen/Dense>

#include <initializer_list>

#include "sqcx/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<sqcx::Rational> : GenericNumTraits<sqcx::Rational> {
  typedef sqcx::Rational Real;
  typedef sqcx::Rational NonInteger;
  typedef sqcx::Rational Nested;

  static inline Real epsilon() { return sqcx::Rational(0); }
  static inline Real dummy_precision() { return sqcx::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

} // namespace Eigen

namespace sqcx {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Row-major integer literal builder, e.g. mat({{1, -1, 0}, {0, 0, 2}}).
RMatrix mat(std::initializer_list<std::initializer_list<long long>> rows);

RMatrix identity(Eigen::Index n);
RMatrix zeros(Eigen::Index rows, Eigen::Index cols);
/// The all-ones column vector 1_n as an n-by-1 matrix.
RMatrix ones_column(Eigen::Index n);

/// Dimension-checked exact product; throws DimensionError on mismatch.
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
RMatrix kron(const RMatrix& a, const RMatrix& b);

bool mat_eq(const RMatrix& a, const RMatrix& b);

} // namespace sqcx
