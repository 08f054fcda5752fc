#pragma once

#include "symideal/scalar.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace symideal {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

/// Arbitrary-precision integer matrix, row-major.
using IntMatrix = Matrix<BigInt>;
using IntVector = RowVector<BigInt>;

template <typename To, typename From>
Matrix<To> scalar_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = from_big<To>(to_big(m(i, j)));
  return out;
}

template <typename To, typename From>
RowVector<To> scalar_cast(const RowVector<From>& v) {
  RowVector<To> out(v.size());
  for (Index j = 0; j < v.size(); ++j) out(j) = from_big<To>(to_big(v(j)));
  return out;
}

template <typename Scalar>
bool is_zero_row(const RowVector<Scalar>& v) {
  for (Index j = 0; j < v.size(); ++j)
    if (!is_zero(v(j))) return false;
  return true;
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Scalar>
bool equal_matrices(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix identity_matrix(Index k);
IntMatrix diagonal_matrix(const std::vector<BigInt>& diag);
IntMatrix matrix_from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                           Index cols = -1);

/// Plain text form: "rows cols" then the entries, whitespace separated,
/// one matrix row per line.
void write_matrix(std::ostream& os, const IntMatrix& m);
IntMatrix read_matrix(std::istream& is);

}  // namespace symideal
