#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellgenus/arith.hpp"

namespace ellgenus {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with checked arithmetic. Matrices act on
/// column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Int>>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Int> v);
  std::vector<std::vector<Int>> to_rows() const;

  Matrix transpose() const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Int> v);
Matrix operator-(const Matrix& a);

/// Place `blocks` along the diagonal.
Matrix block_diagonal(std::span<const Matrix> blocks);

/// Exact determinant (fraction-free Bareiss elimination over cpp_int).
BigInt determinant(const Matrix& m);

/// Sign of the determinant: -1, 0 or +1.
int determinant_sign(const Matrix& m);

/// True iff the symmetric matrix has all leading principal minors positive.
bool positive_definite(const Matrix& symmetric);

/// Inverse of a matrix with determinant +-1 (adjugate formula); throws
/// PreconditionFailed otherwise.
Matrix inverse_unimodular(const Matrix& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric integer matrix via symmetric elimination over the
/// rationals (exact).
Signature signature(const Matrix& symmetric);

}  // namespace ellgenus
