#include "ellgenus/matrix.hpp"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ellgenus {

using Rational = boost::multiprecision::cpp_rational;

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) fail(ErrorKind::PreconditionFailed, "matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) fail(ErrorKind::PreconditionFailed, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Int> v) {
  if (v.size() != rows_) fail(ErrorKind::PreconditionFailed, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<std::vector<Int>> Matrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix s(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::PreconditionFailed, "matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) add_mul(p(i, j), aik, b(k, j));
    }
  return p;
}

Vector operator*(const Matrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) fail(ErrorKind::PreconditionFailed, "matrix-vector shape mismatch");
  Vector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) add_mul(out[i], a(i, k), v[k]);
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = neg(a(r, c));
  return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return m;
}

BigInt determinant(const Matrix& m) {
  if (!m.square()) fail(ErrorKind::PreconditionFailed, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int determinant_sign(const Matrix& m) {
  BigInt d = determinant(m);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool positive_definite(const Matrix& symmetric) {
  if (!symmetric.square()) return false;
  for (std::size_t k = 1; k <= symmetric.rows(); ++k)
    if (determinant(symmetric.submatrix(0, 0, k, k)) <= 0) return false;
  return true;
}

Matrix inverse_unimodular(const Matrix& m) {
  BigInt det = determinant(m);
  if (det != 1 && det != -1) fail(ErrorKind::PreconditionFailed, "matrix is not unimodular");
  const std::size_t n = m.rows();
  const Int s = det == 1 ? 1 : -1;
  Matrix inv(n, n);
  // inv(j, i) = cofactor(i, j) / det
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      BigInt cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv(j, i) = mul(s, static_cast<Int>(cof));
    }
  }
  return inv;
}

Signature signature(const Matrix& symmetric) {
  if (!symmetric.square()) fail(ErrorKind::PreconditionFailed, "signature of a non-square matrix");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = symmetric(r, c);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      // Every remaining diagonal entry vanishes; use a congruence
      // e_i <- e_i + e_j on some non-zero off-diagonal entry.
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { bi = i; bj = j; break; }
      if (bi == n) {
        sig.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[bi][c] += a[bj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][bi] += a[r][bj];
      piv = bi;
    }
    if (piv != k) swap_index(piv, k);
    const Rational p = a[k][k];
    (p > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / p;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return sig;
}

}  // namespace ellgenus
