#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/errors.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals. Zero rows are
/// permitted (an empty spanning set); the column count is always
/// positive.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (cols == 0) throw ShapeError("matrix must have at least one column");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational::one();
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  Matrix conjugate_transpose() const {
    if (rows_ == 0) throw ShapeError("conjugate transpose of an empty matrix");
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
  }

  Matrix entrywise_conj() const {
    Matrix out = *this;
    for (auto& e : out.data_) e = e.conj();
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> data_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix add shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sub shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

inline Vector matvec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw ShapeError("matvec dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

struct RrefResult {
  Matrix reduced;              // zero rows removed; may have 0 rows
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form over the Gaussian-rational field.
inline RrefResult rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
    const GaussianRational inv = GaussianRational::one() / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const GaussianRational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced.at(i, j) = m.at(i, j);
  return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

/// Basis of the null space {x : A x = 0}; empty when A is injective.
/// |basis| = cols - rank (rank-nullity).
inline std::vector<Vector> kernel_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = GaussianRational::one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      x[r.pivots[i]] = -r.reduced.at(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Gauss-Jordan inverse of a square matrix.
inline Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = GaussianRational::one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    if (pivot != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(c, j), aug.at(pivot, j));
    const GaussianRational inv = GaussianRational::one() / aug.at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug.at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug.at(i, c).is_zero()) continue;
      const GaussianRational f = aug.at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(c, j);
    }
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

/// (B B^H)^-1 for a matrix with linearly independent rows; the
/// ingredient for projections from non-orthogonal bases.
inline Matrix gram_inverse(const Matrix& b) {
  if (b.rows() == 0) throw ShapeError("gram_inverse of an empty basis");
  try {
    return inverse(matmul(b, b.conjugate_transpose()));
  } catch (const DomainError&) {
    throw DomainError("singular Gram matrix: rows are linearly dependent");
  }
}

/// Kronecker product, row-major convention: the left factor varies
/// slowest, (A kron B)(i*p+k, j*q+l) = A(i,j) B(k,l).
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return out;
}

inline Vector kronecker(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

inline bool is_zero_vector(const Vector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

inline std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_scalar(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace qlogic
