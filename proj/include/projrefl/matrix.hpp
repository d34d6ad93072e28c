#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "projrefl/numfield.hpp"

namespace projrefl {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw PreconditionError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0L));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_, T(0L));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0L)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using AlgMatrix = Matrix<AlgNumber>;

/// Lexicographic order on entry representations (for exact-keyed containers).
struct MatrixStructuralLess {
  bool operator()(const AlgMatrix& a, const AlgMatrix& b) const;
};

AlgNumber trace(const AlgMatrix& m);
AlgMatrix power(const AlgMatrix& m, unsigned exponent);

/// Fraction-free (Bareiss) elimination; exact.
AlgNumber determinant(const AlgMatrix& m);

struct RowEchelon {
  AlgMatrix reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};
RowEchelon row_echelon(const AlgMatrix& m);
std::size_t rank(const AlgMatrix& m);

/// Throws DivisionByZero for singular input.
AlgMatrix inverse(const AlgMatrix& m);

}  // namespace projrefl
