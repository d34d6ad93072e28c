#include <utility>

#include "projrefl/matrix.hpp"

namespace projrefl {

bool MatrixStructuralLess::operator()(const AlgMatrix& a, const AlgMatrix& b) const {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = AlgNumber::structural_compare(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

AlgNumber trace(const AlgMatrix& m) {
  if (!m.is_square()) throw PreconditionError("trace of a non-square matrix");
  AlgNumber t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

AlgMatrix power(const AlgMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw PreconditionError("power of a non-square matrix");
  AlgMatrix result = AlgMatrix::identity(m.rows());
  AlgMatrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

AlgNumber determinant(const AlgMatrix& input) {
  if (!input.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return AlgNumber(1L);
  AlgMatrix a = input;
  AlgNumber previous(1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return AlgNumber(0L);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      a(i, k) = AlgNumber(0L);
    }
    previous = a(k, k);
  }
  AlgNumber det = a(n - 1, n - 1);
  return negate ? -det : det;
}

RowEchelon row_echelon(const AlgMatrix& m) {
  RowEchelon out{m, {}};
  AlgMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(pivot, j));
    const AlgNumber inv = a(row, col).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const AlgNumber f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const AlgMatrix& m) { return row_echelon(m).rank(); }

AlgMatrix inverse(const AlgMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  AlgMatrix aug(n, 2 * n, AlgNumber(0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = AlgNumber(1L);
  }
  const RowEchelon e = row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("matrix is singular");
  AlgMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  return out;
}

}  // namespace projrefl
