#include "clifford/linalg.hpp"

#include <utility>

#include "clifford/errors.hpp"

namespace clifford {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(lead, j));
    }
    Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (m(lead, j) != 0) m(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(lead, j) != 0) m(r, j) -= factor * m(lead, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

Matrix null_space(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_columns;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_columns.push_back(c);
  }
  Matrix basis(cols, free_columns.size());
  for (std::size_t k = 0; k < free_columns.size(); ++k) {
    std::size_t f = free_columns[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      const Rational& v = e.reduced(r, f);
      if (v != 0) basis(e.pivot_columns[r], k) = -v;
    }
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  RowEchelon e = row_reduce(std::move(augmented));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

Inertia symmetric_inertia(Matrix m) {
  if (!m.is_square()) throw InvalidArgument("inertia of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw InvalidArgument("inertia of a non-symmetric matrix");
    }
  }
  Inertia out;
  Rational factor;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Bring a nonzero diagonal entry to position k, or, failing that,
      // add a row/column with a nonzero off-diagonal coupling.
      std::size_t swap_with = n;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m(j, j) != 0) {
          swap_with = j;
          break;
        }
      }
      if (swap_with != n) {
        for (std::size_t t = 0; t < n; ++t) std::swap(m(k, t), m(swap_with, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(m(t, k), m(t, swap_with));
      } else {
        std::size_t partner = n;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (m(k, j) != 0) {
            partner = j;
            break;
          }
        }
        if (partner == n) {
          ++out.zero;
          continue;
        }
        // Row k += row partner, then column k += column partner; the new
        // diagonal entry is 2 m(k, partner) != 0 because both diagonals vanish.
        for (std::size_t t = 0; t < n; ++t) m(k, t) += m(partner, t);
        for (std::size_t t = 0; t < n; ++t) m(t, k) += m(t, partner);
      }
    }
    const Rational pivot = m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      factor = m(r, k) / pivot;
      for (std::size_t t = k; t < n; ++t) {
        if (m(k, t) != 0) m(r, t) -= factor * m(k, t);
      }
    }
    // The matching column operations only clear row k; the trailing block
    // is already the (symmetric) Schur complement.
    for (std::size_t c = k + 1; c < n; ++c) m(k, c) = 0;
    if (pivot > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
  }
  return out;
}

}  // namespace clifford
