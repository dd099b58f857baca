#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clifford/rational.hpp"

namespace clifford {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                           // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // one per nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Columns form a basis of { x : m x = 0 } (cols() == 0 when trivial).
Matrix null_space(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia of a symmetric matrix by exact congruence
// diagonalization. Throws InvalidArgument for a non-symmetric input.
Inertia symmetric_inertia(Matrix m);

}  // namespace clifford
