#pragma once

#include <cstddef>
#include <vector>

#include "refcalc/scalar.hpp"

namespace refcalc {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars over a base field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  // Lexicographic on (rows, cols, entries as strings); used for canonical orderings.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; the pivot is the first nonzero entry in each column.
// Throws DomainMismatch if an entry is not in the matrix's field.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of the right null space, one vector per free column, in column order.
// Empty iff the matrix is injective.
std::vector<Vector> kernel_basis(const Matrix& m);

// Characteristic polynomial det(xI - m), lowest degree first, monic.
Vector characteristic_polynomial(const Matrix& m);

}  // namespace refcalc
