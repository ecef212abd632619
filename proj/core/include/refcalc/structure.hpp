#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "refcalc/matrix.hpp"

namespace refcalc {

/// Cubic array of scalars, t(i, j, k) with all three extents equal to n.
class Tensor3 {
 public:
  Tensor3(Field field, std::size_t n) : n_(n), data_(n * n * n, field.zero()) {}

  std::size_t extent() const noexcept { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_;
  std::vector<Scalar> data_;
};

/// Finite-dimensional algebra: e_i * e_j = sum_k mult(i, j, k) e_k, unit = sum_i unit[i] e_i.
/// The laws are not assumed; see check_axioms.
struct FdAlgebra {
  Field field;
  std::vector<std::string> labels;
  Tensor3 mult;
  Vector unit;

  std::size_t dim() const noexcept { return labels.size(); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const;
  void validate_shape() const;
  bool is_commutative() const;
};

/// Finite-dimensional coalgebra: Delta e_k = sum_{i,j} comult(k, i, j) e_i (x) e_j.
/// Tensors of two vectors are flattened as index i * dim + j.
struct FdCoalgebra {
  Field field;
  std::vector<std::string> labels;
  Tensor3 comult;
  Vector counit;

  std::size_t dim() const noexcept { return labels.size(); }
  Vector comultiply(const Vector& v) const;
  Scalar apply_counit(const Vector& v) const;
  void validate_shape() const;
  bool is_cocommutative() const;
};

struct FdBialgebra {
  FdAlgebra algebra;
  FdCoalgebra coalgebra;

  std::size_t dim() const noexcept { return algebra.dim(); }
  const Field& field() const noexcept { return algebra.field; }
  void validate_shape() const;
};

}  // namespace refcalc
