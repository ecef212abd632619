#include "refcalc/structure.hpp"

#include "refcalc/errors.hpp"

namespace refcalc {

namespace {

void check_field(const Field& f, const Scalar& s, const char* what) {
  if (!f.contains(s)) throw DomainMismatch(std::string(what) + " entry " + s.to_string() + " is not in " + f.name());
}

}  // namespace

Vector FdAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector out(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!mult(i, j, k).is_zero()) out[k] += c * mult(i, j, k);
    }
  }
  return out;
}

Vector FdAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim(), field.zero());
  v.at(i) = field.one();
  return v;
}

void FdAlgebra::validate_shape() const {
  const std::size_t n = dim();
  if (mult.extent() != n) throw TypeError("multiplication tensor extent does not match dimension " + std::to_string(n));
  if (unit.size() != n) throw TypeError("unit vector length does not match dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    check_field(field, unit[i], "unit");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) check_field(field, mult(i, j, k), "mult");
  }
}

bool FdAlgebra::is_commutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mult(i, j, k) != mult(j, i, k)) return false;
  return true;
}

Vector FdCoalgebra::comultiply(const Vector& v) const {
  const std::size_t n = dim();
  Vector out(n * n, field.zero());
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!comult(k, i, j).is_zero()) out[i * n + j] += v[k] * comult(k, i, j);
  }
  return out;
}

Scalar FdCoalgebra::apply_counit(const Vector& v) const {
  Scalar s = field.zero();
  for (std::size_t k = 0; k < dim(); ++k)
    if (!v[k].is_zero()) s += v[k] * counit[k];
  return s;
}

void FdCoalgebra::validate_shape() const {
  const std::size_t n = dim();
  if (comult.extent() != n) throw TypeError("comultiplication tensor extent does not match dimension " + std::to_string(n));
  if (counit.size() != n) throw TypeError("counit length does not match dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    check_field(field, counit[i], "counit");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) check_field(field, comult(i, j, k), "comult");
  }
}

bool FdCoalgebra::is_cocommutative() const {
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (comult(k, i, j) != comult(k, j, i)) return false;
  return true;
}

void FdBialgebra::validate_shape() const {
  algebra.validate_shape();
  coalgebra.validate_shape();
  if (algebra.dim() != coalgebra.dim()) throw TypeError("algebra and coalgebra dimensions differ");
  if (!(algebra.field == coalgebra.field)) throw DomainMismatch("algebra and coalgebra fields differ");
}

}  // namespace refcalc
