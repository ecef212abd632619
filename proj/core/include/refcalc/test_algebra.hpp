#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "refcalc/polynomial.hpp"

namespace refcalc {

/// Probe algebra S = K[t]/(g), g monic of degree 1..4. Elements are Residue scalars.
/// Enumerable iff K is finite; the i-th element has base-|K| digits of i as coefficients,
/// lowest degree first.
class TestAlgebra {
 public:
  TestAlgebra(Field base, Poly modulus, std::string name);

  const Field& base() const noexcept { return ring_->base(); }
  const Poly& modulus() const noexcept { return ring_->modulus(); }
  std::size_t dim() const noexcept { return ring_->degree(); }
  bool enumerable() const noexcept { return base().finite(); }
  // |K|^dim; throws for infinite K.
  std::uint64_t element_count() const;
  const std::string& name() const noexcept { return name_; }
  const std::shared_ptr<const ResidueRing>& ring() const noexcept { return ring_; }

  Scalar element(std::uint64_t index) const;
  Scalar from_coeffs(Vector coeffs) const { return ring_->element(std::move(coeffs)); }
  Scalar embed(const Scalar& k) const { return ring_->embed(k); }
  Scalar zero() const { return ring_->zero(); }
  Scalar one() const { return ring_->one(); }
  Scalar generator() const { return ring_->generator(); }

  bool is_nilpotent(const Scalar& s) const;

 private:
  std::shared_ptr<const ResidueRing> ring_;
  std::string name_;
};

TestAlgebra base_field_algebra(const Field& k);           // K = K[t]/(t)
TestAlgebra dual_numbers(const Field& k);                 // K[e]/(e^2)
TestAlgebra split_idempotent_algebra(const Field& k);     // K[t]/(t^2 - t) = K x K
TestAlgebra quadratic_extension(const Field& k);          // K[t]/(q), q the first irreducible monic quadratic

// F_p, F_p[e], F_p[t]/(t^2-t), F_{p^2}, in that order.
std::vector<TestAlgebra> test_algebra_catalog(const Field& k);

}  // namespace refcalc
