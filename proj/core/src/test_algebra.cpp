#include "refcalc/test_algebra.hpp"

#include "refcalc/errors.hpp"

namespace refcalc {

TestAlgebra::TestAlgebra(Field base, Poly modulus, std::string name)
    : ring_(ResidueRing::make(base, std::move(modulus), name)), name_(std::move(name)) {}

std::uint64_t TestAlgebra::element_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= base().size();
  return count;
}

Scalar TestAlgebra::element(std::uint64_t index) const {
  if (index >= element_count()) throw TypeError("test algebra element index out of range");
  const std::uint64_t q = base().size();
  Vector coeffs;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs.push_back(base().element(index % q));
    index /= q;
  }
  return from_coeffs(std::move(coeffs));
}

bool TestAlgebra::is_nilpotent(const Scalar& s) const {
  // In a ring of K-dimension d, s nilpotent implies s^d = 0.
  Scalar power = s;
  for (std::size_t i = 1; i < dim(); ++i) power *= s;
  return power.is_zero();
}

TestAlgebra base_field_algebra(const Field& k) { return TestAlgebra(k, {k.zero(), k.one()}, k.name()); }

TestAlgebra dual_numbers(const Field& k) { return TestAlgebra(k, {k.zero(), k.zero(), k.one()}, k.name() + "[e]/(e^2)"); }

TestAlgebra split_idempotent_algebra(const Field& k) {
  return TestAlgebra(k, {k.zero(), -k.one(), k.one()}, k.name() + "[t]/(t^2-t)");
}

TestAlgebra quadratic_extension(const Field& k) {
  if (!k.finite()) throw TypeError("quadratic_extension is defined for prime fields only");
  const std::uint64_t p = k.size();
  for (std::uint64_t b = 0; b < p; ++b)
    for (std::uint64_t a = 0; a < p; ++a) {
      // t^2 + a t + b has no root in F_p
      bool has_root = false;
      for (std::uint64_t x = 0; x < p && !has_root; ++x) has_root = (x * x + a * x + b) % p == 0;
      if (!has_root) {
        Poly q{k.from_int(static_cast<std::int64_t>(b)), k.from_int(static_cast<std::int64_t>(a)), k.one()};
        return TestAlgebra(k, q, "F" + std::to_string(p) + "^2[" + poly_to_string(q, 't') + "]");
      }
    }
  throw TypeError("no irreducible quadratic found");
}

std::vector<TestAlgebra> test_algebra_catalog(const Field& k) {
  return {base_field_algebra(k), dual_numbers(k), split_idempotent_algebra(k), quadratic_extension(k)};
}

}  // namespace refcalc
