#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "refcalc/polynomial.hpp"

namespace refcalc {

/// Bialgebra structure on K[x]: additive (x primitive) or multiplicative (x grouplike).
enum class LinRecStructure { Additive, Multiplicative };
std::string to_string(LinRecStructure s);

/// A functional w on K[x] vanishing on (f): w(x^n) = a_n with
/// a_{n+d} = -sum_{i<d} f_i a_{n+i}, where f = x^d + sum_{i<d} f_i x^i.
struct LinRecFunctional {
  Field field;
  Poly modulus;   // monic, lowest degree first
  Vector init;    // a_0 .. a_{d-1}
  LinRecStructure structure = LinRecStructure::Additive;

  std::size_t degree() const { return init.size(); }
  // a_0 .. a_{count-1}.
  Vector values(std::size_t count) const;
  Scalar value(std::size_t n) const;
  // w((f) x^m) = 0 for m <= n, checked on the generated values.
  bool annihilates_upto(std::size_t n) const;
  std::string to_string() const;
};

/// Throws TypeError when f is not monic or |init| != deg f.
LinRecFunctional linrec_from_recurrence(const Field& k, const Poly& f, Vector init, LinRecStructure structure);

/// Pointwise product (multiplicative) or Hurwitz product (additive), sampled directly
/// from the factors; count values.
Vector product_values(const LinRecFunctional& a, const LinRecFunctional& b, std::size_t count);

/// The product in the dual bialgebra with its minimal annihilator.
/// Throws TypeError on a structure or field mismatch.
LinRecFunctional linrec_product(const LinRecFunctional& a, const LinRecFunctional& b);

/// Smallest monic h (degree <= bound) with sum_i h_i s_{n+i} = 0 for n = 0..bound,
/// searched through Hankel kernels. Needs |s| >= 2 * bound + 1 + bound.
/// Throws TypeError if no relation of degree <= bound exists on the prefix.
Poly minimal_annihilator(const Field& k, const Vector& seq, std::size_t bound);

/// Annihilator of the product from the companion construction: characteristic
/// polynomial of C_f (x) C_g (multiplicative) or C_f (x) 1 + 1 (x) C_g (additive).
Poly companion_product_modulus(const LinRecFunctional& a, const LinRecFunctional& b);

/// "linrec(Fp:5, f=x^2-x-1, init=[0,1], structure=additive)"
LinRecFunctional parse_linrec(std::string_view text);

/// Monic polynomials of degree 1..d over F_p: the truncated quotient family of K[x].
std::vector<Poly> bar_family(const Field& k, std::size_t max_degree);

}  // namespace refcalc
