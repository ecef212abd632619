#pragma once

#include <string>
#include <string_view>

#include "refcalc/matrix.hpp"

namespace refcalc {

// Univariate polynomials are coefficient vectors, lowest degree first.
// Helpers keep them trimmed (no trailing zeros); the zero polynomial is empty.
using Poly = Vector;

Poly poly_trim(Poly p);
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_pow(const Field& f, const Poly& a, unsigned e);
// Remainder modulo a monic divisor.
Poly poly_mod(const Field& f, const Poly& a, const Poly& monic);
int poly_degree(const Poly& p);
bool poly_is_monic(const Poly& p);

std::string poly_to_string(const Poly& p, char var = 'x');
// Accepts sums of terms like "x^2", "-3x", "1/2*x^3", "7"; whitespace ignored.
Poly parse_polynomial(std::string_view text, const Field& field, char var = 'x');

// Companion matrix of a monic polynomial (last column holds -c_i).
Matrix companion_matrix(const Field& f, const Poly& monic);

}  // namespace refcalc
