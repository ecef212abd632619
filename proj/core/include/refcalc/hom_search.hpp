#pragma once

#include <cstdint>
#include <vector>

#include "refcalc/structure.hpp"
#include "refcalc/test_algebra.hpp"

namespace refcalc {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

// Search-space cap: REFCALC_GUARD_MAX if set to a positive integer, else kDefaultGuard.
std::uint64_t default_guard();

/// All unit-preserving multiplicative K-linear maps A -> S. Each map is a
/// dim(S) x dim(A) matrix over K whose column i holds the coordinates of f(e_i).
/// Order is lexicographic in the images (f(e_0), f(e_1), ...) with S-elements
/// ordered by their enumeration index.
/// Throws GuardExceeded when |S|^dim(A) > guard, TypeError if S is not enumerable,
/// DomainMismatch if A and S have different base fields.
std::vector<Matrix> enumerate_algebra_homs(const FdAlgebra& a, const TestAlgebra& s,
                                           std::uint64_t guard = default_guard());

/// All linear maps B -> B' that are simultaneously algebra and coalgebra morphisms,
/// as dim(B') x dim(B) matrices in the same canonical order.
/// Candidates are scanned column by column, so the guard bounds dim(B) * |K|^dim(B').
std::vector<Matrix> enumerate_bialgebra_homs(const FdBialgebra& b, const FdBialgebra& target,
                                             std::uint64_t guard = default_guard());

// Saturating |base|^exp, capped at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp);

}  // namespace refcalc
