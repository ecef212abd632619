#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refcalc/bialgebra.hpp"

namespace refcalc {

/// Inverse system A_1 <- A_2 <- ... of finite-dimensional algebras.
/// transitions[n] : levels[n+1] -> levels[n] is a dim(A_n) x dim(A_{n+1}) matrix.
struct AlgebraTower {
  std::vector<FdAlgebra> levels;
  std::vector<Matrix> transitions;

  std::size_t depth() const noexcept { return levels.size(); }
  const FdAlgebra& top() const { return levels.back(); }
  // Throws TypeError unless every transition is a surjective algebra morphism.
  void validate() const;
  // Composite A_top -> A_n.
  Matrix to_level(std::size_t n) const;
  AlgebraTower prefix(std::size_t depth) const;
};

inline constexpr std::size_t kMaxTowerDimension = 32;

/// K[x]/(f), K[x]/(f^2), ..., K[x]/(f^n) with the quotient maps.
/// Throws TypeError unless deg(f) * depth <= 32 and depth >= 1.
AlgebraTower adic_tower(const Field& k, const Poly& f, std::size_t depth);

/// Hom_alg(A, S), as dim S x dim A matrices in canonical order.
std::vector<Matrix> spec_points(const FdAlgebra& a, const TestAlgebra& s, std::uint64_t guard = default_guard());
/// Union over the levels of Hom_alg(A_n, S), each pulled back to the top level
/// and deduplicated: the direct limit of the finite schemes. Sorted.
std::vector<Matrix> spec_points(const AlgebraTower& t, const TestAlgebra& s, std::uint64_t guard = default_guard());

/// Compares spec_points of the depth-(n-1) prefix, pulled back through the last
/// transition, with spec_points of the full tower.
bool depth_stable(const AlgebraTower& t, const TestAlgebra& s, std::uint64_t guard = default_guard());

/// The S-element a point assigns to basis vector i of its source.
Scalar point_value(const Matrix& point, const TestAlgebra& s, std::size_t i);

/// The transpose coalgebra on the dual basis.
FdCoalgebra finite_dual(const FdAlgebra& a);

struct CartierReport {
  std::string group;
  std::string algebra;
  bool dual_matches = false;     // dualize(K[G]) has the structure constants of K^G
  std::size_t points = 0;        // |Spec(dualize(K^G))(S)|
  std::size_t brute_points = 0;  // |Hom_monoid(G, (S, *))|
  bool points_match = false;
  bool product_matches = false;  // convolution of points is the pointwise product
  bool double_dual = false;      // (K[G])** == K[G] including labels
  bool passed = false;
  std::string detail;
};

/// Throws GuardExceeded when the point search does not fit the guard.
CartierReport cartier_check(const std::vector<std::uint32_t>& orders, const Field& k, const TestAlgebra& s,
                            std::uint64_t guard = default_guard());

std::string group_name(const std::vector<std::uint32_t>& orders);

}  // namespace refcalc
