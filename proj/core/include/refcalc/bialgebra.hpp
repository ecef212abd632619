#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refcalc/hom_search.hpp"
#include "refcalc/polynomial.hpp"
#include "refcalc/structure.hpp"
#include "refcalc/test_algebra.hpp"

namespace refcalc {

// ---------------------------------------------------------------------------
// Catalog. A finite abelian group is given by its cyclic orders, e.g. {2, 2}.
// Group elements are enumerated in mixed radix with the first factor fastest.

FdAlgebra polynomial_quotient_algebra(const Field& k, const Poly& monic);  // K[x]/(f), basis x^0..x^{d-1}
FdAlgebra tensor_product(const FdAlgebra& a, const FdAlgebra& b);
FdAlgebra base_field_as_algebra(const Field& k);

FdBialgebra group_algebra(const Field& k, const std::vector<std::uint32_t>& orders);
FdBialgebra function_algebra(const Field& k, const std::vector<std::uint32_t>& orders);
FdBialgebra mu_n(const Field& k, std::uint32_t n);      // K[x]/(x^n - 1), Delta x = x (x) x
FdBialgebra alpha_p(const Field& k);                    // K[x]/(x^p), x primitive; needs char p
FdBialgebra base_field_bialgebra(const Field& k);

std::uint64_t group_order(const std::vector<std::uint32_t>& orders);
std::vector<std::uint32_t> group_element(const std::vector<std::uint32_t>& orders, std::uint64_t index);
std::uint64_t group_index(const std::vector<std::uint32_t>& orders, const std::vector<std::uint32_t>& element);

struct CatalogEntry {
  std::string name;
  FdBialgebra bialgebra;
};
/// K[Z/n] and K^{Z/n} for n <= 6, mu_n for n <= 4, and alpha_p when K = F_p.
std::vector<CatalogEntry> bialgebra_catalog(const Field& k);

// ---------------------------------------------------------------------------
// Axioms

struct LawResult {
  std::string law;
  bool pass = true;
  std::vector<std::size_t> witness;  // basis indices where the law fails
  std::string detail;
};

struct AxiomReport {
  std::vector<LawResult> laws;
  bool all_pass() const;
  const LawResult* first_failure() const;
  std::string to_string() const;
};

/// Laws: assoc, unit.
AxiomReport check_axioms(const FdAlgebra& a);
/// Laws: coassoc, counit.
AxiomReport check_axioms(const FdCoalgebra& c);
/// All of the above plus delta-mult, eps-mult, unit-grouplike.
AxiomReport check_axioms(const FdBialgebra& b);

struct Mutation {
  std::string description;
  FdBialgebra mutated;
};
/// Six single-entry perturbations of the structure constants.
std::vector<Mutation> mutations(const FdBialgebra& b);

// ---------------------------------------------------------------------------
// Duality. Labels gain or lose a trailing '*', so dualizing twice is the identity
// on the nose.

FdCoalgebra dualize(const FdAlgebra& a);
FdAlgebra dualize(const FdCoalgebra& c);
FdBialgebra dualize(const FdBialgebra& b);

bool same_structure(const FdAlgebra& a, const FdAlgebra& b);    // tensors and unit, labels ignored
bool same_structure(const FdCoalgebra& a, const FdCoalgebra& b);
bool same_structure(const FdBialgebra& a, const FdBialgebra& b);
bool identical(const FdBialgebra& a, const FdBialgebra& b);       // including labels

/// Transpose; f : B -> B' becomes f* : B'* -> B*.
Matrix dual_morphism(const Matrix& f);

bool is_algebra_morphism(const Matrix& f, const FdAlgebra& from, const FdAlgebra& to);
bool is_coalgebra_morphism(const Matrix& f, const FdCoalgebra& from, const FdCoalgebra& to);
/// Throws TypeError on a dimension mismatch.
bool is_bialgebra_morphism(const Matrix& f, const FdBialgebra& from, const FdBialgebra& to);

// ---------------------------------------------------------------------------
// Modules and the base-change checks

/// Left A-module on K^d; action[i] is the matrix of e_i.
struct FdModule {
  std::vector<Matrix> action;

  std::size_t dim() const { return action.empty() ? 0 : action.front().rows(); }
  // Throws TypeError unless e_i e_j acts as sum_k m_ijk e_k and the unit acts as 1.
  void validate(const FdAlgebra& a) const;
};

FdModule regular_module(const FdAlgebra& a);
/// Module over K[x]/(f) where x acts by x_action; needs f(x_action) = 0.
FdModule polynomial_module(const FdAlgebra& a, const Matrix& x_action);

struct HomBaseChangeReport {
  std::string algebra;  // S name
  std::size_t base_dim = 0;         // dim_K Hom_A(M, M')
  std::size_t extended_nullity = 0; // dim_K Hom_{A(x)S}(M(x)S, M'(x)S)
  std::size_t expected_nullity = 0; // base_dim * dim S
  bool span_contained = false;      // every f (x) t^i solves the S-system
  std::optional<std::uint64_t> brute_force_count;  // when the search fits the guard
  std::uint64_t expected_count = 0;
  bool criterion_ok = false;        // f is an A-hom iff f (x) 1 is an A(x)S-hom, on probe maps
  bool passed = false;
  std::string detail;
};

std::vector<Matrix> hom_space_basis(const FdAlgebra& a, const FdModule& m, const FdModule& m2);
HomBaseChangeReport hom_base_change_check(const FdAlgebra& a, const FdModule& m, const FdModule& m2,
                                          const TestAlgebra& s, std::uint64_t guard = default_guard());

struct SubmoduleReport {
  bool base_stable = false;
  std::vector<std::pair<std::string, bool>> extended;  // per test algebra; empty when not stable at base
  bool consistent = false;  // base outcome agrees with every extended outcome
  std::string detail;
};

/// W is given by spanning vectors. When W is not stable at the base the
/// extended checks are skipped unless extend_on_failure is set.
SubmoduleReport submodule_stability_check(const FdAlgebra& a, const FdModule& m, const std::vector<Vector>& w,
                                          bool extend_on_failure = false);

}  // namespace refcalc
