#include <gtest/gtest.h>

#include "refcalc/bialgebra.hpp"
#include "refcalc/errors.hpp"
#include "refcalc/rng.hpp"

using namespace refcalc;

namespace {

// Oracle: every linear map B -> B' by exhaustive enumeration of its entries,
// filtered by the two morphism predicates. Only for tiny searches.
std::size_t brute_force_bialgebra_homs(const FdBialgebra& b, const FdBialgebra& c) {
  const Field& k = b.field();
  const std::size_t cells = b.dim() * c.dim();
  const std::uint64_t total = saturating_power(k.size(), cells);
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix f(k, c.dim(), b.dim());
    std::uint64_t rest = code;
    for (std::size_t cell = 0; cell < cells; ++cell, rest /= k.size()) f(cell / b.dim(), cell % b.dim()) = k.element(rest % k.size());
    count += is_algebra_morphism(f, b.algebra, c.algebra) && is_coalgebra_morphism(f, b.coalgebra, c.coalgebra);
  }
  return count;
}

std::uint64_t group_hom_count(const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& h) {
  // Homs from a product of cyclic groups: independent images of the generators.
  std::uint64_t count = 1;
  for (auto o : g) {
    std::uint64_t fit = 0;
    for (std::uint64_t x = 0; x < group_order(h); ++x) {
      const auto d = group_element(h, x);
      bool ok = true;
      for (std::size_t f = 0; f < h.size(); ++f) ok = ok && (o * d[f]) % h[f] == 0;
      fit += ok;
    }
    count *= fit;
  }
  return count;
}

Matrix counit_row(const FdBialgebra& b) {
  Matrix m(b.field(), 1, b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) m(0, j) = b.coalgebra.counit[j];
  return m;
}

}  // namespace

TEST(Axioms, DocumentedExamples) {
  EXPECT_TRUE(check_axioms(group_algebra(Field::rationals(), {2})).all_pass());
  // e1 e1 = e2, e2 e1 = e1, no unit.
  const Field q = Field::rationals();
  FdAlgebra a{q, {"e1", "e2"}, Tensor3(q, 2), {q.zero(), q.zero()}};
  a.mult(0, 0, 1) = q.one();
  a.mult(1, 0, 0) = q.one();
  const AxiomReport rep = check_axioms(a);
  ASSERT_FALSE(rep.all_pass());
  bool unit_failed = false;
  for (const auto& l : rep.laws)
    if (l.law == "unit") {
      unit_failed = !l.pass;
      EXPECT_FALSE(l.witness.empty());
    }
  EXPECT_TRUE(unit_failed);
  EXPECT_TRUE(check_axioms(alpha_p(Field::prime(2))).all_pass());
}

TEST(Axioms, GoldenCatalogPassesAndMutationsFail) {
  for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)})
    for (const auto& e : bialgebra_catalog(k)) {
      EXPECT_TRUE(check_axioms(e.bialgebra).all_pass()) << e.name << "\n" << check_axioms(e.bialgebra).to_string();
      const auto muts = mutations(e.bialgebra);
      EXPECT_GE(muts.size(), 5u);
      for (const auto& m : muts) {
        const LawResult* f = check_axioms(m.mutated).first_failure();
        ASSERT_NE(f, nullptr) << e.name << ": " << m.description;
        EXPECT_FALSE(f->witness.empty()) << e.name << ": " << m.description;
      }
    }
}

TEST(Axioms, CatalogContents) {
  const auto q = bialgebra_catalog(Field::rationals());
  const auto f3 = bialgebra_catalog(Field::prime(3));
  EXPECT_EQ(f3.size(), q.size() + 1);  // alpha_p only over F_p
  EXPECT_THROW(alpha_p(Field::rationals()), TypeError);
}

TEST(Dualize, DocumentedExamples) {
  const Field q = Field::rationals();
  EXPECT_TRUE(same_structure(dualize(function_algebra(q, {2})), group_algebra(q, {2})));
  for (const auto& e : bialgebra_catalog(Field::prime(5))) EXPECT_TRUE(identical(dualize(dualize(e.bialgebra)), e.bialgebra)) << e.name;
  FdCoalgebra trivial{q, {"c"}, Tensor3(q, 1), {q.one()}};
  trivial.comult(0, 0, 0) = q.one();
  const FdAlgebra k = dualize(trivial);
  EXPECT_TRUE(same_structure(k, base_field_as_algebra(q)));
}

TEST(Dualize, PreservesAxiomsAndExchangesFlags) {
  for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (const auto& e : bialgebra_catalog(k)) {
      const FdBialgebra d = dualize(e.bialgebra);
      EXPECT_TRUE(check_axioms(d).all_pass()) << e.name;
      EXPECT_EQ(d.algebra.is_commutative(), e.bialgebra.coalgebra.is_cocommutative()) << e.name;
      EXPECT_EQ(d.coalgebra.is_cocommutative(), e.bialgebra.algebra.is_commutative()) << e.name;
    }
}

TEST(DualMorphism, DocumentedExamples) {
  const Field k = Field::prime(3);
  const Matrix id = Matrix::identity(k, 3);
  EXPECT_EQ(dual_morphism(id), id);
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    Matrix f(k, 3, 2), g(k, 4, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 2; ++c) f(r, c) = k.element(rng.below(3));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) g(r, c) = k.element(rng.below(3));
    EXPECT_EQ(dual_morphism(g * f), dual_morphism(f) * dual_morphism(g));
  }
  // The counit of K[Z/2] transposes to the unit of K^{Z/2}.
  const FdBialgebra kg = group_algebra(k, {2});
  EXPECT_EQ(dual_morphism(counit_row(kg)).column(0), function_algebra(k, {2}).algebra.unit);
}

TEST(BialgebraHoms, DocumentedExamples) {
  const Field f3 = Field::prime(3), f7 = Field::prime(7);
  EXPECT_EQ(enumerate_bialgebra_homs(group_algebra(f3, {2}), group_algebra(f3, {2})).size(), 2u);
  EXPECT_EQ(enumerate_bialgebra_homs(group_algebra(f7, {2}), group_algebra(f7, {3})).size(), 1u);
  for (const auto& e : bialgebra_catalog(Field::prime(2))) {
    const auto homs = enumerate_bialgebra_homs(e.bialgebra, base_field_bialgebra(Field::prime(2)));
    ASSERT_EQ(homs.size(), 1u) << e.name;
    EXPECT_EQ(homs[0], counit_row(e.bialgebra)) << e.name;
  }
}

TEST(BialgebraHoms, AgreeWithExhaustiveLinearMaps) {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const std::vector<FdBialgebra> small = {group_algebra(f2, {2}), function_algebra(f2, {2}), alpha_p(f2), mu_n(f2, 2)};
  for (const auto& b : small)
    for (const auto& c : small) EXPECT_EQ(enumerate_bialgebra_homs(b, c).size(), brute_force_bialgebra_homs(b, c));
  EXPECT_EQ(enumerate_bialgebra_homs(group_algebra(f3, {2}), function_algebra(f3, {2})).size(),
            brute_force_bialgebra_homs(group_algebra(f3, {2}), function_algebra(f3, {2})));
}

TEST(BialgebraHoms, CountGroupHomsOverF7) {
  const Field f7 = Field::prime(7);
  const std::vector<std::vector<std::uint32_t>> groups = {{1}, {2}, {3}, {4}, {2, 2}};
  for (const auto& g : groups)
    for (const auto& h : groups) {
      const auto homs = enumerate_bialgebra_homs(group_algebra(f7, g), group_algebra(f7, h));
      EXPECT_EQ(homs.size(), group_hom_count(g, h)) << group_order(g) << " -> " << group_order(h);
      for (const auto& f : homs) EXPECT_TRUE(is_bialgebra_morphism(dual_morphism(f), dualize(group_algebra(f7, h)), dualize(group_algebra(f7, g))));
    }
}

TEST(BialgebraHoms, GuardExceeded) {
  EXPECT_THROW(enumerate_bialgebra_homs(group_algebra(Field::prime(7), {6}), group_algebra(Field::prime(7), {6}), 1000),
               GuardExceeded);
  EXPECT_THROW(is_bialgebra_morphism(Matrix::identity(Field::prime(2), 3), group_algebra(Field::prime(2), {2}),
                                     group_algebra(Field::prime(2), {2})),
               TypeError);
}

TEST(Grouplike, GroupAlgebraBasis) {
  for (const Field& k : {Field::rationals(), Field::prime(5)}) {
    const FdBialgebra b = group_algebra(k, {2, 2});
    const std::size_t n = b.dim();
    for (std::size_t g = 0; g < n; ++g) {
      Vector gg(n * n, k.zero());
      gg[g * n + g] = k.one();
      EXPECT_EQ(b.coalgebra.comultiply(b.algebra.basis_vector(g)), gg);
      EXPECT_TRUE(b.coalgebra.apply_counit(b.algebra.basis_vector(g)).is_one());
    }
  }
}

TEST(HomBaseChange, DocumentedExamples) {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const FdAlgebra a = group_algebra(f2, {2}).algebra;
  const auto r1 = hom_base_change_check(a, regular_module(a), regular_module(a), dual_numbers(f2));
  EXPECT_TRUE(r1.passed) << r1.detail;
  EXPECT_EQ(r1.base_dim, 2u);
  EXPECT_EQ(r1.extended_nullity, 4u);

  const FdAlgebra k = base_field_as_algebra(f3);
  const FdModule m{{Matrix::identity(f3, 2)}};
  const auto r2 = hom_base_change_check(k, m, m, split_idempotent_algebra(f3));
  EXPECT_TRUE(r2.passed) << r2.detail;
  EXPECT_EQ(r2.base_dim, 4u);  // all linear maps

  const FdAlgebra d = polynomial_quotient_algebra(f3, parse_polynomial("x^2", f3));
  const auto r3 = hom_base_change_check(d, regular_module(d), polynomial_module(d, Matrix(f3, 1, 1)), quadratic_extension(f3));
  EXPECT_TRUE(r3.passed) << r3.detail;
  EXPECT_EQ(r3.base_dim, 1u);
  EXPECT_EQ(r3.extended_nullity, 2u);
}

TEST(HomBaseChange, BruteForceCountMatches) {
  const Field f2 = Field::prime(2);
  const FdAlgebra a = polynomial_quotient_algebra(f2, parse_polynomial("x^2", f2));
  const auto rep = hom_base_change_check(a, regular_module(a), regular_module(a), base_field_algebra(f2));
  ASSERT_TRUE(rep.brute_force_count.has_value());
  EXPECT_EQ(*rep.brute_force_count, rep.expected_count);
  EXPECT_EQ(rep.expected_count, 4u);  // |End_A(A)| = |A| = 4
}

TEST(Modules, ValidationRejectsBadActions) {
  const Field f2 = Field::prime(2);
  const FdAlgebra a = polynomial_quotient_algebra(f2, parse_polynomial("x^2", f2));
  EXPECT_THROW(polynomial_module(a, Matrix::identity(f2, 2)), TypeError);  // x^2 = 1, not 0
}

TEST(Submodules, DocumentedExamples) {
  const Field f2 = Field::prime(2);
  const FdAlgebra a = polynomial_quotient_algebra(f2, parse_polynomial("x^2", f2));
  const FdModule m = regular_module(a);
  const auto x_span = submodule_stability_check(a, m, {{f2.zero(), f2.one()}});
  EXPECT_TRUE(x_span.base_stable);
  EXPECT_EQ(x_span.extended.size(), 4u);
  for (const auto& [name, ok] : x_span.extended) EXPECT_TRUE(ok) << name;
  const auto one_span = submodule_stability_check(a, m, {{f2.one(), f2.zero()}});
  EXPECT_FALSE(one_span.base_stable);
  EXPECT_TRUE(one_span.extended.empty());
  const auto zero = submodule_stability_check(a, m, {});
  EXPECT_TRUE(zero.base_stable);
  EXPECT_TRUE(zero.consistent);
}
