#include <gtest/gtest.h>

#include "refcalc/bialgebra.hpp"
#include "refcalc/errors.hpp"
#include "refcalc/hom_search.hpp"
#include "refcalc/linrec.hpp"
#include "refcalc/matrix.hpp"
#include "refcalc/rng.hpp"
#include "refcalc/test_algebra.hpp"

using namespace refcalc;

namespace {

bool proportional(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

Matrix random_matrix(Rng& rng, const Field& k, std::size_t r, std::size_t c) {
  Matrix m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = k.finite() ? k.element(rng.below(k.size())) : k.from_int(rng.range(-2, 2));
  return m;
}

}  // namespace

TEST(Scalar, RationalsAreExact) {
  const Field q = Field::rationals();
  const Scalar third = q.parse_scalar("1/3");
  EXPECT_EQ(third + third + third, q.one());
  EXPECT_EQ((q.from_int(2) / q.from_int(6)).to_string(), "1/3");
  EXPECT_EQ(q.parse_scalar("-4/6").to_string(), "-2/3");
}

TEST(Scalar, PrimeFieldAxiomsSpotCheck) {
  for (std::uint32_t p : {2u, 3u, 5u, 97u}) {
    const Field k = Field::prime(p);
    for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 12); ++a) {
      const Scalar x = k.element(a);
      EXPECT_EQ(x + x.zero_like(), x);
      EXPECT_EQ(x * k.one(), x);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), k.one());
      EXPECT_EQ(x * k.from_int(p), k.zero());
    }
  }
}

TEST(Scalar, MixedDomainsThrow) {
  EXPECT_THROW(Field::prime(3).one() + Field::prime(5).one(), DomainMismatch);
  EXPECT_THROW(Field::rationals().one() * Field::prime(2).one(), DomainMismatch);
  EXPECT_THROW(Field::prime(101), Error);
}

TEST(Scalar, ResidueReducesModuloModulus) {
  const Field f2 = Field::prime(2);
  const TestAlgebra dual = dual_numbers(f2);
  const Scalar e = dual.generator();
  EXPECT_TRUE((e * e).is_zero());
  const TestAlgebra ext = quadratic_extension(Field::prime(3));
  EXPECT_EQ(ext.element_count(), 9u);
  // A field: every nonzero element has an inverse.
  for (std::uint64_t i = 1; i < 9; ++i) {
    int inverses = 0;
    for (std::uint64_t j = 0; j < 9; ++j) inverses += ext.element(i) * ext.element(j) == ext.one();
    EXPECT_EQ(inverses, 1) << ext.element(i).to_string();
  }
  EXPECT_THROW(e.inverse(), Error);
}

TEST(KernelBasis, DocumentedExamples) {
  const Field q = Field::rationals();
  const auto k1 = kernel_basis(Matrix::from_ints(q, {{1, 1}, {1, 1}}));
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_TRUE(proportional(k1[0], {q.from_int(1), q.from_int(-1)}));

  const Field f2 = Field::prime(2);
  const auto k2 = kernel_basis(Matrix::from_ints(f2, {{1, 1}}));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (Vector{f2.one(), f2.one()}));

  EXPECT_TRUE(kernel_basis(Matrix::identity(q, 3)).empty());
}

TEST(KernelBasis, PowersOfTwoHaveAnnihilatorXMinus2) {
  const Field q = Field::rationals();
  Vector seq;
  for (int n = 0, v = 1; n <= 6; ++n, v *= 2) seq.push_back(q.from_int(v));
  // Brute-force oracle: the only monic degree-1 relation is s_{n+1} = 2 s_n.
  const Poly h = minimal_annihilator(q, seq, 2);
  EXPECT_EQ(h, (Poly{q.from_int(-2), q.one()}));
}

TEST(KernelBasis, RankNullityAndAnnihilationOnRandomMatrices) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Field k = t % 2 ? Field::prime(3) : Field::rationals();
    const Matrix m = random_matrix(rng, k, rng.range(1, 4), rng.range(1, 5));
    const auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), m.cols());
    for (const auto& v : basis)
      for (const auto& s : m.apply(v)) EXPECT_TRUE(s.is_zero());
  }
}

TEST(KernelBasis, MixedEntriesThrow) {
  Matrix m(Field::rationals(), 1, 2);
  m(0, 1) = Field::prime(5).one();
  EXPECT_THROW(kernel_basis(m), DomainMismatch);
}

TEST(AlgebraHoms, DocumentedExamples) {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const auto h1 = enumerate_algebra_homs(polynomial_quotient_algebra(f2, parse_polynomial("x^2", f2)), dual_numbers(f2));
  ASSERT_EQ(h1.size(), 2u);
  const auto h2 = enumerate_algebra_homs(polynomial_quotient_algebra(f3, parse_polynomial("x^2-1", f3)),
                                         base_field_algebra(f3));
  ASSERT_EQ(h2.size(), 2u);
  EXPECT_EQ(h2[0](0, 1), f3.from_int(1));
  EXPECT_EQ(h2[1](0, 1), f3.from_int(2));
  for (const auto& s : test_algebra_catalog(Field::prime(5)))
    EXPECT_EQ(enumerate_algebra_homs(base_field_as_algebra(Field::prime(5)), s).size(), 1u) << s.name();
}

TEST(AlgebraHoms, GuardAndDomainErrors) {
  const Field f5 = Field::prime(5);
  const FdAlgebra a = group_algebra(f5, {6}).algebra;
  EXPECT_THROW(enumerate_algebra_homs(a, quadratic_extension(f5), 1000), GuardExceeded);
  EXPECT_THROW(enumerate_algebra_homs(a, base_field_algebra(Field::prime(3))), DomainMismatch);
}

TEST(AlgebraHoms, ResultsAreHomsAndTensorCountsMultiply) {
  const Field f3 = Field::prime(3);
  const std::vector<FdAlgebra> algebras = {
      polynomial_quotient_algebra(f3, parse_polynomial("x^2", f3)),
      polynomial_quotient_algebra(f3, parse_polynomial("x^2-1", f3)),
      polynomial_quotient_algebra(f3, parse_polynomial("x^2+1", f3)),
      group_algebra(f3, {2}).algebra,
  };
  for (const auto& s : test_algebra_catalog(f3))
    for (const auto& a : algebras) {
      const auto ha = enumerate_algebra_homs(a, s);
      for (const auto& f : ha) {
        // f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j), re-verified in S.
        auto image = [&](const Vector& v) {
          Scalar acc = s.zero();
          for (std::size_t i = 0; i < v.size(); ++i) acc += s.embed(v[i]) * s.from_coeffs(f.column(i));
          return acc;
        };
        EXPECT_EQ(image(a.unit), s.one());
        for (std::size_t i = 0; i < a.dim(); ++i)
          for (std::size_t j = 0; j < a.dim(); ++j)
            EXPECT_EQ(image(a.multiply(a.basis_vector(i), a.basis_vector(j))),
                      image(a.basis_vector(i)) * image(a.basis_vector(j)));
      }
      for (const auto& b : algebras)
        EXPECT_EQ(enumerate_algebra_homs(tensor_product(a, b), s).size(), ha.size() * enumerate_algebra_homs(b, s).size());
    }
}

TEST(TestAlgebras, CatalogShape) {
  const auto cat = test_algebra_catalog(Field::prime(5));
  ASSERT_EQ(cat.size(), 4u);
  EXPECT_EQ(cat[0].element_count(), 5u);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(cat[i].element_count(), 25u);
  EXPECT_EQ(cat[0].one(), cat[0].element(1));
  EXPECT_THROW(base_field_algebra(Field::rationals()).element_count(), Error);
}
