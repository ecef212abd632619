#include <gtest/gtest.h>

#include <set>

#include "refcalc/errors.hpp"
#include "refcalc/linrec.hpp"
#include "refcalc/profinite.hpp"

using namespace refcalc;

namespace {

std::set<std::string> x_images(const std::vector<Matrix>& points, const TestAlgebra& s) {
  std::set<std::string> out;
  for (const auto& p : points) out.insert(point_value(p, s, 1).to_string());
  return out;
}

std::set<std::string> nilpotents(const TestAlgebra& s) {
  // Oracle: s is nilpotent iff s^4 = 0 (dim S <= 2 bounds the index by 2).
  std::set<std::string> out;
  for (std::uint64_t i = 0; i < s.element_count(); ++i) {
    const Scalar x = s.element(i);
    if ((x * x * x * x).is_zero()) out.insert(x.to_string());
  }
  return out;
}

Vector ints(const Field& k, std::vector<long> v) {
  Vector out;
  for (long x : v) out.push_back(k.from_int(x));
  return out;
}

LinRecFunctional geom(const Field& k, long a) {
  return linrec_from_recurrence(k, {k.from_int(-a), k.one()}, {k.one()}, LinRecStructure::Additive);
}

}  // namespace

TEST(AdicTower, DocumentedExamples) {
  const Field f2 = Field::prime(2);
  const AlgebraTower t = adic_tower(f2, parse_polynomial("x", f2), 3);
  ASSERT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.levels[0].dim(), 1u);
  EXPECT_EQ(t.levels[1].dim(), 2u);
  EXPECT_EQ(t.levels[2].dim(), 3u);
  EXPECT_EQ(adic_tower(f2, parse_polynomial("x", f2), 1).depth(), 1u);
  const AlgebraTower u = adic_tower(f2, parse_polynomial("x^2+x", f2), 2);
  EXPECT_EQ(u.levels[0].dim(), 2u);
  EXPECT_EQ(u.levels[1].dim(), 4u);
  for (std::size_t n = 0; n + 1 < t.depth(); ++n)
    EXPECT_EQ(t.transitions[n].apply(t.levels[n + 1].unit), t.levels[n].unit);
}

TEST(AdicTower, SizeGuard) {
  const Field f2 = Field::prime(2);
  EXPECT_THROW(adic_tower(f2, parse_polynomial("x^3", f2), 11), TypeError);
  EXPECT_THROW(adic_tower(f2, parse_polynomial("x", f2), 0), TypeError);
}

TEST(SpecPoints, DocumentedExamples) {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const AlgebraTower t = adic_tower(f2, parse_polynomial("x", f2), 3);
  EXPECT_EQ(spec_points(t, dual_numbers(f2)).size(), 2u);
  EXPECT_EQ(spec_points(t, base_field_algebra(f2)).size(), 1u);
  EXPECT_EQ(spec_points(polynomial_quotient_algebra(f3, parse_polynomial("x^2-1", f3)), base_field_algebra(f3)).size(), 2u);
}

TEST(SpecPoints, AdicPointsAreNilpotentsAndDepthStable) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field k = Field::prime(p);
    const AlgebraTower t3 = adic_tower(k, parse_polynomial("x", k), 3);
    const AlgebraTower t4 = adic_tower(k, parse_polynomial("x", k), 4);
    for (const auto& s : test_algebra_catalog(k)) {
      EXPECT_EQ(x_images(spec_points(t3, s), s), nilpotents(s)) << s.name();
      EXPECT_TRUE(depth_stable(t4, s)) << s.name();
      EXPECT_EQ(x_images(spec_points(t3, s), s), x_images(spec_points(t4, s), s));
    }
  }
}

TEST(SpecPoints, TowerFromJsonValidates) {
  const Field f2 = Field::prime(2);
  AlgebraTower t = adic_tower(f2, parse_polynomial("x", f2), 2);
  t.transitions[0] = Matrix(f2, 1, 2);  // the zero map is not unital
  EXPECT_THROW(t.validate(), TypeError);
}

TEST(FiniteDual, DocumentedExamples) {
  const Field f5 = Field::prime(5), f2 = Field::prime(2);
  const FdAlgebra kg = group_algebra(f5, {2}).algebra;
  const FdCoalgebra c = finite_dual(kg);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(c.comult(k, i, j), kg.mult(i, j, k));
  EXPECT_EQ(finite_dual(base_field_as_algebra(f5)).dim(), 1u);
  // F2[x]/(x^2): D(x*) = x* (x) 1* + 1* (x) x*.
  const FdCoalgebra d = finite_dual(polynomial_quotient_algebra(f2, parse_polynomial("x^2", f2)));
  EXPECT_EQ(d.comultiply(Vector{f2.zero(), f2.one()}), (Vector{f2.zero(), f2.one(), f2.one(), f2.zero()}));
  for (const auto& e : bialgebra_catalog(Field::prime(3))) {
    const FdAlgebra back = dualize(finite_dual(e.bialgebra.algebra));
    EXPECT_EQ(back.mult, e.bialgebra.algebra.mult) << e.name;
    EXPECT_EQ(back.labels, e.bialgebra.algebra.labels) << e.name;
  }
}

TEST(LinRec, DocumentedExamples) {
  const Field q = Field::rationals();
  const auto fib = parse_linrec("linrec(Q, f=x^2-x-1, init=[0,1], structure=additive)");
  EXPECT_EQ(fib.values(8), ints(q, {0, 1, 1, 2, 3, 5, 8, 13}));
  EXPECT_TRUE(fib.annihilates_upto(10));
  const auto ones = linrec_from_recurrence(q, parse_polynomial("x-1", q), ints(q, {1}), LinRecStructure::Multiplicative);
  EXPECT_EQ(ones.values(5), ints(q, {1, 1, 1, 1, 1}));
  EXPECT_THROW(linrec_from_recurrence(q, parse_polynomial("x^2-1", q), ints(q, {1}), LinRecStructure::Additive), TypeError);
  EXPECT_THROW(parse_linrec("linrec(Q, f=x-1, init=[1], structure=sideways)"), Error);
}

TEST(LinRec, ProductExamples) {
  const Field q = Field::rationals();
  const auto fibm = linrec_from_recurrence(q, parse_polynomial("x^2-x-1", q), ints(q, {0, 1}), LinRecStructure::Multiplicative);
  const auto ones = linrec_from_recurrence(q, parse_polynomial("x-1", q), ints(q, {1}), LinRecStructure::Multiplicative);
  EXPECT_EQ(linrec_product(ones, fibm).values(20), fibm.values(20));
  const auto sq = linrec_product(geom(q, 1), geom(q, 1));
  EXPECT_EQ(sq.modulus, parse_polynomial("x-2", q));
  Vector pow2;
  for (long n = 0, v = 1; n < 30; ++n, v *= 2) pow2.push_back(q.from_int(v));
  EXPECT_EQ(sq.values(30), pow2);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const auto p = linrec_product(geom(q, a), geom(q, b));
      EXPECT_EQ(p.values(25), geom(q, a + b).values(25));
      EXPECT_EQ(p.modulus, geom(q, a + b).modulus);
    }
  EXPECT_THROW(linrec_product(geom(q, 1), ones), TypeError);
  EXPECT_THROW(linrec_product(geom(q, 1), geom(Field::prime(5), 1)), TypeError);
}

TEST(LinRec, HurwitzProductMatchesBinomialOracle) {
  const Field q = Field::rationals();
  const auto fib = linrec_from_recurrence(q, parse_polynomial("x^2-x-1", q), ints(q, {0, 1}), LinRecStructure::Additive);
  const auto g = geom(q, 3);
  const auto p = linrec_product(fib, g);
  const Vector a = fib.values(25), b = g.values(25), got = p.values(25);
  for (std::size_t n = 0; n < 25; ++n) {
    mpq_class acc = 0, binom = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      acc += binom * a[k].rational() * b[n - k].rational();
      binom = binom * mpq_class(static_cast<long>(n - k)) / mpq_class(static_cast<long>(k + 1));
    }
    EXPECT_EQ(got[n], Scalar(acc)) << n;
  }
  EXPECT_LE(p.degree(), fib.degree() * g.degree());
}

TEST(LinRec, BarFamilyCounts) {
  const auto fam = bar_family(Field::prime(3), 2);
  EXPECT_EQ(fam.size(), 3u + 9u);
  for (const auto& f : fam) EXPECT_TRUE(poly_is_monic(f));
}

TEST(Cartier, DocumentedExamples) {
  const Field f3 = Field::prime(3), f2 = Field::prime(2);
  const auto r3 = cartier_check({2}, f3, base_field_algebra(f3));
  EXPECT_TRUE(r3.passed) << r3.detail;
  EXPECT_EQ(r3.points, 2u);
  EXPECT_EQ(r3.brute_points, 2u);
  const auto r2 = cartier_check({2}, f2, base_field_algebra(f2));
  EXPECT_TRUE(r2.passed) << r2.detail;
  EXPECT_EQ(r2.points, 1u);
  EXPECT_TRUE(r2.double_dual);
}

TEST(Cartier, SmallGroupsOverSuitableFields) {
  for (const auto& g : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {4}, {2, 2}})
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const Field k = Field::prime(p);
      const auto rep = cartier_check(g, k, base_field_algebra(k));
      EXPECT_TRUE(rep.passed) << group_name(g) << " over F" << p << ": " << rep.detail;
      EXPECT_TRUE(rep.dual_matches);
    }
  EXPECT_THROW(cartier_check({2, 2}, Field::prime(7), quadratic_extension(Field::prime(7)), 1000), GuardExceeded);
}
