#include <gtest/gtest.h>

#include <functional>

#include "refcalc/errors.hpp"
#include "refcalc/support_calculus.hpp"

using namespace refcalc;

namespace {

const IndexTerm A = IndexTerm::atom("A");
const IndexTerm B = IndexTerm::atom("B");
const IndexTerm AA = IndexTerm::prod(A, A);
const IndexTerm AB = IndexTerm::prod(A, B);

DescribedSubset sub(const char* text, const IndexTerm& index) { return parse_subset(text, index); }
Family fam(const char* text, const IndexTerm& index) { return parse_family(text, index); }

// ---------------------------------------------------------------------------
// Window oracle for F° when F is built from FIN/FULL leaves by SUMFAM and RECT.
// Members are represented by point predicates: FIN by the singletons below the
// window, FULL by the whole set. Finite members meet everything finitely, so
// only infinite ones are kept. b meets a member finitely iff the count of
// b ∩ member does not grow from N = 144 to N = 288, far enough out that graph
// points next to a singleton are already counted.

struct Member {
  std::function<bool(const Point&)> contains;
  bool infinite;
};

constexpr std::int64_t kWindow = 72;

std::vector<Member> members(const Family& f) {
  const IndexTerm& t = f.index();
  switch (f.kind()) {
    case Family::Kind::Fin: {
      std::vector<Member> out;
      const std::int64_t n = t.kind() == IndexTerm::Kind::FinSet ? t.size() : kWindow;
      for (std::int64_t i = 0; i < n; ++i) out.push_back({[i](const Point& p) { return p.value == i; }, false});
      return out;
    }
    case Family::Kind::Full:
      return {{[](const Point&) { return true; }, t.kind() != IndexTerm::Kind::FinSet}};
    case Family::Kind::SumFam: {
      std::vector<Member> out;
      for (const auto& m : members(f.left()))
        out.push_back({[c = m.contains](const Point& p) { return p.value == 0 && c(p.parts[0]); }, m.infinite});
      for (const auto& m : members(f.right()))
        out.push_back({[c = m.contains](const Point& p) { return p.value == 1 && c(p.parts[0]); }, m.infinite});
      return out;
    }
    case Family::Kind::Rect: {
      std::vector<Member> out;
      const auto l = members(f.left()), r = members(f.right());
      for (const auto& a : l)
        for (const auto& b : r)
          if (a.infinite || b.infinite)
            out.push_back({[x = a.contains, y = b.contains](const Point& p) { return x(p.parts[0]) && y(p.parts[1]); }, true});
      return out;
    }
    case Family::Kind::Polar: break;
  }
  throw std::logic_error("oracle covers leaf families only");
}

bool oracle_polar(const DescribedSubset& b, const Family& f) {
  const auto small = points_below(b, 2 * kWindow), large = points_below(b, 4 * kWindow);
  for (const auto& m : members(f)) {
    if (!m.infinite) continue;
    const auto c1 = std::count_if(small.begin(), small.end(), m.contains);
    const auto c2 = std::count_if(large.begin(), large.end(), m.contains);
    if (c1 != c2) return false;
  }
  return true;
}

Family sample_leaf_family(Rng& rng, const IndexTerm& t) {
  switch (t.kind()) {
    case IndexTerm::Kind::Sum: return Family::sumfam(sample_leaf_family(rng, t.left()), sample_leaf_family(rng, t.right()));
    case IndexTerm::Kind::Prod:
      if (t.left().is_atomic() && t.right().is_atomic())
        return Family::rect(sample_leaf_family(rng, t.left()), sample_leaf_family(rng, t.right()));
      [[fallthrough]];
    default: return rng.chance(1, 2) ? Family::fin(t) : Family::full(t);
  }
}

ModuleElement elem(const ModuleObject& m, std::vector<std::pair<const char*, std::int64_t>> terms) {
  std::vector<ElementTerm> ts;
  for (auto& [s, c] : terms) ts.push_back({sub(s, m.index()), m.ring.from_int(c)});
  return ModuleElement(m, std::move(ts));
}

}  // namespace

TEST(Normalize, DocumentedExamples) {
  EXPECT_EQ(normalize(fam("POLAR(POLAR(POLAR(FULL)))", A)), Family::fin(A));
  const IndexTerm s = IndexTerm::sum(A, B);
  EXPECT_EQ(normalize(fam("POLAR(SUMFAM(FULL, FIN))", s)), fam("SUMFAM(FIN, FULL)", s));
  EXPECT_EQ(normalize(Family::fin(A)), Family::fin(A));
}

TEST(Normalize, RectPolarsKeepTwoLevels) {
  const Family r = fam("RECT(FIN, FULL)", AA);
  EXPECT_EQ(normalize(Family::polar(Family::polar(Family::polar(r)))), Family::polar(r));
  EXPECT_EQ(normalize(Family::polar(Family::polar(r))), Family::polar(Family::polar(r)));
  EXPECT_EQ(normalize(Family::polar(Family::polar(Family::polar(Family::polar(r))))), Family::polar(Family::polar(r)));
}

TEST(Normalize, IdempotentWithShortPolarRuns) {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    const Family f = sample_family(rng, t, 4);
    const Family n = normalize(f);
    EXPECT_EQ(normalize(n), n) << f.to_string();
    EXPECT_LE(max_polar_run(n), 2) << f.to_string();
  }
}

TEST(FamilyParse, RoundTripAndTypeErrors) {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    const Family f = sample_family(rng, t, 4);
    EXPECT_EQ(parse_family(f.to_string(), t), f);
  }
  EXPECT_THROW(fam("RECT(FIN, FIN)", IndexTerm::sum(A, B)), ParseError);
  EXPECT_THROW(fam("SUMFAM(FIN, FIN)", AA), ParseError);
  EXPECT_THROW(fam("POLAR(FIN", A), ParseError);
}

TEST(Membership, DocumentedExamples) {
  EXPECT_TRUE(member_ideal(sub("Fin{3,5}", A), Family::fin(A)));
  EXPECT_FALSE(member_ideal(sub("Cofin{}", A), Family::fin(A)));
  EXPECT_TRUE(member_ideal(sub("Rect(Cofin{}, Fin{2})", AA), fam("RECT(FULL, FIN)", AA)));
  EXPECT_TRUE(member_polar(sub("Cofin{}", A), Family::fin(A)));
  EXPECT_FALSE(member_polar(sub("Cofin{}", A), Family::full(A)));
  const DescribedSubset diag = sub("Graph(0)", AA);
  const Family rows = fam("RECT(FIN, FULL)", AA);
  EXPECT_TRUE(member_polar(diag, rows));
  EXPECT_TRUE(oracle_polar(diag, rows));
}

TEST(Membership, IndexMismatchThrows) {
  EXPECT_THROW(member_polar(sub("Fin{1}", A), Family::fin(B)), TypeError);
  EXPECT_THROW(member_ideal(sub("Fin{1}", A), Family::fin(B)), TypeError);
}

TEST(Membership, PolarAgreesWithWindowOracle) {
  Rng rng(23);
  const std::vector<IndexTerm> indices = {A, IndexTerm::finset(3), AA, AB, IndexTerm::sum(A, B),
                                          IndexTerm::sum(A, IndexTerm::finset(3)), IndexTerm::prod(IndexTerm::finset(2), A)};
  for (int i = 0; i < 600; ++i) {
    const IndexTerm& t = indices[rng.below(indices.size())];
    const Family f = sample_leaf_family(rng, t);
    const DescribedSubset b = sample_subset(rng, t);
    ASSERT_EQ(member_polar(b, f), oracle_polar(b, f)) << b.to_string() << " vs " << f.to_string();
  }
}

TEST(Dual, DocumentedExamples) {
  const auto q = CoefficientRing::rationals();
  EXPECT_EQ(dual(ModuleObject::make(Family::full(A), q)).family, Family::fin(A));
  const IndexTerm s = IndexTerm::sum(A, B);
  const ModuleObject m = ModuleObject::make(fam("SUMFAM(FULL, FIN)", s), q);
  EXPECT_TRUE(modules_equal_randomized(dual(dual(m)), m, 1, 200).consistent);
  const ModuleObject free3 = ModuleObject::make(Family::full(IndexTerm::finset(3)), q);
  EXPECT_TRUE(modules_equal_randomized(dual(free3), free3, 1, 50).consistent);
}

TEST(Build, DocumentedExamples) {
  const auto q = CoefficientRing::rationals();
  const ModuleObject sum_a = ModuleObject::make(Family::full(A), q), sum_b = ModuleObject::make(Family::full(B), q);
  const ModuleObject prod_a = ModuleObject::make(Family::fin(A), q), prod_b = ModuleObject::make(Family::fin(B), q);
  const ModuleObject h = build(BuildKind::Hom, sum_a, sum_b);
  EXPECT_EQ(h.index(), AB);
  EXPECT_EQ(h.family, fam("RECT(FIN, FULL)", AB));
  EXPECT_EQ(build(BuildKind::Product, prod_a, prod_b).family, fam("SUMFAM(FIN, FIN)", IndexTerm::sum(A, B)));
  const ModuleObject dt = build(BuildKind::DualTensor, sum_a, sum_b);
  EXPECT_EQ(dt.family, fam("RECT(FIN, FIN)", AB));
  // RECT(FIN, FIN)° is every subset: the full product over A x B.
  EXPECT_TRUE(modules_equal_randomized(dt, ModuleObject::make(Family::fin(AB), q), 3, 300).consistent);
  EXPECT_THROW(build(BuildKind::Hom, sum_a, ModuleObject::make(Family::full(B), CoefficientRing::prime(5))), TypeError);
}

TEST(ModulesEqual, DocumentedExamples) {
  const auto q = CoefficientRing::rationals();
  const Family r = fam("RECT(FULL, FULL)", AA);
  EXPECT_TRUE(modules_equal_randomized(ModuleObject::make(Family::polar(Family::polar(r)), q),
                                       ModuleObject::make(r, q), 5, 200)
                  .consistent);
  const EqualityOutcome e = modules_equal_randomized(ModuleObject::make(Family::full(A), q),
                                                     ModuleObject::make(Family::fin(A), q), 5, 200);
  ASSERT_FALSE(e.consistent);
  EXPECT_EQ(e.counterexample->to_string(), "Cofin{}");
  const ModuleObject m = ModuleObject::make(Family::full(A), q), n = ModuleObject::make(fam("RECT(FIN, FULL)", AB), q);
  EXPECT_TRUE(modules_equal_randomized(dual(build(BuildKind::Product, m, n)),
                                       build(BuildKind::Product, dual(m), dual(n)), 5, 200)
                  .consistent);
  EXPECT_THROW(modules_equal_randomized(m, n, 1, 1), TypeError);
}

TEST(ModulesEqual, DeterministicGivenSeed) {
  const auto q = CoefficientRing::rationals();
  const ModuleObject m = ModuleObject::make(fam("RECT(FIN, FULL)", AA), q);
  const ModuleObject n = ModuleObject::make(fam("RECT(FULL, FIN)", AA), q);
  const auto a = modules_equal_randomized(m, n, 99, 100), b = modules_equal_randomized(m, n, 99, 100);
  ASSERT_FALSE(a.consistent);
  EXPECT_EQ(a.counterexample, b.counterexample);
  EXPECT_EQ(a.checked, b.checked);
}

TEST(Pairing, DocumentedExamples) {
  const auto q = CoefficientRing::rationals();
  const ModuleObject sum_a = ModuleObject::make(Family::full(A), q);
  const ModuleObject prod_a = dual(sum_a);
  EXPECT_EQ(pair(elem(sum_a, {{"Fin{1,2}", 1}}), elem(prod_a, {{"Cofin{}", 3}})), q.from_int(6));
  EXPECT_EQ(pair(elem(prod_a, {{"Cofin{0}", 1}}), elem(sum_a, {{"Fin{0,1}", 2}})), q.from_int(2));
  const ModuleObject m = ModuleObject::make(fam("RECT(FIN, FULL)", AA), q);
  EXPECT_EQ(pair(elem(m, {{"Graph(0)", 1}}), elem(dual(m), {{"Rect(Fin{2,3}, Cofin{})", 1}})), q.from_int(2));
}

TEST(Pairing, RejectsSupportsOutsideTheIdeal) {
  const auto q = CoefficientRing::rationals();
  const ModuleObject sum_a = ModuleObject::make(Family::full(A), q);
  EXPECT_THROW(elem(sum_a, {{"Cofin{}", 1}}), TypeError);
  EXPECT_THROW(pair(elem(sum_a, {{"Fin{1}", 1}}), elem(sum_a, {{"Fin{1}", 1}})), TypeError);
}

TEST(Pairing, BilinearOnCatalog) {
  Rng rng(24);
  for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::prime(7), CoefficientRing::dual_numbers(3)})
    for (const auto& [name, m] : module_catalog(ring)) {
      const ModuleObject d = dual(m);
      for (int i = 0; i < 20; ++i) {
        const ModuleElement x(m, {{sample_support(rng, m.family), ring.sample(rng)}});
        const ModuleElement x2(m, {{sample_support(rng, m.family), ring.sample(rng)}});
        const ModuleElement w(d, {{sample_support(rng, d.family), ring.sample(rng)}});
        const Scalar c = ring.sample(rng);
        EXPECT_EQ(pair(x + x2, w), pair(x, w) + pair(x2, w)) << name;
        EXPECT_EQ(pair(x.scaled(c), w), c * pair(x, w)) << name;
      }
    }
}

TEST(CoefficientRings, ParseAndArithmetic) {
  EXPECT_EQ(CoefficientRing::parse("Z"), CoefficientRing::integers());
  EXPECT_EQ(CoefficientRing::parse("Fp:7"), CoefficientRing::prime(7));
  const auto d = CoefficientRing::parse("Dual:3");
  EXPECT_EQ(d, CoefficientRing::dual_numbers(3));
  const Scalar e = d.from_pair(0, 1);
  EXPECT_TRUE((e * e).is_zero());
  EXPECT_THROW(CoefficientRing::parse("Fp:4"), Error);
  EXPECT_FALSE(CoefficientRing::integers().contains(CoefficientRing::rationals().parse_scalar("1/2")));
}
