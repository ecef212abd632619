#include <gtest/gtest.h>

#include <set>

#include "refcalc/errors.hpp"
#include "refcalc/index_language.hpp"
#include "refcalc/rng.hpp"
#include "refcalc/support_calculus.hpp"

using namespace refcalc;

namespace {

const IndexTerm A = IndexTerm::atom("A");
const IndexTerm AA = IndexTerm::prod(A, A);

DescribedSubset sub(const char* text, const IndexTerm& index) { return parse_subset(text, index); }

int atom_count(const IndexTerm& t) {
  switch (t.kind()) {
    case IndexTerm::Kind::Atom: return 1;
    case IndexTerm::Kind::FinSet: return 0;
    default: return atom_count(t.left()) + atom_count(t.right());
  }
}

// Keeps |window| around 10^4 points.
std::int64_t window(const IndexTerm& t) {
  const int n = atom_count(t);
  return n <= 2 ? 72 : n == 3 ? 24 : 10;
}

// Membership agreement on every point of a probe window.
bool same_on_window(const DescribedSubset& x, const DescribedSubset& y) {
  for (const auto& p : index_points_below(x.index(), window(x.index())))
    if (x.contains(p) != y.contains(p)) return false;
  return true;
}

}  // namespace

TEST(IndexParse, DocumentedExamples) {
  const IndexTerm t = parse_index_term("Sum(Atom A, FinSet 3)");
  EXPECT_EQ(t, IndexTerm::sum(A, IndexTerm::finset(3)));
  EXPECT_EQ(parse_index_term("Prod(Atom A, Atom A)"), AA);
  try {
    parse_index_term("Prod(Atom A,");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
}

TEST(IndexParse, PrintParseRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const IndexTerm t = sample_index(rng, 3);
    EXPECT_EQ(parse_index_term(t.to_string()), t);
    const DescribedSubset d = sample_subset(rng, t);
    EXPECT_EQ(parse_subset(d.to_string(), t), d) << d.to_string();
  }
}

TEST(IndexParse, Errors) {
  EXPECT_THROW(parse_index_term("FinSet -1"), ParseError);
  EXPECT_THROW(parse_index_term("Atom"), ParseError);
  EXPECT_THROW(sub("Cofin{1}", IndexTerm::finset(3)), ParseError);
  EXPECT_THROW(sub("Graph(0)", IndexTerm::prod(A, IndexTerm::atom("B"))), ParseError);
  EXPECT_THROW(sub("Fin{3}", IndexTerm::finset(3)), Error);
}

TEST(Intersect, DocumentedExamples) {
  EXPECT_EQ(intersect(sub("Cofin{}", A), sub("Fin{1,2}", A)), sub("Fin{1,2}", A));
  EXPECT_EQ(intersect(sub("Cofin{0,1}", A), sub("Cofin{1,2}", A)), sub("Cofin{0,1,2}", A));
  const DescribedSubset g = intersect(sub("Graph(1)", AA), sub("Rect(Cofin{}, Fin{7})", AA));
  const Finiteness f = finiteness(g);
  ASSERT_TRUE(f.finite);
  ASSERT_EQ(f.points.size(), 1u);
  EXPECT_EQ(f.points[0], Point::pair(Point::nat(6), Point::nat(7)));
}

TEST(Intersect, GraphsOfEqualAndDistinctOffsets) {
  EXPECT_EQ(intersect(sub("Graph(2)", AA), sub("Graph(2)", AA)), sub("Graph(2)", AA));
  EXPECT_TRUE(intersect(sub("Graph(2)", AA), sub("Graph(-1)", AA)).is_empty());
}

TEST(Intersect, IndexMismatchThrows) {
  EXPECT_THROW(intersect(sub("Fin{1}", A), sub("Fin{1}", IndexTerm::atom("B"))), TypeError);
}

TEST(Finiteness, DocumentedExamples) {
  const Finiteness f = finiteness(sub("Fin{3,5}", A));
  ASSERT_TRUE(f.finite);
  EXPECT_EQ(f.points, (std::vector<Point>{Point::nat(3), Point::nat(5)}));
  EXPECT_FALSE(finiteness(sub("Cofin{}", A)).finite);
  EXPECT_FALSE(finiteness(sub("Rect(Fin{1}, Cofin{})", AA)).finite);
  EXPECT_EQ(cardinality(sub("Rect(Fin{1,2}, Fin{0,4,9})", AA)), 6u);
}

TEST(Project, DocumentedExamples) {
  EXPECT_EQ(project(sub("Rect(Fin{1,2}, Cofin{})", AA), 1), sub("Fin{1,2}", A));
  EXPECT_EQ(project(sub("Graph(0)", AA), 2), sub("Cofin{}", A));
  EXPECT_EQ(project(sub("Rect(Fin{}, Cofin{})", AA), 2), sub("Fin{}", A));
  EXPECT_THROW(project(sub("Graph(0)", AA), 3), Error);
  EXPECT_THROW(project(sub("Fin{1}", A), 1), TypeError);
}

TEST(IntersectProperty, CommutativeAssociativeIdempotent) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    const DescribedSubset a = sample_subset(rng, t), b = sample_subset(rng, t), c = sample_subset(rng, t);
    const DescribedSubset ab = intersect(a, b);
    EXPECT_TRUE(same_on_window(ab, intersect(b, a)));
    EXPECT_TRUE(same_on_window(intersect(ab, c), intersect(a, intersect(b, c))));
    EXPECT_TRUE(same_on_window(intersect(a, a), a));
    EXPECT_EQ(finiteness(ab).finite, finiteness(intersect(b, a)).finite);
    if (finiteness(a).finite) EXPECT_TRUE(finiteness(ab).finite);
  }
}

TEST(IntersectProperty, MatchesPointwiseOracle) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    const DescribedSubset a = sample_subset(rng, t), b = sample_subset(rng, t);
    const DescribedSubset ab = intersect(a, b);
    for (const auto& p : index_points_below(t, window(t))) ASSERT_EQ(ab.contains(p), a.contains(p) && b.contains(p));
  }
}

// Truncated-window oracle for finiteness: a set is finite iff its window count
// does not grow between N = 72 and N = 144.
TEST(FinitenessProperty, AgreesWithTruncatedWindow) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    if (atom_count(t) > 2) continue;
    const DescribedSubset d = sample_subset(rng, t);
    const bool grows = points_below(d, 72).size() != points_below(d, 144).size();
    const Finiteness f = finiteness(d);
    ASSERT_EQ(f.finite, !grows) << d.to_string() << " over " << t.to_string();
    if (f.finite) {
      EXPECT_EQ(f.points, points_below(d, 144));
      EXPECT_TRUE(std::is_sorted(f.points.begin(), f.points.end()));
    }
  }
}

TEST(ProjectProperty, SampledPointsProjectInside) {
  Rng rng(14);
  int seen = 0;
  for (int i = 0; i < 300; ++i) {
    IndexTerm t = sample_index(rng, 2);
    if (t.kind() != IndexTerm::Kind::Prod) t = IndexTerm::prod(t, A);
    const DescribedSubset d = sample_subset(rng, t);
    const DescribedSubset p1 = project(d, 1), p2 = project(d, 2);
    for (const auto& p : points_below(d, window(t))) {
      ++seen;
      ASSERT_TRUE(p1.contains(p.parts[0]));
      ASSERT_TRUE(p2.contains(p.parts[1]));
    }
  }
  EXPECT_GT(seen, 1000);
}

TEST(Union, MatchesPointwiseOracle) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const IndexTerm t = sample_index(rng, 2);
    const DescribedSubset a = sample_subset(rng, t), b = sample_subset(rng, t);
    const DescribedSubset u = unite(a, b);
    for (const auto& p : index_points_below(t, window(t))) ASSERT_EQ(u.contains(p), a.contains(p) || b.contains(p));
  }
}
