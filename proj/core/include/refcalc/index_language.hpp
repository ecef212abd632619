#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace refcalc {

namespace dsl {
class Lexer;
}

/// Symbolic countable index set: Atom (a copy of N), FinSet n = {0..n-1},
/// Sum (disjoint union), Prod (cartesian product). Equality is structural.
class IndexTerm {
 public:
  enum class Kind { Atom, FinSet, Sum, Prod };

  static IndexTerm atom(std::string name);
  static IndexTerm finset(std::int64_t n);
  static IndexTerm sum(IndexTerm left, IndexTerm right);
  static IndexTerm prod(IndexTerm left, IndexTerm right);

  Kind kind() const;
  const std::string& name() const;  // Atom only
  std::int64_t size() const;        // FinSet only
  const IndexTerm& left() const;    // Sum/Prod
  const IndexTerm& right() const;   // Sum/Prod
  bool is_atomic() const { return kind() == Kind::Atom || kind() == Kind::FinSet; }
  std::string to_string() const;

  friend bool operator==(const IndexTerm& a, const IndexTerm& b);

 private:
  struct Node;
  explicit IndexTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A concrete element of an index set. Atom/FinSet: value. Sum: value is the side
/// (0 left, 1 right) and parts = {inner}. Prod: parts = {first, second}.
struct Point {
  std::int64_t value = 0;
  std::vector<Point> parts;

  static Point nat(std::int64_t v) { return {v, {}}; }
  static Point left(Point p) { return {0, {std::move(p)}}; }
  static Point right(Point p) { return {1, {std::move(p)}}; }
  static Point pair(Point a, Point b) { return {0, {std::move(a), std::move(b)}}; }

  std::string to_string() const;
  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
};

struct ProductComponent;

/// A finitely described subset of an index set.
///   Atom/FinSet: Finite(elements) | Cofinite(excluded); Cofinite is rejected over FinSet.
///   Sum:         Pair(left subset, right subset).
///   Prod:        finite union of components, each Rect(first, second) or
///                Graph(k) = {(n, n+k) : n >= max(0,-k)} minus an optional finite
///                exclusion list of first coordinates. Graph needs Prod(Atom X, Atom X).
/// Element lists are kept sorted and unique; empty union components are dropped.
class DescribedSubset {
 public:
  enum class Shape { Finite, Cofinite, Pair, Union };

  static DescribedSubset finite(const IndexTerm& index, std::vector<std::int64_t> elements);
  static DescribedSubset cofinite(const IndexTerm& index, std::vector<std::int64_t> excluded);
  static DescribedSubset pair(DescribedSubset left, DescribedSubset right);
  static DescribedSubset rect(DescribedSubset first, DescribedSubset second);
  static DescribedSubset graph(const IndexTerm& index, std::int64_t offset, std::vector<std::int64_t> excluded = {});
  static DescribedSubset union_of(const IndexTerm& index, std::vector<ProductComponent> components);
  static DescribedSubset empty(const IndexTerm& index);
  static DescribedSubset full(const IndexTerm& index);

  const IndexTerm& index() const;
  Shape shape() const;
  const std::vector<std::int64_t>& elements() const;  // Finite members or Cofinite exclusions
  const DescribedSubset& left() const;                 // Pair
  const DescribedSubset& right() const;                // Pair
  const std::vector<ProductComponent>& components() const;  // Union

  bool contains(const Point& p) const;
  bool is_empty() const;
  std::string to_string() const;

  // Structural equality of normal forms (not extensional equality).
  friend bool operator==(const DescribedSubset& a, const DescribedSubset& b);

 private:
  struct Node;
  explicit DescribedSubset(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ProductComponent {
  enum class Kind { Rect, Graph };
  Kind kind = Kind::Rect;
  std::shared_ptr<const DescribedSubset> first;   // Rect
  std::shared_ptr<const DescribedSubset> second;  // Rect
  std::int64_t offset = 0;                        // Graph
  std::vector<std::int64_t> excluded;             // Graph: excluded first coordinates

  static ProductComponent rect(DescribedSubset a, DescribedSubset b);
  static ProductComponent graph(std::int64_t offset, std::vector<std::int64_t> excluded = {});
  // Smallest admissible first coordinate of a graph component.
  std::int64_t graph_start() const { return offset < 0 ? -offset : 0; }
  friend bool operator==(const ProductComponent& a, const ProductComponent& b);
};

struct Finiteness {
  bool finite = false;
  std::vector<Point> points;  // sorted; only meaningful when finite
};

/// Decides finiteness; if finite, enumerates every element, sorted.
Finiteness finiteness(const DescribedSubset& d);
std::optional<std::size_t> cardinality(const DescribedSubset& d);

/// Exact intersection. Throws TypeError when the index terms differ.
DescribedSubset intersect(const DescribedSubset& a, const DescribedSubset& b);
/// Exact union. Throws TypeError when the index terms differ.
DescribedSubset unite(const DescribedSubset& a, const DescribedSubset& b);
/// Image under the projection onto axis 1 or 2 of a Prod index.
DescribedSubset project(const DescribedSubset& d, int axis);

/// All elements whose Atom coordinates are < bound (FinSet coordinates unrestricted).
std::vector<Point> points_below(const DescribedSubset& d, std::int64_t bound);
/// All points of an index set whose Atom coordinates are < bound.
std::vector<Point> index_points_below(const IndexTerm& index, std::int64_t bound);

IndexTerm parse_index_term(std::string_view text);
DescribedSubset parse_subset(std::string_view text, const IndexTerm& index);

// Grammar entry points on a shared lexer (used by the family and model parsers).
IndexTerm parse_index_term(dsl::Lexer& lex);
DescribedSubset parse_subset(dsl::Lexer& lex, const IndexTerm& index);

}  // namespace refcalc
