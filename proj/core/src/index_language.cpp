#include "refcalc/index_language.hpp"

#include <algorithm>
#include <sstream>

#include "refcalc/dsl.hpp"
#include "refcalc/errors.hpp"

namespace refcalc {

// ---------------------------------------------------------------------------
// IndexTerm

struct IndexTerm::Node {
  Kind kind;
  std::string name;
  std::int64_t size = 0;
  std::vector<IndexTerm> children;
};

IndexTerm IndexTerm::atom(std::string name) {
  if (name.empty()) throw TypeError("atom name must be non-empty");
  return IndexTerm(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), 0, {}}));
}

IndexTerm IndexTerm::finset(std::int64_t n) {
  if (n < 0) throw TypeError("FinSet cardinality must be >= 0, got " + std::to_string(n));
  return IndexTerm(std::make_shared<const Node>(Node{Kind::FinSet, {}, n, {}}));
}

IndexTerm IndexTerm::sum(IndexTerm l, IndexTerm r) {
  return IndexTerm(std::make_shared<const Node>(Node{Kind::Sum, {}, 0, {std::move(l), std::move(r)}}));
}

IndexTerm IndexTerm::prod(IndexTerm l, IndexTerm r) {
  return IndexTerm(std::make_shared<const Node>(Node{Kind::Prod, {}, 0, {std::move(l), std::move(r)}}));
}

IndexTerm::Kind IndexTerm::kind() const { return node_->kind; }

const std::string& IndexTerm::name() const {
  if (node_->kind != Kind::Atom) throw TypeError("name() on a non-atom index");
  return node_->name;
}

std::int64_t IndexTerm::size() const {
  if (node_->kind != Kind::FinSet) throw TypeError("size() on a non-FinSet index");
  return node_->size;
}

const IndexTerm& IndexTerm::left() const {
  if (node_->children.size() != 2) throw TypeError("left() on an atomic index");
  return node_->children[0];
}

const IndexTerm& IndexTerm::right() const {
  if (node_->children.size() != 2) throw TypeError("right() on an atomic index");
  return node_->children[1];
}

std::string IndexTerm::to_string() const {
  switch (node_->kind) {
    case Kind::Atom: return "Atom " + node_->name;
    case Kind::FinSet: return "FinSet " + std::to_string(node_->size);
    case Kind::Sum: return "Sum(" + left().to_string() + ", " + right().to_string() + ")";
    case Kind::Prod: return "Prod(" + left().to_string() + ", " + right().to_string() + ")";
  }
  return {};
}

bool operator==(const IndexTerm& a, const IndexTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case IndexTerm::Kind::Atom: return a.node_->name == b.node_->name;
    case IndexTerm::Kind::FinSet: return a.node_->size == b.node_->size;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------------------
// Point

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.value <=> b.value; c != 0) return c;
  if (auto c = a.parts.size() <=> b.parts.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (auto c = a.parts[i] <=> b.parts[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Point::to_string() const {
  if (parts.empty()) return std::to_string(value);
  if (parts.size() == 1) return std::string(value == 0 ? "L:" : "R:") + parts[0].to_string();
  return "(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
}

// ---------------------------------------------------------------------------
// DescribedSubset

struct DescribedSubset::Node {
  IndexTerm index;
  Shape shape;
  std::vector<std::int64_t> elements;
  std::vector<DescribedSubset> halves;
  std::vector<ProductComponent> components;
};

namespace {

std::vector<std::int64_t> canonical(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool has(const std::vector<std::int64_t>& sorted, std::int64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void require_same_index(const IndexTerm& a, const IndexTerm& b, const char* op) {
  if (!(a == b))
    throw TypeError(std::string(op) + ": index mismatch between " + a.to_string() + " and " + b.to_string());
}

bool is_graph_index(const IndexTerm& index) {
  return index.kind() == IndexTerm::Kind::Prod && index.left().kind() == IndexTerm::Kind::Atom &&
         index.left() == index.right();
}

std::vector<std::int64_t> canonical_graph_exclusions(std::int64_t offset, std::vector<std::int64_t> excluded) {
  const std::int64_t start = offset < 0 ? -offset : 0;
  excluded = canonical(std::move(excluded));
  excluded.erase(std::remove_if(excluded.begin(), excluded.end(), [start](std::int64_t n) { return n < start; }),
                 excluded.end());
  return excluded;
}

}  // namespace

DescribedSubset DescribedSubset::finite(const IndexTerm& index, std::vector<std::int64_t> elements) {
  if (!index.is_atomic()) throw TypeError("Fin{} requires an Atom or FinSet index, got " + index.to_string());
  elements = canonical(std::move(elements));
  for (auto e : elements) {
    if (e < 0) throw TypeError("negative element " + std::to_string(e) + " in Fin{}");
    if (index.kind() == IndexTerm::Kind::FinSet && e >= index.size())
      throw TypeError("element " + std::to_string(e) + " outside " + index.to_string());
  }
  return DescribedSubset(std::make_shared<const Node>(Node{index, Shape::Finite, std::move(elements), {}, {}}));
}

DescribedSubset DescribedSubset::cofinite(const IndexTerm& index, std::vector<std::int64_t> excluded) {
  if (index.kind() != IndexTerm::Kind::Atom)
    throw TypeError("Cofin{} requires an Atom index (use Fin{} over FinSet), got " + index.to_string());
  excluded = canonical(std::move(excluded));
  for (auto e : excluded)
    if (e < 0) throw TypeError("negative element " + std::to_string(e) + " in Cofin{}");
  return DescribedSubset(std::make_shared<const Node>(Node{index, Shape::Cofinite, std::move(excluded), {}, {}}));
}

DescribedSubset DescribedSubset::pair(DescribedSubset l, DescribedSubset r) {
  IndexTerm index = IndexTerm::sum(l.index(), r.index());
  return DescribedSubset(std::make_shared<const Node>(Node{std::move(index), Shape::Pair, {}, {std::move(l), std::move(r)}, {}}));
}

DescribedSubset DescribedSubset::rect(DescribedSubset first, DescribedSubset second) {
  IndexTerm index = IndexTerm::prod(first.index(), second.index());
  return union_of(index, {ProductComponent::rect(std::move(first), std::move(second))});
}

DescribedSubset DescribedSubset::graph(const IndexTerm& index, std::int64_t offset, std::vector<std::int64_t> excluded) {
  return union_of(index, {ProductComponent::graph(offset, std::move(excluded))});
}

DescribedSubset DescribedSubset::union_of(const IndexTerm& index, std::vector<ProductComponent> components) {
  if (index.kind() != IndexTerm::Kind::Prod) throw TypeError("a union of components requires a Prod index, got " + index.to_string());
  std::vector<ProductComponent> kept;
  for (auto& c : components) {
    if (c.kind == ProductComponent::Kind::Rect) {
      require_same_index(c.first->index(), index.left(), "Rect");
      require_same_index(c.second->index(), index.right(), "Rect");
      if (c.first->is_empty() || c.second->is_empty()) continue;
    } else {
      if (!is_graph_index(index))
        throw TypeError("Graph requires Prod(Atom X, Atom X), got " + index.to_string());
      c.excluded = canonical_graph_exclusions(c.offset, std::move(c.excluded));
    }
    if (std::find(kept.begin(), kept.end(), c) == kept.end()) kept.push_back(std::move(c));
  }
  return DescribedSubset(std::make_shared<const Node>(Node{index, Shape::Union, {}, {}, std::move(kept)}));
}

DescribedSubset DescribedSubset::empty(const IndexTerm& index) {
  switch (index.kind()) {
    case IndexTerm::Kind::Atom:
    case IndexTerm::Kind::FinSet: return finite(index, {});
    case IndexTerm::Kind::Sum: return pair(empty(index.left()), empty(index.right()));
    case IndexTerm::Kind::Prod: return union_of(index, {});
  }
  return finite(index, {});
}

DescribedSubset DescribedSubset::full(const IndexTerm& index) {
  switch (index.kind()) {
    case IndexTerm::Kind::Atom: return cofinite(index, {});
    case IndexTerm::Kind::FinSet: {
      std::vector<std::int64_t> all(static_cast<std::size_t>(index.size()));
      for (std::int64_t i = 0; i < index.size(); ++i) all[static_cast<std::size_t>(i)] = i;
      return finite(index, std::move(all));
    }
    case IndexTerm::Kind::Sum: return pair(full(index.left()), full(index.right()));
    case IndexTerm::Kind::Prod: return rect(full(index.left()), full(index.right()));
  }
  return empty(index);
}

const IndexTerm& DescribedSubset::index() const { return node_->index; }
DescribedSubset::Shape DescribedSubset::shape() const { return node_->shape; }

const std::vector<std::int64_t>& DescribedSubset::elements() const {
  if (node_->shape != Shape::Finite && node_->shape != Shape::Cofinite) throw TypeError("elements() on a compound subset");
  return node_->elements;
}

const DescribedSubset& DescribedSubset::left() const {
  if (node_->shape != Shape::Pair) throw TypeError("left() on a non-Pair subset");
  return node_->halves[0];
}

const DescribedSubset& DescribedSubset::right() const {
  if (node_->shape != Shape::Pair) throw TypeError("right() on a non-Pair subset");
  return node_->halves[1];
}

const std::vector<ProductComponent>& DescribedSubset::components() const {
  if (node_->shape != Shape::Union) throw TypeError("components() on a non-product subset");
  return node_->components;
}

namespace {

bool component_contains(const ProductComponent& c, const Point& p) {
  if (p.parts.size() != 2) return false;
  if (c.kind == ProductComponent::Kind::Rect) return c.first->contains(p.parts[0]) && c.second->contains(p.parts[1]);
  const std::int64_t n = p.parts[0].value;
  return p.parts[1].value == n + c.offset && n >= c.graph_start() && !has(c.excluded, n);
}

}  // namespace

bool DescribedSubset::contains(const Point& p) const {
  switch (node_->shape) {
    case Shape::Finite: return p.parts.empty() && has(node_->elements, p.value);
    case Shape::Cofinite: return p.parts.empty() && p.value >= 0 && !has(node_->elements, p.value);
    case Shape::Pair:
      if (p.parts.size() != 1) return false;
      return (p.value == 0 ? left() : right()).contains(p.parts[0]);
    case Shape::Union:
      for (const auto& c : node_->components)
        if (component_contains(c, p)) return true;
      return false;
  }
  return false;
}

bool DescribedSubset::is_empty() const {
  switch (node_->shape) {
    case Shape::Finite: return node_->elements.empty();
    case Shape::Cofinite: return false;
    case Shape::Pair: return left().is_empty() && right().is_empty();
    case Shape::Union: return node_->components.empty();
  }
  return true;
}

namespace {

std::string list_to_string(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string component_to_string(const ProductComponent& c) {
  if (c.kind == ProductComponent::Kind::Rect) return "Rect(" + c.first->to_string() + ", " + c.second->to_string() + ")";
  if (c.excluded.empty()) return "Graph(" + std::to_string(c.offset) + ")";
  return "Graph(" + std::to_string(c.offset) + ", excl{" + list_to_string(c.excluded) + "})";
}

}  // namespace

std::string DescribedSubset::to_string() const {
  switch (node_->shape) {
    case Shape::Finite: return "Fin{" + list_to_string(node_->elements) + "}";
    case Shape::Cofinite: return "Cofin{" + list_to_string(node_->elements) + "}";
    case Shape::Pair: return "Pair(" + left().to_string() + ", " + right().to_string() + ")";
    case Shape::Union: {
      const auto& cs = node_->components;
      if (cs.size() == 1) return component_to_string(cs[0]);
      std::string s = "Union(";
      for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + component_to_string(cs[i]);
      return s + ")";
    }
  }
  return {};
}

bool operator==(const DescribedSubset& a, const DescribedSubset& b) {
  if (a.node_ == b.node_) return true;
  return a.index() == b.index() && a.node_->shape == b.node_->shape && a.node_->elements == b.node_->elements &&
         a.node_->halves == b.node_->halves && a.node_->components == b.node_->components;
}

ProductComponent ProductComponent::rect(DescribedSubset a, DescribedSubset b) {
  ProductComponent c;
  c.kind = Kind::Rect;
  c.first = std::make_shared<const DescribedSubset>(std::move(a));
  c.second = std::make_shared<const DescribedSubset>(std::move(b));
  return c;
}

ProductComponent ProductComponent::graph(std::int64_t offset, std::vector<std::int64_t> excluded) {
  ProductComponent c;
  c.kind = Kind::Graph;
  c.offset = offset;
  c.excluded = canonical_graph_exclusions(offset, std::move(excluded));
  return c;
}

bool operator==(const ProductComponent& a, const ProductComponent& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ProductComponent::Kind::Graph) return a.offset == b.offset && a.excluded == b.excluded;
  return *a.first == *b.first && *a.second == *b.second;
}

// ---------------------------------------------------------------------------
// Decision procedures

Finiteness finiteness(const DescribedSubset& d) {
  Finiteness out;
  switch (d.shape()) {
    case DescribedSubset::Shape::Finite:
      out.finite = true;
      for (auto e : d.elements()) out.points.push_back(Point::nat(e));
      return out;
    case DescribedSubset::Shape::Cofinite: return out;
    case DescribedSubset::Shape::Pair: {
      const Finiteness l = finiteness(d.left());
      const Finiteness r = finiteness(d.right());
      if (!l.finite || !r.finite) return out;
      out.finite = true;
      for (const auto& p : l.points) out.points.push_back(Point::left(p));
      for (const auto& p : r.points) out.points.push_back(Point::right(p));
      return out;
    }
    case DescribedSubset::Shape::Union: {
      for (const auto& c : d.components()) {
        if (c.kind == ProductComponent::Kind::Graph) return out;
        const Finiteness a = finiteness(*c.first);
        const Finiteness b = finiteness(*c.second);
        // components are nonempty, so an infinite factor makes the rectangle infinite
        if (!a.finite || !b.finite) return Finiteness{};
        for (const auto& x : a.points)
          for (const auto& y : b.points) out.points.push_back(Point::pair(x, y));
      }
      out.finite = true;
      std::sort(out.points.begin(), out.points.end());
      out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
      return out;
    }
  }
  return out;
}

std::optional<std::size_t> cardinality(const DescribedSubset& d) {
  Finiteness f = finiteness(d);
  if (!f.finite) return std::nullopt;
  return f.points.size();
}

namespace {

std::vector<std::int64_t> set_intersection(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::int64_t> set_union(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::int64_t> set_difference(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

DescribedSubset intersect_atomic(const DescribedSubset& a, const DescribedSubset& b) {
  using S = DescribedSubset::Shape;
  const IndexTerm& idx = a.index();
  if (a.shape() == S::Finite && b.shape() == S::Finite)
    return DescribedSubset::finite(idx, set_intersection(a.elements(), b.elements()));
  if (a.shape() == S::Finite) return DescribedSubset::finite(idx, set_difference(a.elements(), b.elements()));
  if (b.shape() == S::Finite) return DescribedSubset::finite(idx, set_difference(b.elements(), a.elements()));
  return DescribedSubset::cofinite(idx, set_union(a.elements(), b.elements()));
}

void intersect_graph_rect(const ProductComponent& g, const ProductComponent& r, const IndexTerm& index,
                          std::vector<ProductComponent>& out) {
  const DescribedSubset& d1 = *r.first;
  const DescribedSubset& d2 = *r.second;
  const IndexTerm& atom = index.left();
  auto add_point = [&](std::int64_t n) {
    out.push_back(ProductComponent::rect(DescribedSubset::finite(atom, {n}), DescribedSubset::finite(atom, {n + g.offset})));
  };
  auto on_graph = [&](std::int64_t n) { return n >= g.graph_start() && !has(g.excluded, n); };
  if (d1.shape() == DescribedSubset::Shape::Finite) {
    for (auto n : d1.elements())
      if (on_graph(n) && d2.contains(Point::nat(n + g.offset))) add_point(n);
  } else if (d2.shape() == DescribedSubset::Shape::Finite) {
    for (auto m : d2.elements()) {
      const std::int64_t n = m - g.offset;
      if (on_graph(n) && d1.contains(Point::nat(n))) add_point(n);
    }
  } else {
    std::vector<std::int64_t> excl = g.excluded;
    excl.insert(excl.end(), d1.elements().begin(), d1.elements().end());
    for (auto m : d2.elements()) excl.push_back(m - g.offset);
    out.push_back(ProductComponent::graph(g.offset, std::move(excl)));
  }
}

void intersect_components(const ProductComponent& a, const ProductComponent& b, const IndexTerm& index,
                          std::vector<ProductComponent>& out) {
  using K = ProductComponent::Kind;
  if (a.kind == K::Rect && b.kind == K::Rect) {
    out.push_back(ProductComponent::rect(intersect(*a.first, *b.first), intersect(*a.second, *b.second)));
  } else if (a.kind == K::Graph && b.kind == K::Graph) {
    if (a.offset == b.offset) out.push_back(ProductComponent::graph(a.offset, set_union(a.excluded, b.excluded)));
  } else if (a.kind == K::Graph) {
    intersect_graph_rect(a, b, index, out);
  } else {
    intersect_graph_rect(b, a, index, out);
  }
}

}  // namespace

DescribedSubset intersect(const DescribedSubset& a, const DescribedSubset& b) {
  require_same_index(a.index(), b.index(), "intersect");
  switch (a.index().kind()) {
    case IndexTerm::Kind::Atom:
    case IndexTerm::Kind::FinSet: return intersect_atomic(a, b);
    case IndexTerm::Kind::Sum: return DescribedSubset::pair(intersect(a.left(), b.left()), intersect(a.right(), b.right()));
    case IndexTerm::Kind::Prod: {
      std::vector<ProductComponent> out;
      for (const auto& ca : a.components())
        for (const auto& cb : b.components()) intersect_components(ca, cb, a.index(), out);
      return DescribedSubset::union_of(a.index(), std::move(out));
    }
  }
  return a;
}

DescribedSubset unite(const DescribedSubset& a, const DescribedSubset& b) {
  require_same_index(a.index(), b.index(), "unite");
  using S = DescribedSubset::Shape;
  const IndexTerm& idx = a.index();
  switch (idx.kind()) {
    case IndexTerm::Kind::Atom:
    case IndexTerm::Kind::FinSet:
      if (a.shape() == S::Finite && b.shape() == S::Finite) return DescribedSubset::finite(idx, set_union(a.elements(), b.elements()));
      if (a.shape() == S::Finite) return DescribedSubset::cofinite(idx, set_difference(b.elements(), a.elements()));
      if (b.shape() == S::Finite) return DescribedSubset::cofinite(idx, set_difference(a.elements(), b.elements()));
      return DescribedSubset::cofinite(idx, set_intersection(a.elements(), b.elements()));
    case IndexTerm::Kind::Sum: return DescribedSubset::pair(unite(a.left(), b.left()), unite(a.right(), b.right()));
    case IndexTerm::Kind::Prod: {
      std::vector<ProductComponent> all = a.components();
      all.insert(all.end(), b.components().begin(), b.components().end());
      return DescribedSubset::union_of(idx, std::move(all));
    }
  }
  return a;
}

DescribedSubset project(const DescribedSubset& d, int axis) {
  if (d.index().kind() != IndexTerm::Kind::Prod) throw TypeError("project requires a Prod index, got " + d.index().to_string());
  if (axis != 1 && axis != 2) throw TypeError("projection axis must be 1 or 2, got " + std::to_string(axis));
  const IndexTerm& target = axis == 1 ? d.index().left() : d.index().right();
  DescribedSubset result = DescribedSubset::empty(target);
  for (const auto& c : d.components()) {
    if (c.kind == ProductComponent::Kind::Rect) {
      result = unite(result, axis == 1 ? *c.first : *c.second);
      continue;
    }
    const std::int64_t start = c.graph_start();
    std::vector<std::int64_t> excl;
    if (axis == 1) {
      for (std::int64_t n = 0; n < start; ++n) excl.push_back(n);
      excl.insert(excl.end(), c.excluded.begin(), c.excluded.end());
    } else {
      for (std::int64_t m = 0; m < start + c.offset; ++m) excl.push_back(m);
      for (auto n : c.excluded) excl.push_back(n + c.offset);
    }
    result = unite(result, DescribedSubset::cofinite(target, std::move(excl)));
  }
  return result;
}

std::vector<Point> points_below(const DescribedSubset& d, std::int64_t bound) {
  std::vector<Point> out;
  switch (d.shape()) {
    case DescribedSubset::Shape::Finite:
      for (auto e : d.elements())
        if (d.index().kind() == IndexTerm::Kind::FinSet || e < bound) out.push_back(Point::nat(e));
      return out;
    case DescribedSubset::Shape::Cofinite:
      for (std::int64_t e = 0; e < bound; ++e)
        if (!has(d.elements(), e)) out.push_back(Point::nat(e));
      return out;
    case DescribedSubset::Shape::Pair:
      for (auto& p : points_below(d.left(), bound)) out.push_back(Point::left(std::move(p)));
      for (auto& p : points_below(d.right(), bound)) out.push_back(Point::right(std::move(p)));
      return out;
    case DescribedSubset::Shape::Union:
      for (const auto& c : d.components()) {
        if (c.kind == ProductComponent::Kind::Rect) {
          const auto xs = points_below(*c.first, bound);
          const auto ys = points_below(*c.second, bound);
          for (const auto& x : xs)
            for (const auto& y : ys) out.push_back(Point::pair(x, y));
        } else {
          for (std::int64_t n = c.graph_start(); n < bound && n + c.offset < bound; ++n)
            if (!has(c.excluded, n)) out.push_back(Point::pair(Point::nat(n), Point::nat(n + c.offset)));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
  }
  return out;
}

std::vector<Point> index_points_below(const IndexTerm& index, std::int64_t bound) {
  return points_below(DescribedSubset::full(index), bound);
}

// ---------------------------------------------------------------------------
// Parsing

IndexTerm parse_index_term(dsl::Lexer& lex) {
  const dsl::Token head = lex.peek();
  if (lex.accept("Atom")) return IndexTerm::atom(lex.expect_identifier("atom name"));
  if (lex.accept("FinSet")) {
    const dsl::Token t = lex.peek();
    const std::int64_t n = lex.expect_integer("cardinality");
    if (n < 0) lex.fail_at(t, "FinSet cardinality must be >= 0");
    return IndexTerm::finset(n);
  }
  const bool is_sum = lex.accept("Sum");
  if (is_sum || lex.accept("Prod")) {
    lex.expect("(", "'('");
    IndexTerm l = parse_index_term(lex);
    lex.expect(",", "','");
    IndexTerm r = parse_index_term(lex);
    lex.expect(")", "')'");
    return is_sum ? IndexTerm::sum(std::move(l), std::move(r)) : IndexTerm::prod(std::move(l), std::move(r));
  }
  lex.fail_at(head, "expected index term (Atom, FinSet, Sum, Prod)");
}

namespace {

std::vector<std::int64_t> parse_int_list(dsl::Lexer& lex) {
  std::vector<std::int64_t> out;
  lex.expect("{", "'{'");
  if (lex.accept("}")) return out;
  do {
    out.push_back(lex.expect_integer("integer"));
  } while (lex.accept(","));
  lex.expect("}", "'}' or ','");
  return out;
}

template <typename F>
auto typed(dsl::Lexer& lex, const dsl::Token& at, F&& build) {
  try {
    return build();
  } catch (const TypeError& e) {
    lex.type_error_at(at, e.what());
  }
}

void collect_components(dsl::Lexer& lex, const IndexTerm& index, std::vector<ProductComponent>& out) {
  const DescribedSubset part = parse_subset(lex, index);
  for (const auto& c : part.components()) out.push_back(c);
}

}  // namespace

DescribedSubset parse_subset(dsl::Lexer& lex, const IndexTerm& index) {
  const dsl::Token head = lex.peek();
  if (lex.accept("Fin")) {
    auto elems = parse_int_list(lex);
    return typed(lex, head, [&] { return DescribedSubset::finite(index, std::move(elems)); });
  }
  if (lex.accept("Cofin")) {
    auto elems = parse_int_list(lex);
    return typed(lex, head, [&] { return DescribedSubset::cofinite(index, std::move(elems)); });
  }
  if (lex.accept("Pair")) {
    if (index.kind() != IndexTerm::Kind::Sum) lex.type_error_at(head, "Pair requires a Sum index, got " + index.to_string());
    lex.expect("(", "'('");
    DescribedSubset l = parse_subset(lex, index.left());
    lex.expect(",", "','");
    DescribedSubset r = parse_subset(lex, index.right());
    lex.expect(")", "')'");
    return DescribedSubset::pair(std::move(l), std::move(r));
  }
  if (lex.accept("Rect")) {
    if (index.kind() != IndexTerm::Kind::Prod) lex.type_error_at(head, "Rect requires a Prod index, got " + index.to_string());
    lex.expect("(", "'('");
    DescribedSubset a = parse_subset(lex, index.left());
    lex.expect(",", "','");
    DescribedSubset b = parse_subset(lex, index.right());
    lex.expect(")", "')'");
    return DescribedSubset::rect(std::move(a), std::move(b));
  }
  if (lex.accept("Graph")) {
    lex.expect("(", "'('");
    const std::int64_t k = lex.expect_integer("graph offset");
    std::vector<std::int64_t> excl;
    if (lex.accept(",")) {
      lex.expect("excl", "'excl'");
      excl = parse_int_list(lex);
    }
    lex.expect(")", "')'");
    return typed(lex, head, [&] { return DescribedSubset::graph(index, k, std::move(excl)); });
  }
  if (lex.accept("Union")) {
    if (index.kind() != IndexTerm::Kind::Prod) lex.type_error_at(head, "Union requires a Prod index, got " + index.to_string());
    lex.expect("(", "'('");
    std::vector<ProductComponent> comps;
    if (!lex.accept(")")) {
      do {
        collect_components(lex, index, comps);
      } while (lex.accept(","));
      lex.expect(")", "')' or ','");
    }
    return DescribedSubset::union_of(index, std::move(comps));
  }
  lex.fail_at(head, "expected subset (Fin, Cofin, Pair, Rect, Graph, Union)");
}

IndexTerm parse_index_term(std::string_view text) {
  dsl::Lexer lex(text);
  IndexTerm t = parse_index_term(lex);
  if (!lex.at_end()) lex.fail("expected end of input");
  return t;
}

DescribedSubset parse_subset(std::string_view text, const IndexTerm& index) {
  dsl::Lexer lex(text);
  DescribedSubset d = parse_subset(lex, index);
  if (!lex.at_end()) lex.fail("expected end of input");
  return d;
}

}  // namespace refcalc
