#include "refcalc/profinite.hpp"

#include <algorithm>
#include <sstream>

#include "refcalc/errors.hpp"

namespace refcalc {

void AlgebraTower::validate() const {
  if (levels.empty()) throw TypeError("a tower needs at least one level");
  if (transitions.size() + 1 != levels.size()) throw TypeError("a tower of depth n needs n-1 transitions");
  for (const auto& a : levels) a.validate_shape();
  for (std::size_t n = 0; n < transitions.size(); ++n) {
    const Matrix& t = transitions[n];
    const std::string at = "transition " + std::to_string(n + 1);
    if (t.rows() != levels[n].dim() || t.cols() != levels[n + 1].dim()) throw TypeError(at + " has the wrong shape");
    if (!is_algebra_morphism(t, levels[n + 1], levels[n])) throw TypeError(at + " is not an algebra morphism");
    if (rank(t) != levels[n].dim()) throw TypeError(at + " is not surjective");
  }
}

Matrix AlgebraTower::to_level(std::size_t n) const {
  Matrix m = Matrix::identity(top().field, top().dim());
  for (std::size_t i = levels.size() - 1; i > n; --i) m = transitions[i - 1] * m;
  return m;
}

AlgebraTower AlgebraTower::prefix(std::size_t d) const {
  if (d == 0 || d > depth()) throw TypeError("prefix depth out of range");
  AlgebraTower t;
  t.levels.assign(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(d));
  t.transitions.assign(transitions.begin(), transitions.begin() + static_cast<std::ptrdiff_t>(d - 1));
  return t;
}

AlgebraTower adic_tower(const Field& k, const Poly& f, std::size_t depth) {
  if (depth == 0) throw TypeError("tower depth must be at least 1");
  const int deg = poly_degree(f);
  if (deg < 1 || !poly_is_monic(f)) throw TypeError("tower generator must be monic of degree >= 1");
  if (static_cast<std::size_t>(deg) * depth > kMaxTowerDimension)
    throw TypeError("deg(f) * depth exceeds " + std::to_string(kMaxTowerDimension));
  AlgebraTower t;
  for (std::size_t n = 1; n <= depth; ++n) t.levels.push_back(polynomial_quotient_algebra(k, poly_pow(k, f, static_cast<unsigned>(n))));
  // Quotient map on monomials: x^j mod f^n.
  for (std::size_t n = 1; n < depth; ++n) {
    const Poly target = poly_pow(k, f, static_cast<unsigned>(n));
    const std::size_t rows = t.levels[n - 1].dim(), cols = t.levels[n].dim();
    Matrix m(k, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Poly mono(j + 1, k.zero());
      mono.back() = k.one();
      const Poly r = poly_mod(k, mono, target);
      for (std::size_t i = 0; i < r.size() && i < rows; ++i) m(i, j) = r[i];
    }
    t.transitions.push_back(std::move(m));
  }
  t.validate();
  return t;
}

std::vector<Matrix> spec_points(const FdAlgebra& a, const TestAlgebra& s, std::uint64_t guard) {
  return enumerate_algebra_homs(a, s, guard);
}

std::vector<Matrix> spec_points(const AlgebraTower& t, const TestAlgebra& s, std::uint64_t guard) {
  std::vector<Matrix> out;
  for (std::size_t n = 0; n < t.depth(); ++n) {
    const Matrix pull = t.to_level(n);
    for (const auto& p : enumerate_algebra_homs(t.levels[n], s, guard)) out.push_back(p * pull);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool depth_stable(const AlgebraTower& t, const TestAlgebra& s, std::uint64_t guard) {
  if (t.depth() < 2) return true;
  const Matrix last = t.transitions.back();
  std::vector<Matrix> shorter;
  for (const auto& p : spec_points(t.prefix(t.depth() - 1), s, guard)) shorter.push_back(p * last);
  std::sort(shorter.begin(), shorter.end());
  return shorter == spec_points(t, s, guard);
}

Scalar point_value(const Matrix& point, const TestAlgebra& s, std::size_t i) { return s.from_coeffs(point.column(i)); }

FdCoalgebra finite_dual(const FdAlgebra& a) { return dualize(a); }

std::string group_name(const std::vector<std::uint32_t>& orders) {
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "xZ/" : "Z/") + std::to_string(orders[i]);
  return s;
}

namespace {

Scalar power(Scalar base, std::uint32_t e) {
  Scalar out = base.one_like();
  for (std::uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

// Hom_monoid(G, (S, *)) by images of the cyclic generators, as dim S x |G| matrices.
std::vector<Matrix> brute_force_characters(const std::vector<std::uint32_t>& orders, const TestAlgebra& s) {
  const std::uint64_t n = group_order(orders);
  std::vector<std::vector<Scalar>> roots;  // per factor: s with s^order = 1
  for (auto o : orders) {
    std::vector<Scalar> r;
    for (std::uint64_t i = 0; i < s.element_count(); ++i) {
      Scalar x = s.element(i);
      if (power(x, o) == s.one()) r.push_back(std::move(x));
    }
    roots.push_back(std::move(r));
  }
  std::vector<Matrix> out;
  std::vector<std::size_t> choice(orders.size(), 0);
  for (;;) {
    Matrix m(s.base(), s.dim(), n);
    for (std::uint64_t g = 0; g < n; ++g) {
      const auto digits = group_element(orders, g);
      Scalar v = s.one();
      for (std::size_t f = 0; f < orders.size(); ++f) v *= power(roots[f][choice[f]], digits[f]);
      for (std::size_t r = 0; r < s.dim(); ++r) m(r, g) = v.residue().coeffs[r];
    }
    out.push_back(std::move(m));
    std::size_t f = 0;
    while (f < orders.size() && ++choice[f] == roots[f].size()) choice[f++] = 0;
    if (f == orders.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (p * q)(e_k) = sum_{i,j} Delta(k, i, j) p(e_i) q(e_j).
Matrix convolve(const Matrix& p, const Matrix& q, const FdCoalgebra& c, const TestAlgebra& s) {
  const std::size_t n = c.dim();
  Matrix out(s.base(), s.dim(), n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar v = s.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.comult(k, i, j).is_zero()) v += s.embed(c.comult(k, i, j)) * point_value(p, s, i) * point_value(q, s, j);
    for (std::size_t r = 0; r < s.dim(); ++r) out(r, k) = v.residue().coeffs[r];
  }
  return out;
}

}  // namespace

CartierReport cartier_check(const std::vector<std::uint32_t>& orders, const Field& k, const TestAlgebra& s,
                            std::uint64_t guard) {
  if (group_order(orders) > 8) throw TypeError("Cartier check is limited to groups of order <= 8");
  CartierReport rep;
  rep.group = group_name(orders);
  rep.algebra = s.name();
  const FdBialgebra b = group_algebra(k, orders);
  const FdBialgebra b2 = function_algebra(k, orders);
  rep.dual_matches = same_structure(dualize(b), b2);
  rep.double_dual = identical(dualize(dualize(b)), b);

  // The Cartier dual of the constant group is Spec of the dual of its function algebra.
  const FdBialgebra d = dualize(b2);
  auto points = spec_points(d.algebra, s, guard);
  std::sort(points.begin(), points.end());
  const auto brute = brute_force_characters(orders, s);
  rep.points = points.size();
  rep.brute_points = brute.size();
  rep.points_match = points == brute;

  rep.product_matches = true;
  for (const auto& p : points)
    for (const auto& q : points) {
      const Matrix pq = convolve(p, q, d.coalgebra, s);
      Matrix pointwise(s.base(), s.dim(), d.dim());
      for (std::size_t g = 0; g < d.dim(); ++g) {
        const Scalar v = point_value(p, s, g) * point_value(q, s, g);
        for (std::size_t r = 0; r < s.dim(); ++r) pointwise(r, g) = v.residue().coeffs[r];
      }
      if (pq != pointwise || !std::binary_search(points.begin(), points.end(), pq)) rep.product_matches = false;
    }

  rep.passed = rep.dual_matches && rep.double_dual && rep.points_match && rep.product_matches;
  std::ostringstream os;
  os << rep.group << " over " << k.name() << " at " << s.name() << ": " << rep.points << " points, brute force "
     << rep.brute_points;
  if (!rep.dual_matches) os << ", dual of K[G] differs from K^G";
  if (!rep.double_dual) os << ", double dual differs";
  if (!rep.product_matches) os << ", convolution differs from pointwise product";
  rep.detail = os.str();
  return rep;
}

}  // namespace refcalc
