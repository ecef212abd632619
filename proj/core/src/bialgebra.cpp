#include "refcalc/bialgebra.hpp"

#include <algorithm>
#include <sstream>

#include "refcalc/errors.hpp"

namespace refcalc {

namespace {

Tensor3 zero_tensor(const Field& k, std::size_t n) { return Tensor3(k, n); }

Vector unit_vector(const Field& k, std::size_t n, std::size_t i) {
  Vector v(n, k.zero());
  v.at(i) = k.one();
  return v;
}

std::string join_digits(const std::vector<std::uint32_t>& digits) {
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? "_" : "") + std::to_string(digits[i]);
  return s;
}

std::uint64_t add_index(const std::vector<std::uint32_t>& orders, std::uint64_t a, std::uint64_t b) {
  auto x = group_element(orders, a);
  const auto y = group_element(orders, b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % orders[i];
  return group_index(orders, x);
}

std::string toggle_star(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

std::vector<std::string> toggled(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(toggle_star(l));
  return out;
}

std::string idx(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Groups

std::uint64_t group_order(const std::vector<std::uint32_t>& orders) {
  std::uint64_t n = 1;
  for (auto o : orders) {
    if (o == 0) throw TypeError("cyclic factor of order 0");
    n *= o;
  }
  return n;
}

std::vector<std::uint32_t> group_element(const std::vector<std::uint32_t>& orders, std::uint64_t index) {
  std::vector<std::uint32_t> out;
  for (auto o : orders) {
    out.push_back(static_cast<std::uint32_t>(index % o));
    index /= o;
  }
  return out;
}

std::uint64_t group_index(const std::vector<std::uint32_t>& orders, const std::vector<std::uint32_t>& element) {
  std::uint64_t index = 0;
  for (std::size_t i = orders.size(); i-- > 0;) index = index * orders[i] + element[i];
  return index;
}

// ---------------------------------------------------------------------------
// Catalog

FdAlgebra polynomial_quotient_algebra(const Field& k, const Poly& monic) {
  if (!poly_is_monic(monic) || poly_degree(monic) < 1) throw TypeError("modulus must be monic of degree >= 1");
  const std::size_t d = static_cast<std::size_t>(poly_degree(monic));
  FdAlgebra a{k, {}, zero_tensor(k, d), unit_vector(k, d, 0)};
  for (std::size_t i = 0; i < d; ++i) a.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Poly mono(i + j + 1, k.zero());
      mono.back() = k.one();
      const Poly r = poly_mod(k, mono, monic);
      for (std::size_t t = 0; t < r.size() && t < d; ++t) a.mult(i, j, t) = r[t];
    }
  return a;
}

FdAlgebra tensor_product(const FdAlgebra& a, const FdAlgebra& b) {
  if (!(a.field == b.field)) throw DomainMismatch("tensor product of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  FdAlgebra out{a.field, {}, zero_tensor(a.field, n), Vector(n, a.field.zero())};
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      out.labels.push_back(a.labels[i] + "." + b.labels[j]);
      out.unit[i * nb + j] = a.unit[i] * b.unit[j];
    }
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < na; ++i2)
      for (std::size_t k1 = 0; k1 < na; ++k1) {
        if (a.mult(i1, i2, k1).is_zero()) continue;
        for (std::size_t j1 = 0; j1 < nb; ++j1)
          for (std::size_t j2 = 0; j2 < nb; ++j2)
            for (std::size_t k2 = 0; k2 < nb; ++k2)
              out.mult(i1 * nb + j1, i2 * nb + j2, k1 * nb + k2) = a.mult(i1, i2, k1) * b.mult(j1, j2, k2);
      }
  return out;
}

FdAlgebra base_field_as_algebra(const Field& k) {
  FdAlgebra a{k, {"1"}, zero_tensor(k, 1), {k.one()}};
  a.mult(0, 0, 0) = k.one();
  return a;
}

FdBialgebra group_algebra(const Field& k, const std::vector<std::uint32_t>& orders) {
  const std::size_t n = group_order(orders);
  FdBialgebra b{FdAlgebra{k, {}, zero_tensor(k, n), unit_vector(k, n, 0)},
                FdCoalgebra{k, {}, zero_tensor(k, n), Vector(n, k.one())}};
  for (std::size_t g = 0; g < n; ++g) {
    b.algebra.labels.push_back("g" + join_digits(group_element(orders, g)));
    b.coalgebra.comult(g, g, g) = k.one();
    for (std::size_t h = 0; h < n; ++h) b.algebra.mult(g, h, add_index(orders, g, h)) = k.one();
  }
  b.coalgebra.labels = b.algebra.labels;
  return b;
}

FdBialgebra function_algebra(const Field& k, const std::vector<std::uint32_t>& orders) {
  const std::size_t n = group_order(orders);
  FdBialgebra b{FdAlgebra{k, {}, zero_tensor(k, n), Vector(n, k.one())},
                FdCoalgebra{k, {}, zero_tensor(k, n), unit_vector(k, n, 0)}};
  for (std::size_t g = 0; g < n; ++g) {
    b.algebra.labels.push_back("d" + join_digits(group_element(orders, g)));
    b.algebra.mult(g, g, g) = k.one();
    for (std::size_t h = 0; h < n; ++h) b.coalgebra.comult(add_index(orders, g, h), g, h) = k.one();
  }
  b.coalgebra.labels = b.algebra.labels;
  return b;
}

FdBialgebra mu_n(const Field& k, std::uint32_t n) {
  if (n == 0) throw TypeError("mu_n needs n >= 1");
  Poly f(n + 1, k.zero());
  f[0] = -k.one();
  f[n] = k.one();
  FdBialgebra b{polynomial_quotient_algebra(k, f), FdCoalgebra{k, {}, zero_tensor(k, n), Vector(n, k.one())}};
  for (std::size_t i = 0; i < n; ++i) b.coalgebra.comult(i, i, i) = k.one();
  b.coalgebra.labels = b.algebra.labels;
  return b;
}

FdBialgebra alpha_p(const Field& k) {
  if (!k.finite()) throw TypeError("alpha_p needs a prime field");
  const std::uint32_t p = k.characteristic();
  Poly f(p + 1, k.zero());
  f[p] = k.one();
  FdBialgebra b{polynomial_quotient_algebra(k, f), FdCoalgebra{k, {}, zero_tensor(k, p), unit_vector(k, p, 0)}};
  // Delta x^n = sum_i C(n, i) x^i (x) x^(n-i)
  for (std::size_t n = 0; n < p; ++n) {
    Scalar binom = k.one();  // i + 1 < p, so the division is exact in K
    for (std::size_t i = 0; i <= n; ++i) {
      b.coalgebra.comult(n, i, n - i) = binom;
      if (i < n) binom = binom * k.from_int(static_cast<std::int64_t>(n - i)) / k.from_int(static_cast<std::int64_t>(i + 1));
    }
  }
  b.coalgebra.labels = b.algebra.labels;
  return b;
}

FdBialgebra base_field_bialgebra(const Field& k) {
  FdBialgebra b{base_field_as_algebra(k), FdCoalgebra{k, {"1"}, zero_tensor(k, 1), {k.one()}}};
  b.coalgebra.comult(0, 0, 0) = k.one();
  return b;
}

std::vector<CatalogEntry> bialgebra_catalog(const Field& k) {
  std::vector<CatalogEntry> out;
  for (std::uint32_t n = 1; n <= 6; ++n) out.push_back({"K[Z/" + std::to_string(n) + "]", group_algebra(k, {n})});
  out.push_back({"K[Z/2xZ/2]", group_algebra(k, {2, 2})});
  for (std::uint32_t n = 1; n <= 6; ++n) out.push_back({"K^Z/" + std::to_string(n), function_algebra(k, {n})});
  out.push_back({"K^(Z/2xZ/2)", function_algebra(k, {2, 2})});
  for (std::uint32_t n = 2; n <= 4; ++n) out.push_back({"mu_" + std::to_string(n), mu_n(k, n)});
  if (k.finite()) out.push_back({"alpha_" + std::to_string(k.characteristic()), alpha_p(k)});
  for (auto& e : out) e.name += " over " + k.name();
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

bool AxiomReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

const LawResult* AxiomReport::first_failure() const {
  for (const auto& l : laws)
    if (!l.pass) return &l;
  return nullptr;
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  for (const auto& l : laws) {
    os << l.law << ": " << (l.pass ? "pass" : "FAIL");
    if (!l.pass) os << " at " << idx(l.witness) << " " << l.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

LawResult law_assoc(const FdAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector jk = a.multiply(a.basis_vector(j), a.basis_vector(k));
        if (a.multiply(ij, a.basis_vector(k)) != a.multiply(a.basis_vector(i), jk))
          return {"assoc", false, {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)"};
      }
    }
  return {"assoc", true, {}, {}};
}

LawResult law_unit(const FdAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector e = a.basis_vector(i);
    if (a.multiply(a.unit, e) != e) return {"unit", false, {i}, "1 e_i != e_i"};
    if (a.multiply(e, a.unit) != e) return {"unit", false, {i}, "e_i 1 != e_i"};
  }
  return {"unit", true, {}, {}};
}

LawResult law_coassoc(const FdCoalgebra& c) {
  const std::size_t n = c.dim();
  const Field& k = c.field;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<Scalar> lhs(n * n * n, k.zero()), rhs(n * n * n, k.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& dij = c.comult(e, i, j);
        if (dij.is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            // (Delta (x) id): split the left factor i; (id (x) Delta): split the right factor j
            if (!c.comult(i, x, y).is_zero()) lhs[(x * n + y) * n + j] += dij * c.comult(i, x, y);
            if (!c.comult(j, x, y).is_zero()) rhs[(i * n + x) * n + y] += dij * c.comult(j, x, y);
          }
      }
    for (std::size_t t = 0; t < lhs.size(); ++t)
      if (lhs[t] != rhs[t]) return {"coassoc", false, {e, t / (n * n), (t / n) % n, t % n}, "(D (x) id) D != (id (x) D) D"};
  }
  return {"coassoc", true, {}, {}};
}

LawResult law_counit(const FdCoalgebra& c) {
  const std::size_t n = c.dim();
  for (std::size_t e = 0; e < n; ++e) {
    Vector left(n, c.field.zero()), right(n, c.field.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        left[j] += c.comult(e, i, j) * c.counit[i];
        right[i] += c.comult(e, i, j) * c.counit[j];
      }
    const Vector want = unit_vector(c.field, n, e);
    if (left != want) return {"counit", false, {e}, "(eps (x) id) D e_k != e_k"};
    if (right != want) return {"counit", false, {e}, "(id (x) eps) D e_k != e_k"};
  }
  return {"counit", true, {}, {}};
}

// Product in A (x) A of two flattened tensors.
Vector tensor_square_multiply(const FdAlgebra& a, const Vector& u, const Vector& v) {
  const std::size_t n = a.dim();
  Vector out(n * n, a.field.zero());
  for (std::size_t p = 0; p < n * n; ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < n * n; ++q) {
      if (v[q].is_zero()) continue;
      const Scalar c = u[p] * v[q];
      const std::size_t a1 = p / n, b1 = p % n, a2 = q / n, b2 = q % n;
      for (std::size_t x = 0; x < n; ++x) {
        if (a.mult(a1, a2, x).is_zero()) continue;
        for (std::size_t y = 0; y < n; ++y)
          if (!a.mult(b1, b2, y).is_zero()) out[x * n + y] += c * a.mult(a1, a2, x) * a.mult(b1, b2, y);
      }
    }
  }
  return out;
}

LawResult law_delta_mult(const FdBialgebra& b) {
  const FdAlgebra& a = b.algebra;
  const FdCoalgebra& c = b.coalgebra;
  const std::size_t n = a.dim();
  std::vector<Vector> deltas;
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(c.comultiply(a.basis_vector(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.comultiply(a.multiply(a.basis_vector(i), a.basis_vector(j))) !=
          tensor_square_multiply(a, deltas[i], deltas[j]))
        return {"delta-mult", false, {i, j}, "D(e_i e_j) != D(e_i) D(e_j)"};
  return {"delta-mult", true, {}, {}};
}

LawResult law_eps_mult(const FdBialgebra& b) {
  const FdAlgebra& a = b.algebra;
  const FdCoalgebra& c = b.coalgebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (c.apply_counit(a.multiply(a.basis_vector(i), a.basis_vector(j))) != c.counit[i] * c.counit[j])
        return {"eps-mult", false, {i, j}, "eps(e_i e_j) != eps(e_i) eps(e_j)"};
  return {"eps-mult", true, {}, {}};
}

LawResult law_unit_grouplike(const FdBialgebra& b) {
  const FdAlgebra& a = b.algebra;
  const std::size_t n = a.dim();
  Vector square(n * n, a.field.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) square[i * n + j] = a.unit[i] * a.unit[j];
  const Vector delta = b.coalgebra.comultiply(a.unit);
  for (std::size_t k = 0; k < n * n; ++k)
    if (delta[k] != square[k]) return {"unit-grouplike", false, {k / n, k % n}, "D(1) != 1 (x) 1 at e_i (x) e_j"};
  if (!b.coalgebra.apply_counit(a.unit).is_one()) return {"unit-grouplike", false, {}, "eps(1) != 1"};
  return {"unit-grouplike", true, {}, {}};
}

}  // namespace

AxiomReport check_axioms(const FdAlgebra& a) {
  a.validate_shape();
  return AxiomReport{{law_assoc(a), law_unit(a)}};
}

AxiomReport check_axioms(const FdCoalgebra& c) {
  c.validate_shape();
  return AxiomReport{{law_coassoc(c), law_counit(c)}};
}

AxiomReport check_axioms(const FdBialgebra& b) {
  b.validate_shape();
  return AxiomReport{{law_assoc(b.algebra), law_unit(b.algebra), law_coassoc(b.coalgebra), law_counit(b.coalgebra),
                      law_delta_mult(b), law_eps_mult(b), law_unit_grouplike(b)}};
}

std::vector<Mutation> mutations(const FdBialgebra& b) {
  const std::size_t last = b.dim() - 1;
  const Scalar one = b.field().one();
  std::vector<Mutation> out;
  auto add = [&](std::string what, auto&& edit) {
    FdBialgebra m = b;
    edit(m);
    out.push_back({std::move(what), std::move(m)});
  };
  add("unit[0] += 1", [&](FdBialgebra& m) { m.algebra.unit[0] += one; });
  add("counit[0] += 1", [&](FdBialgebra& m) { m.coalgebra.counit[0] += one; });
  add("mult(0,0,0) += 1", [&](FdBialgebra& m) { m.algebra.mult(0, 0, 0) += one; });
  add("comult(0,0,0) += 1", [&](FdBialgebra& m) { m.coalgebra.comult(0, 0, 0) += one; });
  add("mult(n-1,n-1,0) += 1", [&](FdBialgebra& m) { m.algebra.mult(last, last, 0) += one; });
  add("comult(0,n-1,n-1) += 1", [&](FdBialgebra& m) { m.coalgebra.comult(0, last, last) += one; });
  return out;
}

// ---------------------------------------------------------------------------
// Duality

FdCoalgebra dualize(const FdAlgebra& a) {
  const std::size_t n = a.dim();
  FdCoalgebra c{a.field, toggled(a.labels), zero_tensor(a.field, n), a.unit};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c.comult(k, i, j) = a.mult(i, j, k);
  return c;
}

FdAlgebra dualize(const FdCoalgebra& c) {
  const std::size_t n = c.dim();
  FdAlgebra a{c.field, toggled(c.labels), zero_tensor(c.field, n), c.counit};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.mult(i, j, k) = c.comult(k, i, j);
  return a;
}

FdBialgebra dualize(const FdBialgebra& b) { return FdBialgebra{dualize(b.coalgebra), dualize(b.algebra)}; }

bool same_structure(const FdAlgebra& a, const FdAlgebra& b) {
  return a.field == b.field && a.mult == b.mult && a.unit == b.unit;
}

bool same_structure(const FdCoalgebra& a, const FdCoalgebra& b) {
  return a.field == b.field && a.comult == b.comult && a.counit == b.counit;
}

bool same_structure(const FdBialgebra& a, const FdBialgebra& b) {
  return same_structure(a.algebra, b.algebra) && same_structure(a.coalgebra, b.coalgebra);
}

bool identical(const FdBialgebra& a, const FdBialgebra& b) {
  return same_structure(a, b) && a.algebra.labels == b.algebra.labels && a.coalgebra.labels == b.coalgebra.labels;
}

Matrix dual_morphism(const Matrix& f) { return f.transpose(); }

bool is_algebra_morphism(const Matrix& f, const FdAlgebra& from, const FdAlgebra& to) {
  if (f.cols() != from.dim() || f.rows() != to.dim()) throw TypeError("morphism matrix has the wrong shape");
  if (f.apply(from.unit) != to.unit) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < from.dim(); ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < from.dim(); ++i)
    for (std::size_t j = 0; j < from.dim(); ++j)
      if (f.apply(from.multiply(from.basis_vector(i), from.basis_vector(j))) != to.multiply(images[i], images[j]))
        return false;
  return true;
}

bool is_coalgebra_morphism(const Matrix& f, const FdCoalgebra& from, const FdCoalgebra& to) {
  if (f.cols() != from.dim() || f.rows() != to.dim()) throw TypeError("morphism matrix has the wrong shape");
  const std::size_t n = from.dim(), m = to.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (to.apply_counit(f.column(k)) != from.counit[k]) return false;
    const Vector d = from.comultiply(unit_vector(from.field, n, k));
    Vector pushed(m * m, to.field.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i * n + j].is_zero()) continue;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) pushed[a * m + b] += d[i * n + j] * f(a, i) * f(b, j);
      }
    if (pushed != to.comultiply(f.column(k))) return false;
  }
  return true;
}

bool is_bialgebra_morphism(const Matrix& f, const FdBialgebra& from, const FdBialgebra& to) {
  return is_algebra_morphism(f, from.algebra, to.algebra) && is_coalgebra_morphism(f, from.coalgebra, to.coalgebra);
}

// ---------------------------------------------------------------------------
// Modules

void FdModule::validate(const FdAlgebra& a) const {
  if (action.size() != a.dim()) throw TypeError("module needs one action matrix per algebra basis vector");
  const std::size_t d = dim();
  for (const auto& m : action)
    if (m.rows() != d || m.cols() != d || !(m.field() == a.field))
      throw TypeError("action matrices must be square of a common size over the algebra's field");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix rhs(a.field, d, d);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.mult(i, j, k).is_zero()) {
          Matrix scaled = action[k];
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) scaled(r, c) *= a.mult(i, j, k);
          rhs = rhs + scaled;
        }
      if (action[i] * action[j] != rhs)
        throw TypeError("action is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  Matrix u(a.field, d, d);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) u(r, c) += a.unit[i] * action[i](r, c);
  if (u != Matrix::identity(a.field, d)) throw TypeError("the unit does not act as the identity");
}

FdModule regular_module(const FdAlgebra& a) {
  FdModule m;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix rho(a.field, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) rho(k, j) = a.mult(i, j, k);
    m.action.push_back(std::move(rho));
  }
  m.validate(a);
  return m;
}

FdModule polynomial_module(const FdAlgebra& a, const Matrix& x_action) {
  FdModule m;
  Matrix power = Matrix::identity(a.field, x_action.rows());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m.action.push_back(power);
    power = power * x_action;
  }
  m.validate(a);
  return m;
}

namespace {

// Residual f rho_i - rho'_i f for every i, with f given as a d' x d grid of entries
// in any ring containing K (embedded through `lift`).
template <typename Lift>
std::vector<Scalar> residual(const FdModule& m, const FdModule& m2, const std::vector<Scalar>& f, Lift lift,
                             const Scalar& zero) {
  const std::size_t d = m.dim(), d2 = m2.dim();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < m.action.size(); ++i)
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Scalar acc = zero;
        for (std::size_t t = 0; t < d; ++t)
          if (!m.action[i](t, c).is_zero()) acc += f[r * d + t] * lift(m.action[i](t, c));
        for (std::size_t t = 0; t < d2; ++t)
          if (!m2.action[i](r, t).is_zero()) acc -= lift(m2.action[i](r, t)) * f[t * d + c];
        out.push_back(std::move(acc));
      }
  return out;
}

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

std::vector<Matrix> hom_space_basis(const FdAlgebra& a, const FdModule& m, const FdModule& m2) {
  m.validate(a);
  m2.validate(a);
  const Field& k = a.field;
  const std::size_t d = m.dim(), d2 = m2.dim(), unknowns = d * d2;
  auto id = [](const Scalar& s) { return s; };
  std::vector<Vector> columns;
  for (std::size_t u = 0; u < unknowns; ++u) {
    std::vector<Scalar> f(unknowns, k.zero());
    f[u] = k.one();
    columns.push_back(residual(m, m2, f, id, k.zero()));
  }
  const std::size_t eqs = a.dim() * d * d2;
  std::vector<Matrix> out;
  if (unknowns == 0) return out;
  for (const auto& v : kernel_basis(Matrix::from_columns(k, eqs, columns))) {
    Matrix f(k, d2, d);
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d; ++c) f(r, c) = v[r * d + c];
    out.push_back(std::move(f));
  }
  return out;
}

HomBaseChangeReport hom_base_change_check(const FdAlgebra& a, const FdModule& m, const FdModule& m2,
                                          const TestAlgebra& s, std::uint64_t guard) {
  if (!(a.field == s.base())) throw DomainMismatch("algebra over " + a.field.name() + ", test algebra over " + s.base().name());
  HomBaseChangeReport rep;
  rep.algebra = s.name();
  const Field& k = a.field;
  const std::size_t d = m.dim(), d2 = m2.dim(), g = s.dim(), cells = d * d2;
  const auto base = hom_space_basis(a, m, m2);
  rep.base_dim = base.size();
  rep.expected_nullity = rep.base_dim * g;

  auto lift = [&s](const Scalar& x) { return s.embed(x); };
  auto s_residual = [&](const std::vector<Scalar>& f) { return residual(m, m2, f, lift, s.zero()); };

  // K-linear system for F in S^{d' x d}: column u is the residual of the u-th
  // K-basis vector, read in K-coordinates.
  std::vector<Vector> columns;
  for (std::size_t cell = 0; cell < cells; ++cell)
    for (std::size_t t = 0; t < g; ++t) {
      std::vector<Scalar> f(cells, s.zero());
      Vector coeffs(g, k.zero());
      coeffs[t] = k.one();
      f[cell] = s.from_coeffs(coeffs);
      Vector col;
      for (const auto& r : s_residual(f))
        for (const auto& c : r.residue().coeffs) col.push_back(c);
      columns.push_back(std::move(col));
    }
  const std::size_t eqs = a.dim() * cells * g;
  rep.extended_nullity = cells == 0 ? 0 : kernel_basis(Matrix::from_columns(k, eqs, columns)).size();

  rep.span_contained = true;
  for (const auto& f : base)
    for (std::size_t t = 0; t < g && rep.span_contained; ++t) {
      std::vector<Scalar> lifted;
      Vector coeffs(g, k.zero());
      coeffs[t] = k.one();
      const Scalar basis_t = s.from_coeffs(coeffs);
      for (std::size_t r = 0; r < d2; ++r)
        for (std::size_t c = 0; c < d; ++c) lifted.push_back(s.embed(f(r, c)) * basis_t);
      rep.span_contained = all_zero(s_residual(lifted));
    }

  rep.expected_count = saturating_power(s.element_count(), rep.base_dim);
  const std::uint64_t space = saturating_power(s.element_count(), cells);
  if (space <= std::min<std::uint64_t>(guard, 1u << 16)) {
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < space; ++code) {
      std::vector<Scalar> f;
      std::uint64_t x = code;
      for (std::size_t c = 0; c < cells; ++c) {
        f.push_back(s.element(x % s.element_count()));
        x /= s.element_count();
      }
      if (all_zero(s_residual(f))) ++count;
    }
    rep.brute_force_count = count;
  }

  // Morphism criterion on elementary maps and the base basis.
  std::vector<Matrix> probes = base;
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      Matrix e(k, d2, d);
      e(r, c) = k.one();
      probes.push_back(std::move(e));
    }
  rep.criterion_ok = true;
  auto id = [](const Scalar& x) { return x; };
  for (const auto& f : probes) {
    std::vector<Scalar> flat, lifted;
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        flat.push_back(f(r, c));
        lifted.push_back(s.embed(f(r, c)));
      }
    if (all_zero(residual(m, m2, flat, id, k.zero())) != all_zero(s_residual(lifted))) rep.criterion_ok = false;
  }

  rep.passed = rep.extended_nullity == rep.expected_nullity && rep.span_contained && rep.criterion_ok &&
               (!rep.brute_force_count || *rep.brute_force_count == rep.expected_count);
  std::ostringstream os;
  os << "dim Hom_A = " << rep.base_dim << ", nullity over " << s.name() << " = " << rep.extended_nullity
     << " (expected " << rep.expected_nullity << ")";
  if (rep.brute_force_count) os << ", brute force " << *rep.brute_force_count << " of " << rep.expected_count;
  if (!rep.span_contained) os << ", base-changed basis not contained";
  if (!rep.criterion_ok) os << ", morphism criterion violated";
  rep.detail = os.str();
  return rep;
}

namespace {

std::vector<TestAlgebra> probe_catalog(const Field& k) {
  if (k.finite()) return test_algebra_catalog(k);
  return {base_field_algebra(k), dual_numbers(k), split_idempotent_algebra(k)};
}

std::size_t rank_of(const Field& k, std::size_t rows, const std::vector<Vector>& cols) {
  if (cols.empty()) return 0;
  return rank(Matrix::from_columns(k, rows, cols));
}

bool stable_over(const FdModule& m, const std::vector<Vector>& w, const TestAlgebra& s, const Field& k) {
  const std::size_t d = m.dim(), g = s.dim();
  auto flatten = [&](const std::vector<Scalar>& v) {
    Vector out;
    for (const auto& x : v)
      for (const auto& c : x.residue().coeffs) out.push_back(c);
    return out;
  };
  std::vector<std::vector<Scalar>> span;  // w (x) t^j in S^d
  for (const auto& vec : w)
    for (std::size_t j = 0; j < g; ++j) {
      Vector coeffs(g, k.zero());
      coeffs[j] = k.one();
      const Scalar t = s.from_coeffs(coeffs);
      std::vector<Scalar> lifted;
      for (const auto& x : vec) lifted.push_back(s.embed(x) * t);
      span.push_back(std::move(lifted));
    }
  std::vector<Vector> basis;
  for (const auto& v : span) basis.push_back(flatten(v));
  const std::size_t r = rank_of(k, d * g, basis);
  for (const auto& rho : m.action)
    for (std::size_t j = 0; j < g; ++j) {
      Vector coeffs(g, k.zero());
      coeffs[j] = k.one();
      const Scalar t = s.from_coeffs(coeffs);
      for (const auto& v : span) {
        std::vector<Scalar> image(d, s.zero());
        for (std::size_t row = 0; row < d; ++row)
          for (std::size_t c = 0; c < d; ++c)
            if (!rho(row, c).is_zero()) image[row] += s.embed(rho(row, c)) * v[c];
        for (auto& x : image) x *= t;
        auto extended = basis;
        extended.push_back(flatten(image));
        if (rank_of(k, d * g, extended) != r) return false;
      }
    }
  return true;
}

}  // namespace

SubmoduleReport submodule_stability_check(const FdAlgebra& a, const FdModule& m, const std::vector<Vector>& w,
                                          bool extend_on_failure) {
  m.validate(a);
  const Field& k = a.field;
  const std::size_t d = m.dim();
  for (const auto& v : w)
    if (v.size() != d) throw TypeError("subspace vector has the wrong length");
  SubmoduleReport rep;
  const std::size_t r = rank_of(k, d, w);
  rep.base_stable = true;
  for (const auto& rho : m.action)
    for (const auto& v : w) {
      auto extended = w;
      extended.push_back(rho.apply(v));
      if (rank_of(k, d, extended) != r) rep.base_stable = false;
    }
  rep.consistent = true;
  if (rep.base_stable || extend_on_failure) {
    for (const auto& s : probe_catalog(k)) {
      const bool ok = stable_over(m, w, s, k);
      rep.extended.emplace_back(s.name(), ok);
      if (ok != rep.base_stable) rep.consistent = false;
    }
  }
  std::ostringstream os;
  os << (rep.base_stable ? "stable" : "not stable") << " at the base";
  for (const auto& [name, ok] : rep.extended) os << "; " << name << ": " << (ok ? "stable" : "not stable");
  rep.detail = os.str();
  return rep;
}

}  // namespace refcalc
