#include "refcalc/hom_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <tuple>

#include "refcalc/errors.hpp"

namespace refcalc {

namespace {

using Digits = std::vector<std::uint32_t>;
using Assignment = std::vector<const Digits*>;

struct Constraint {
  std::vector<std::size_t> columns;
  std::function<bool(const Assignment&)> holds;
};

// Backtracking over columns. Each column ranges over all digit vectors of a
// fixed width mod p; a constraint is checked as soon as its last column is set.
// Constraints touching a single column prefilter that column's candidates.
class ColumnSearch {
 public:
  ColumnSearch(std::size_t columns, std::uint32_t p, std::size_t width)
      : columns_(columns), p_(p), width_(width) {}

  void add(std::vector<std::size_t> cols, std::function<bool(const Assignment&)> holds) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    constraints_.push_back({std::move(cols), std::move(holds)});
  }

  std::vector<std::vector<Digits>> run() {
    std::vector<std::vector<const Constraint*>> local(columns_);
    by_last_.assign(columns_, {});
    Assignment assignment(columns_, nullptr);
    for (const auto& c : constraints_) {
      if (c.columns.empty()) {
        if (!c.holds(assignment)) return {};
      } else if (c.columns.size() == 1) {
        local[c.columns.front()].push_back(&c);
      } else {
        by_last_[c.columns.back()].push_back(&c);
      }
    }
    const std::uint64_t count = saturating_power(p_, width_);
    candidates_.assign(columns_, {});
    for (std::size_t col = 0; col < columns_; ++col) {
      Digits d(width_, 0);
      for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t x = code;
        for (std::size_t t = 0; t < width_; ++t) {
          d[t] = static_cast<std::uint32_t>(x % p_);
          x /= p_;
        }
        assignment[col] = &d;
        bool ok = true;
        for (const auto* c : local[col])
          if (!c->holds(assignment)) {
            ok = false;
            break;
          }
        if (ok) candidates_[col].push_back(d);
      }
      assignment[col] = nullptr;
    }
    std::vector<std::vector<Digits>> solutions;
    dfs(0, assignment, solutions);
    return solutions;
  }

 private:
  void dfs(std::size_t col, Assignment& assignment, std::vector<std::vector<Digits>>& out) {
    if (col == columns_) {
      std::vector<Digits> sol;
      sol.reserve(columns_);
      for (const auto* d : assignment) sol.push_back(*d);
      out.push_back(std::move(sol));
      return;
    }
    for (const auto& cand : candidates_[col]) {
      assignment[col] = &cand;
      bool ok = true;
      for (const auto* c : by_last_[col])
        if (!c->holds(assignment)) {
          ok = false;
          break;
        }
      if (ok) dfs(col + 1, assignment, out);
    }
    assignment[col] = nullptr;
  }

  std::size_t columns_;
  std::uint32_t p_;
  std::size_t width_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<const Constraint*>> by_last_;
  std::vector<std::vector<Digits>> candidates_;
};

std::uint32_t residue_of(const Scalar& s) { return s.prime_elem().value; }

// Dense copy of structure constants reduced to machine integers mod p.
struct IntTensor {
  std::size_t n = 0;
  std::vector<std::uint32_t> data;
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return data[(i * n + j) * n + k]; }
};

IntTensor to_ints(const Tensor3& t) {
  IntTensor out{t.extent(), {}};
  out.data.reserve(t.extent() * t.extent() * t.extent());
  for (std::size_t i = 0; i < t.extent(); ++i)
    for (std::size_t j = 0; j < t.extent(); ++j)
      for (std::size_t k = 0; k < t.extent(); ++k) out.data.push_back(residue_of(t(i, j, k)));
  return out;
}

Digits to_ints(const Vector& v) {
  Digits out;
  for (const auto& s : v) out.push_back(residue_of(s));
  return out;
}

std::uint32_t require_prime_field(const Field& f, const char* what) {
  if (!f.finite()) throw TypeError(std::string(what) + " requires a finite base field");
  return f.characteristic();
}

// Sum_k coeff[k] * cols[k] over the given columns.
Digits combination(const std::vector<std::pair<std::size_t, std::uint32_t>>& terms, const Assignment& cols,
                   std::size_t width, std::uint32_t p) {
  Digits out(width, 0);
  for (const auto& [k, c] : terms) {
    const Digits& v = *cols[k];
    for (std::size_t t = 0; t < width; ++t) out[t] = static_cast<std::uint32_t>((out[t] + std::uint64_t(c) * v[t]) % p);
  }
  return out;
}

Matrix to_matrix(const Field& f, const std::vector<Digits>& columns, std::size_t rows) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = f.from_int(columns[c][r]);
  return m;
}

}  // namespace

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

std::uint64_t default_guard() {
  if (const char* env = std::getenv("REFCALC_GUARD_MAX")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultGuard;
}

std::vector<Matrix> enumerate_algebra_homs(const FdAlgebra& a, const TestAlgebra& s, std::uint64_t guard) {
  a.validate_shape();
  if (!s.enumerable()) throw TypeError("test algebra " + s.name() + " is not enumerable");
  if (!(a.field == s.base())) throw DomainMismatch("algebra over " + a.field.name() + " but test algebra over " + s.base().name());
  const std::uint32_t p = require_prime_field(a.field, "enumerate_algebra_homs");
  const std::size_t n = a.dim();
  const std::size_t r = s.dim();
  const std::uint64_t space = saturating_power(s.element_count(), n);
  if (space > guard)
    throw GuardExceeded("|S|^dim A = " + std::to_string(s.element_count()) + "^" + std::to_string(n) +
                        " exceeds the guard " + std::to_string(guard));

  const IntTensor m = to_ints(a.mult);
  const Digits unit = to_ints(a.unit);
  const Digits g = to_ints(s.modulus());

  auto mul_s = [p, r, g](const Digits& x, const Digits& y) {
    std::vector<std::uint64_t> prod(2 * r - 1, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % p;
    for (std::size_t k = prod.size(); k-- > r;) {
      const std::uint64_t lead = prod[k];
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= r; ++i) prod[k - r + i] = (prod[k - r + i] + (p - lead) * g[i]) % p;
    }
    Digits out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  };

  ColumnSearch search(n, p, r);
  {
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (unit[i] != 0) {
        terms.emplace_back(i, unit[i]);
        cols.push_back(i);
      }
    Digits one(r, 0);
    one[0] = 1;
    search.add(cols, [terms, one, r, p](const Assignment& f) { return combination(terms, f, r, p) == one; });
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, std::uint32_t>> terms;
      std::vector<std::size_t> cols{i, j};
      for (std::size_t k = 0; k < n; ++k)
        if (m(i, j, k) != 0) {
          terms.emplace_back(k, m(i, j, k));
          cols.push_back(k);
        }
      search.add(cols, [=](const Assignment& f) { return mul_s(*f[i], *f[j]) == combination(terms, f, r, p); });
    }

  std::vector<Matrix> out;
  for (const auto& sol : search.run()) out.push_back(to_matrix(a.field, sol, r));
  return out;
}

std::vector<Matrix> enumerate_bialgebra_homs(const FdBialgebra& b, const FdBialgebra& target, std::uint64_t guard) {
  b.validate_shape();
  target.validate_shape();
  if (!(b.field() == target.field())) throw DomainMismatch("bialgebras over different fields");
  const std::uint32_t p = require_prime_field(b.field(), "enumerate_bialgebra_homs");
  const std::size_t n = b.dim();
  const std::size_t w = target.dim();
  const std::uint64_t per_column = saturating_power(p, w);
  const std::uint64_t space = per_column > UINT64_MAX / std::max<std::size_t>(n, 1) ? UINT64_MAX : per_column * n;
  if (space > guard)
    throw GuardExceeded("dim B * |K|^dim B' = " + std::to_string(n) + "*" + std::to_string(p) + "^" + std::to_string(w) +
                        " exceeds the guard " + std::to_string(guard));

  const IntTensor m = to_ints(b.algebra.mult);
  const IntTensor d = to_ints(b.coalgebra.comult);
  const Digits unit = to_ints(b.algebra.unit);
  const Digits counit = to_ints(b.coalgebra.counit);
  const IntTensor tm = to_ints(target.algebra.mult);
  const IntTensor td = to_ints(target.coalgebra.comult);
  const Digits tunit = to_ints(target.algebra.unit);
  const Digits tcounit = to_ints(target.coalgebra.counit);

  auto mul_t = [=](const Digits& x, const Digits& y) {
    std::vector<std::uint64_t> acc(w, 0);
    for (std::size_t i = 0; i < w; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < w; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t c = std::uint64_t(x[i]) * y[j] % p;
        for (std::size_t k = 0; k < w; ++k) acc[k] = (acc[k] + c * tm(i, j, k)) % p;
      }
    }
    return Digits(acc.begin(), acc.end());
  };

  ColumnSearch search(n, p, w);
  // counit first: cheapest local filter
  for (std::size_t k = 0; k < n; ++k)
    search.add({k}, [=](const Assignment& f) {
      std::uint64_t e = 0;
      const Digits& v = *f[k];
      for (std::size_t t = 0; t < w; ++t) e = (e + std::uint64_t(tcounit[t]) * v[t]) % p;
      return e == counit[k];
    });
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> terms;
    std::vector<std::size_t> cols{k};
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        if (d(k, a, c) != 0) {
          terms.emplace_back(a, c, d(k, a, c));
          cols.push_back(a);
          cols.push_back(c);
        }
    search.add(cols, [=](const Assignment& f) {
      const Digits& v = *f[k];
      // lhs = Delta'(f_k), rhs = sum d_kac f_a (x) f_c, compared entrywise
      std::vector<std::uint64_t> lhs(w * w, 0), rhs(w * w, 0);
      for (std::size_t t = 0; t < w; ++t) {
        if (v[t] == 0) continue;
        for (std::size_t i = 0; i < w; ++i)
          for (std::size_t j = 0; j < w; ++j) lhs[i * w + j] = (lhs[i * w + j] + std::uint64_t(v[t]) * td(t, i, j)) % p;
      }
      for (const auto& [a, c, coef] : terms) {
        const Digits& x = *f[a];
        const Digits& y = *f[c];
        for (std::size_t i = 0; i < w; ++i) {
          if (x[i] == 0) continue;
          const std::uint64_t xi = std::uint64_t(coef) * x[i] % p;
          for (std::size_t j = 0; j < w; ++j) rhs[i * w + j] = (rhs[i * w + j] + xi * y[j]) % p;
        }
      }
      return lhs == rhs;
    });
  }
  {
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (unit[i] != 0) {
        terms.emplace_back(i, unit[i]);
        cols.push_back(i);
      }
    search.add(cols, [=](const Assignment& f) { return combination(terms, f, w, p) == tunit; });
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::pair<std::size_t, std::uint32_t>> terms;
      std::vector<std::size_t> cols{i, j};
      for (std::size_t k = 0; k < n; ++k)
        if (m(i, j, k) != 0) {
          terms.emplace_back(k, m(i, j, k));
          cols.push_back(k);
        }
      search.add(cols, [=](const Assignment& f) { return mul_t(*f[i], *f[j]) == combination(terms, f, w, p); });
    }

  std::vector<Matrix> out;
  for (const auto& sol : search.run()) out.push_back(to_matrix(b.field(), sol, w));
  return out;
}

}  // namespace refcalc
