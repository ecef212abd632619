#include "refcalc/linrec.hpp"

#include <algorithm>

#include "refcalc/errors.hpp"
#include "refcalc/matrix.hpp"

namespace refcalc {

std::string to_string(LinRecStructure s) { return s == LinRecStructure::Additive ? "additive" : "multiplicative"; }

Vector LinRecFunctional::values(std::size_t count) const {
  const std::size_t d = degree();
  Vector out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n < d) {
      out.push_back(init[n]);
      continue;
    }
    Scalar next = field.zero();
    for (std::size_t i = 0; i < d; ++i) next -= modulus[i] * out[n - d + i];
    out.push_back(std::move(next));
  }
  return out;
}

Scalar LinRecFunctional::value(std::size_t n) const { return values(n + 1).back(); }

bool LinRecFunctional::annihilates_upto(std::size_t n) const {
  const std::size_t d = degree();
  const Vector a = values(n + d + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Scalar s = field.zero();
    for (std::size_t i = 0; i <= d; ++i) s += modulus[i] * a[m + i];
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string LinRecFunctional::to_string() const {
  std::string s = "linrec(" + field.name() + ", f=" + poly_to_string(modulus) + ", init=[";
  for (std::size_t i = 0; i < init.size(); ++i) s += (i ? "," : "") + init[i].to_string();
  return s + "], structure=" + refcalc::to_string(structure) + ")";
}

LinRecFunctional linrec_from_recurrence(const Field& k, const Poly& f, Vector init, LinRecStructure structure) {
  const Poly g = poly_trim(f);
  if (!poly_is_monic(g)) throw TypeError("recurrence modulus must be monic");
  if (init.size() != g.size() - 1)
    throw TypeError("need " + std::to_string(g.size() - 1) + " initial values, got " + std::to_string(init.size()));
  for (const auto& v : init)
    if (!k.contains(v)) throw DomainMismatch("initial value " + v.to_string() + " is not in " + k.name());
  return LinRecFunctional{k, g, std::move(init), structure};
}

namespace {

void require_compatible(const LinRecFunctional& a, const LinRecFunctional& b) {
  if (a.structure != b.structure)
    throw TypeError("cannot multiply " + to_string(a.structure) + " and " + to_string(b.structure) + " functionals");
  if (!(a.field == b.field)) throw TypeError("functionals over " + a.field.name() + " and " + b.field.name());
}

}  // namespace

Vector product_values(const LinRecFunctional& a, const LinRecFunctional& b, std::size_t count) {
  require_compatible(a, b);
  const Vector x = a.values(count), y = b.values(count);
  const Field& k = a.field;
  Vector out;
  if (a.structure == LinRecStructure::Multiplicative) {
    for (std::size_t n = 0; n < count; ++n) out.push_back(x[n] * y[n]);
    return out;
  }
  Vector binom{k.one()};  // row n of Pascal's triangle in K
  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) {
      Vector next(n + 1, k.one());
      for (std::size_t i = 1; i < n; ++i) next[i] = binom[i - 1] + binom[i];
      binom = std::move(next);
    }
    Scalar s = k.zero();
    for (std::size_t i = 0; i <= n; ++i) s += binom[i] * x[i] * y[n - i];
    out.push_back(std::move(s));
  }
  return out;
}

Poly companion_product_modulus(const LinRecFunctional& a, const LinRecFunctional& b) {
  require_compatible(a, b);
  const Field& k = a.field;
  if (a.degree() == 0 || b.degree() == 0) return {k.one()};
  const Matrix ca = companion_matrix(k, a.modulus), cb = companion_matrix(k, b.modulus);
  if (a.structure == LinRecStructure::Multiplicative) return characteristic_polynomial(kronecker(ca, cb));
  const Matrix sum = kronecker(ca, Matrix::identity(k, b.degree())) + kronecker(Matrix::identity(k, a.degree()), cb);
  return characteristic_polynomial(sum);
}

Poly minimal_annihilator(const Field& k, const Vector& seq, std::size_t bound) {
  const std::size_t rows = 2 * bound + 1;
  if (seq.size() < rows + bound) throw TypeError("sequence prefix too short for the Hankel search");
  for (std::size_t e = 0; e <= bound; ++e) {
    Matrix h(k, rows, e + 1);
    for (std::size_t n = 0; n < rows; ++n)
      for (std::size_t i = 0; i <= e; ++i) h(n, i) = seq[n + i];
    for (const auto& v : kernel_basis(h)) {
      if (v[e].is_zero()) continue;
      const Scalar lead = v[e];
      Poly out;
      for (const auto& c : v) out.push_back(c / lead);
      return out;
    }
  }
  throw TypeError("no linear relation of degree <= " + std::to_string(bound));
}

LinRecFunctional linrec_product(const LinRecFunctional& a, const LinRecFunctional& b) {
  const Poly bound_poly = companion_product_modulus(a, b);
  const std::size_t bound = bound_poly.size() - 1;
  const Vector seq = product_values(a, b, 3 * bound + 1);
  Poly h = minimal_annihilator(a.field, seq, bound);
  Vector init(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(h.size() - 1));
  return LinRecFunctional{a.field, std::move(h), std::move(init), a.structure};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

LinRecFunctional parse_linrec(std::string_view text) {
  const std::string t = trim(text);
  auto fail = [&](const std::string& msg, std::size_t col) -> void { throw ParseError("linrec: " + msg, 1, col); };
  if (!t.starts_with("linrec(") || !t.ends_with(")")) fail("expected linrec(...)", 1);
  // Split the argument list on commas outside brackets.
  std::vector<std::pair<std::string, std::size_t>> parts;
  std::size_t depth = 0, start = 7;
  for (std::size_t i = 7; i + 1 < t.size(); ++i) {
    if (t[i] == '[') ++depth;
    if (t[i] == ']') {
      if (depth == 0) fail("unbalanced ']'", i + 1);
      --depth;
    }
    if (t[i] == ',' && depth == 0) {
      parts.emplace_back(t.substr(start, i - start), start + 1);
      start = i + 1;
    }
  }
  parts.emplace_back(t.substr(start, t.size() - 1 - start), start + 1);
  if (parts.size() != 4) fail("expected field, f=, init=, structure=", 8);
  Field k = Field::rationals();
  try {
    k = Field::parse(trim(parts[0].first));
  } catch (const TypeError& e) {
    fail(e.what(), parts[0].second);
  }
  std::string f_text, init_text, structure_text;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string p = trim(parts[i].first);
    const auto eq = p.find('=');
    if (eq == std::string::npos) fail("expected key=value", parts[i].second);
    const std::string key = trim(p.substr(0, eq)), val = trim(p.substr(eq + 1));
    if (key == "f") f_text = val;
    else if (key == "init") init_text = val;
    else if (key == "structure") structure_text = val;
    else fail("unknown key '" + key + "'", parts[i].second);
  }
  if (f_text.empty() || init_text.empty() || structure_text.empty()) fail("missing f, init or structure", 1);
  LinRecStructure structure = LinRecStructure::Additive;
  if (structure_text == "multiplicative") structure = LinRecStructure::Multiplicative;
  else if (structure_text != "additive") fail("structure must be additive or multiplicative", 1);
  if (init_text.front() != '[' || init_text.back() != ']') fail("init must be a [..] list", 1);
  Vector init;
  const std::string body = init_text.substr(1, init_text.size() - 2);
  std::size_t pos = 0;
  while (!trim(body).empty() && pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    try {
      init.push_back(k.parse_scalar(trim(body.substr(pos, comma - pos))));
    } catch (const TypeError& e) {
      fail(e.what(), 1);
    }
    pos = comma + 1;
  }
  try {
    return linrec_from_recurrence(k, parse_polynomial(f_text, k), std::move(init), structure);
  } catch (const TypeError& e) {
    throw ParseError(std::string("linrec: ") + e.what(), 1, 1);
  }
}

std::vector<Poly> bar_family(const Field& k, std::size_t max_degree) {
  if (!k.finite()) throw TypeError("the truncated quotient family needs a finite field");
  std::vector<Poly> out;
  const std::uint64_t q = k.size();
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f;
      std::uint64_t x = code;
      for (std::size_t i = 0; i < d; ++i) {
        f.push_back(k.element(x % q));
        x /= q;
      }
      f.push_back(k.one());
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace refcalc
