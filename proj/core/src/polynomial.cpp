#include "refcalc/polynomial.hpp"

#include <cctype>

#include "refcalc/errors.hpp"

namespace refcalc {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(out));
}

Poly poly_pow(const Field& f, const Poly& a, unsigned e) {
  Poly result{f.one()};
  for (unsigned i = 0; i < e; ++i) result = poly_mul(f, result, a);
  return result;
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& monic) {
  if (!poly_is_monic(monic)) throw TypeError("poly_mod requires a monic divisor");
  Poly r = poly_trim(a);
  const std::size_t d = monic.size() - 1;
  while (r.size() > d) {
    const Scalar lead = r.back();
    const std::size_t shift = r.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) r[shift + i] -= lead * monic[i];
    r = poly_trim(std::move(r));
  }
  (void)f;
  return r;
}

int poly_degree(const Poly& p) { return static_cast<int>(poly_trim(p).size()) - 1; }

bool poly_is_monic(const Poly& p) { return !p.empty() && p.back().is_one(); }

std::string poly_to_string(const Poly& p, char var) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero()) continue;
    std::string c = p[k].to_string();
    bool negative = p[k].is_rational() && p[k].rational() < 0;
    if (negative) c = c.substr(1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const bool unit = (c == "1");
    if (k == 0) out += c;
    else {
      if (!unit) out += c + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Poly parse_polynomial(std::string_view text, const Field& field, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial", 1, 1);
  Poly out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, i + 1); };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::string coef;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) coef += s[i++];
    if (i < s.size() && s[i] == '*') {
      if (coef.empty()) fail("missing coefficient before '*'");
      ++i;
    }
    std::size_t exponent = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) fail("missing exponent");
        exponent = std::stoul(e);
        if (exponent > 4096) fail("exponent too large");
      }
    } else if (coef.empty()) {
      fail("expected a coefficient or '" + std::string(1, var) + "'");
    }
    Scalar c = coef.empty() ? field.one() : field.parse_scalar(coef);
    if (negative) c = -c;
    if (out.size() <= exponent) out.resize(exponent + 1, field.zero());
    out[exponent] += c;
  }
  return poly_trim(std::move(out));
}

Matrix companion_matrix(const Field& f, const Poly& monic) {
  if (!poly_is_monic(monic)) throw TypeError("companion matrix requires a monic polynomial");
  const std::size_t d = monic.size() - 1;
  Matrix c(f, d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = f.one();
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -monic[i];
  return c;
}

}  // namespace refcalc
