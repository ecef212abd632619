#include "refcalc/scalar.hpp"

#include <sstream>

#include "refcalc/errors.hpp"

namespace refcalc {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool same_ring(const ResidueRing& a, const ResidueRing& b) {
  return &a == &b || (a.base() == b.base() && a.modulus() == b.modulus());
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw DomainMismatch("scalar domain mismatch: " + a.domain_name() + " vs " + b.domain_name());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 97) throw TypeError("prime field characteristic must be a prime <= 97, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint32_t p = 0;
    for (char c : text.substr(3)) {
      if (c < '0' || c > '9') throw TypeError("bad field name '" + std::string(text) + "'");
      p = p * 10 + static_cast<std::uint32_t>(c - '0');
      if (p > 1000) break;
    }
    if (text.size() == 3) throw TypeError("bad field name '" + std::string(text) + "'");
    return prime(p);
  }
  throw TypeError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::uint64_t Field::size() const {
  if (!finite()) throw TypeError("the rationals are not enumerable");
  return p_;
}

std::string Field::name() const { return kind_ == Kind::Rational ? "Q" : "Fp:" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Rational) return Scalar(mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(PrimeElem{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::Rational) return Scalar(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw DomainMismatch("denominator divisible by the characteristic " + std::to_string(p_));
  if (num < 0) num += p_;
  std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
  return Scalar(PrimeElem{static_cast<std::uint32_t>(std::uint64_t(n) * mod_inverse(d, p_) % p_), p_});
}

Scalar Field::element(std::uint64_t index) const {
  if (!finite() || index >= p_) throw TypeError("field element index out of range");
  return Scalar(PrimeElem{static_cast<std::uint32_t>(index), p_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw TypeError("bad scalar literal '" + s + "'");
  if (q.get_den() == 0) throw TypeError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

bool Field::contains(const Scalar& s) const {
  if (kind_ == Kind::Rational) return s.is_rational();
  return s.is_prime() && s.prime_elem().p == p_;
}

// ---------------------------------------------------------------------------

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return rational() == 0;
    case 1: return prime_elem().value == 0;
    default:
      for (const auto& c : residue().coeffs)
        if (!c.is_zero()) return false;
      return true;
  }
}

bool Scalar::is_one() const { return *this == one_like(); }

Scalar Scalar::zero_like() const { return int_like(0); }
Scalar Scalar::one_like() const { return int_like(1); }

Scalar Scalar::int_like(std::int64_t n) const {
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(static_cast<long>(n)));
    case 1: return Field::prime(prime_elem().p).from_int(n);
    default: return residue().ring->embed(residue().ring->base().from_int(n));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainMismatch("division by zero");
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(1) / rational());
    case 1: return Scalar(PrimeElem{mod_inverse(prime_elem().value, prime_elem().p), prime_elem().p});
    default: throw DomainMismatch("inverse in a quotient ring is not supported");
  }
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: return rational().get_str();
    case 1: return std::to_string(prime_elem().value);
    default: {
      std::ostringstream os;
      os << '[';
      const auto& c = residue().coeffs;
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].to_string();
      os << ']';
      return os.str();
    }
  }
}

std::string Scalar::domain_name() const {
  switch (value_.index()) {
    case 0: return "Q";
    case 1: return "Fp:" + std::to_string(prime_elem().p);
    default: {
      const auto& ring = *residue().ring;
      std::string g;
      for (std::size_t i = 0; i < ring.modulus().size(); ++i) g += (i ? "," : "") + ring.modulus()[i].to_string();
      return ring.base().name() + "[t]/(" + g + ")";
    }
  }
}

bool Scalar::same_domain(const Scalar& o) const {
  if (value_.index() != o.value_.index()) return false;
  switch (value_.index()) {
    case 0: return true;
    case 1: return prime_elem().p == o.prime_elem().p;
    default: return same_ring(*residue().ring, *o.residue().ring);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!same_domain(o)) mismatch(*this, o);
  switch (value_.index()) {
    case 0: std::get<mpq_class>(value_) += o.rational(); break;
    case 1: {
      auto& e = std::get<PrimeElem>(value_);
      e.value = (e.value + o.prime_elem().value) % e.p;
      break;
    }
    default: {
      auto& r = std::get<Residue>(value_);
      for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += o.residue().coeffs[i];
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!same_domain(o)) mismatch(*this, o);
  switch (value_.index()) {
    case 0: std::get<mpq_class>(value_) *= o.rational(); break;
    case 1: {
      auto& e = std::get<PrimeElem>(value_);
      e.value = static_cast<std::uint32_t>(std::uint64_t(e.value) * o.prime_elem().value % e.p);
      break;
    }
    default: {
      auto& r = std::get<Residue>(value_);
      r.coeffs = r.ring->multiply(r.coeffs, o.residue().coeffs);
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (!same_domain(o)) mismatch(*this, o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  switch (value_.index()) {
    case 0: return Scalar(mpq_class(-rational()));
    case 1: {
      const auto& e = prime_elem();
      return Scalar(PrimeElem{e.value == 0 ? 0 : e.p - e.value, e.p});
    }
    default: {
      Residue r = residue();
      for (auto& c : r.coeffs) c = -c;
      return Scalar(std::move(r));
    }
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.same_domain(b)) return false;
  switch (a.value_.index()) {
    case 0: return a.rational() == b.rational();
    case 1: return a.prime_elem().value == b.prime_elem().value;
    default: return a.residue().coeffs == b.residue().coeffs;
  }
}

// ---------------------------------------------------------------------------

std::shared_ptr<const ResidueRing> ResidueRing::make(Field base, std::vector<Scalar> modulus, std::string name) {
  if (modulus.size() < 2 || modulus.size() > 5) throw TypeError("quotient modulus degree must be between 1 and 4");
  for (const auto& c : modulus)
    if (!base.contains(c)) throw DomainMismatch("modulus coefficient outside the base field");
  if (!modulus.back().is_one()) throw TypeError("quotient modulus must be monic");
  return std::shared_ptr<const ResidueRing>(new ResidueRing(base, std::move(modulus), std::move(name)));
}

Scalar ResidueRing::element(std::vector<Scalar> coeffs) const {
  if (coeffs.size() != degree()) throw TypeError("residue coefficient count must equal the modulus degree");
  for (const auto& c : coeffs)
    if (!base_.contains(c)) throw DomainMismatch("residue coefficient outside the base field");
  return Scalar(Residue{shared_from_this(), std::move(coeffs)});
}

Scalar ResidueRing::embed(const Scalar& s) const {
  std::vector<Scalar> c(degree(), base_.zero());
  c[0] = s;
  return element(std::move(c));
}

Scalar ResidueRing::zero() const { return embed(base_.zero()); }
Scalar ResidueRing::one() const { return embed(base_.one()); }

Scalar ResidueRing::generator() const {
  std::vector<Scalar> padded(degree(), base_.zero());
  if (degree() >= 2) {
    padded[1] = base_.one();
    return element(std::move(padded));
  }
  // t = -g0 in K[t]/(t + g0)
  padded[0] = -modulus_[0];
  return element(std::move(padded));
}

std::vector<Scalar> ResidueRing::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  const std::size_t d = degree();
  std::vector<Scalar> prod(2 * d - 1, base_.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k].is_zero()) continue;
    const Scalar lead = prod[k];
    for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] -= lead * modulus_[i];
  }
  prod.resize(d);
  return prod;
}

}  // namespace refcalc
