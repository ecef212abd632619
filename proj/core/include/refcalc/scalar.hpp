#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace refcalc {

class Scalar;
class ResidueRing;

struct PrimeElem {
  std::uint32_t value = 0;
  std::uint32_t p = 2;
  friend bool operator==(const PrimeElem&, const PrimeElem&) = default;
};

// Element of K[t]/(g); coeffs has length deg g, lowest degree first.
struct Residue {
  std::shared_ptr<const ResidueRing> ring;
  std::vector<Scalar> coeffs;
};

/// A base field: the rationals or a prime field F_p with p <= 97.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  static Field prime(std::uint32_t p);
  // "Q" or "Fp:<p>"
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool finite() const noexcept { return kind_ == Kind::Prime; }
  std::uint64_t size() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  // i-th element in canonical order (finite fields only): 0, 1, ..., p-1.
  Scalar element(std::uint64_t index) const;
  // Integer "a", fraction "a/b", or a decimal-free negative "-a/b".
  Scalar parse_scalar(std::string_view text) const;
  bool contains(const Scalar& s) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact scalar: arbitrary-precision rational, element of F_p, or a residue class
/// in a quotient ring K[t]/(g). Arithmetic between different domains throws
/// DomainMismatch.
class Scalar {
 public:
  using Storage = std::variant<mpq_class, PrimeElem, Residue>;

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(PrimeElem e) : value_(e) {}
  explicit Scalar(Residue r) : value_(std::move(r)) {}

  bool is_rational() const noexcept { return value_.index() == 0; }
  bool is_prime() const noexcept { return value_.index() == 1; }
  bool is_residue() const noexcept { return value_.index() == 2; }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const PrimeElem& prime_elem() const { return std::get<PrimeElem>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  bool is_zero() const;
  bool is_one() const;
  Scalar zero_like() const;
  Scalar one_like() const;
  // The integer n embedded in this scalar's domain.
  Scalar int_like(std::int64_t n) const;

  Scalar inverse() const;
  std::string to_string() const;
  // Identifies the domain: "Q", "Fp:5", or "Fp:5[t]/(...)".
  std::string domain_name() const;
  bool same_domain(const Scalar& other) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Storage value_;
};

/// The quotient ring K[t]/(g) for a monic modulus g of degree 1..4.
class ResidueRing : public std::enable_shared_from_this<ResidueRing> {
 public:
  // modulus lists the coefficients of g lowest degree first; the leading one must be 1.
  static std::shared_ptr<const ResidueRing> make(Field base, std::vector<Scalar> modulus, std::string name = {});

  const Field& base() const noexcept { return base_; }
  const std::vector<Scalar>& modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  const std::string& name() const noexcept { return name_; }

  Scalar element(std::vector<Scalar> coeffs) const;
  Scalar embed(const Scalar& base_scalar) const;
  Scalar zero() const;
  Scalar one() const;
  // The class of t.
  Scalar generator() const;

  // Multiplication on coefficient vectors (used by Scalar).
  std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

 private:
  ResidueRing(Field base, std::vector<Scalar> modulus, std::string name)
      : base_(base), modulus_(std::move(modulus)), name_(std::move(name)) {}
  Field base_;
  std::vector<Scalar> modulus_;
  std::string name_;
};

}  // namespace refcalc
