#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refcalc/index_language.hpp"
#include "refcalc/rng.hpp"
#include "refcalc/scalar.hpp"

namespace refcalc {

/// Generator family of subsets of an index term. Only the generated ideal
/// (downward closure plus finite unions) matters semantically.
///   FIN     all finite subsets
///   FULL    the single member {I}
///   POLAR   F° = { b : b meets every member of F in a finite set }
///   SUMFAM  { a1 + a2 } over Sum(I1, I2)
///   RECT    { a1 x a2 } over Prod(I1, I2)
class Family {
 public:
  enum class Kind { Fin, Full, Polar, SumFam, Rect };

  static Family fin(const IndexTerm& index);
  static Family full(const IndexTerm& index);
  static Family polar(Family inner);
  static Family sumfam(Family left, Family right);
  static Family rect(Family first, Family second);

  Kind kind() const;
  const IndexTerm& index() const;
  const Family& inner() const;  // Polar
  const Family& left() const;   // SumFam/Rect
  const Family& right() const;  // SumFam/Rect

  // DSL form, e.g. "RECT(POLAR(FULL), FIN)". The index is not printed.
  std::string to_string() const;
  // Number of constructors on the longest root-to-leaf path.
  int depth() const;

  friend bool operator==(const Family& a, const Family& b);

 private:
  struct Node;
  explicit Family(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Bottom-up rewriting to fixpoint: POLAR^3 -> POLAR, POLAR(FIN) -> FULL,
/// POLAR(FULL) -> FIN, POLAR(SUMFAM(a, b)) -> SUMFAM(POLAR a, POLAR b).
/// POLAR(RECT(..)) is kept as is.
Family normalize(const Family& f);
// Longest run of directly nested POLAR constructors.
int max_polar_run(const Family& f);

/// b in <F>. Throws TypeError when b and F live over different index terms.
bool member_ideal(const DescribedSubset& b, const Family& f);
/// b in F°. Throws TypeError when b and F live over different index terms.
bool member_polar(const DescribedSubset& b, const Family& f);

Family parse_family(std::string_view text, const IndexTerm& index);
Family parse_family(dsl::Lexer& lex, const IndexTerm& index);

/// Coefficient ring tag of a module object.
class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, Prime, DualNumbers };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  static CoefficientRing prime(std::uint32_t p);
  static CoefficientRing dual_numbers(std::uint32_t p);
  // "Z", "Q", "Fp:<p>", "Dual:<p>"
  static CoefficientRing parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(std::int64_t v) const;
  // Dual numbers: a + b*e from (a, b).
  Scalar from_pair(std::int64_t a, std::int64_t b) const;
  // Integer, fraction (Q only) or "a+b*e" style pair "a:b" for dual numbers.
  Scalar parse_scalar(std::string_view text) const;
  bool contains(const Scalar& s) const;
  Scalar sample(Rng& rng) const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  CoefficientRing(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// An essentially free module: elements are vectors on the index whose
/// supports lie in family°. The family is stored normalized.
struct ModuleObject {
  Family family;
  CoefficientRing ring;

  static ModuleObject make(const Family& family, const CoefficientRing& ring);
  const IndexTerm& index() const { return family.index(); }
  std::string to_string() const;
  friend bool operator==(const ModuleObject&, const ModuleObject&) = default;
};

ModuleObject dual(const ModuleObject& m);

enum class BuildKind { Product, Hom, DualTensor, TensorReflexive, TildeTensorOfDuals };
std::string to_string(BuildKind k);
std::optional<BuildKind> parse_build_kind(std::string_view name);

/// Throws TypeError when the coefficient rings differ.
ModuleObject build(BuildKind kind, const ModuleObject& m, const ModuleObject& n);

struct EqualityOutcome {
  bool consistent = true;
  std::optional<DescribedSubset> counterexample;
  std::size_t checked = 0;
};

/// Compares member_polar on the whole index set, then on `cases` sampled subsets;
/// sample i draws from Rng(Rng::derive(seed, i)). Throws TypeError on index mismatch.
EqualityOutcome modules_equal_randomized(const ModuleObject& m, const ModuleObject& n, std::uint64_t seed,
                                         std::size_t cases);

struct ElementTerm {
  DescribedSubset subset;
  Scalar coeff;
};

/// Finite combination sum c_k * indicator(b_k). Every b_k must lie in owner.family°.
class ModuleElement {
 public:
  // Throws TypeError if a support is outside the support ideal, lives over
  // another index, or a coefficient is not in the ring.
  ModuleElement(ModuleObject owner, std::vector<ElementTerm> terms);

  const ModuleObject& owner() const noexcept { return owner_; }
  const std::vector<ElementTerm>& terms() const noexcept { return terms_; }

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement scaled(const Scalar& c) const;
  std::string to_string() const;

 private:
  ModuleObject owner_;
  std::vector<ElementTerm> terms_;
};

/// sum_{k,l} c_k d_l |b_k ∩ g_l|. Throws TypeError unless w.owner() == dual(x.owner()),
/// ConsistencyError on an infinite intersection.
Scalar pair(const ModuleElement& x, const ModuleElement& w);

// Samplers. Atom names are drawn from {A, B}.
IndexTerm sample_index(Rng& rng, int depth = 2);
Family sample_family(Rng& rng, const IndexTerm& index, int depth = 4);
/// Finite sets (size <= 8, entries < 64), cofinite sets (<= 8 exclusions),
/// graphs with |offset| <= 4, unions of up to 3 components.
DescribedSubset sample_subset(Rng& rng, const IndexTerm& index);
/// A subset guaranteed to lie in f°: rejection sampling, falling back to a finite set.
DescribedSubset sample_support(Rng& rng, const Family& f);

/// Reference modules: sums and products over atoms, finite rank, hom and tensor shapes.
std::vector<std::pair<std::string, ModuleObject>> module_catalog(const CoefficientRing& ring);

}  // namespace refcalc
