#include "refcalc/support_calculus.hpp"

#include <algorithm>
#include <charconv>

#include "refcalc/dsl.hpp"
#include "refcalc/errors.hpp"

namespace refcalc {

struct Family::Node {
  Kind kind;
  IndexTerm index;
  std::vector<Family> kids;
};

Family Family::fin(const IndexTerm& index) { return Family(std::make_shared<const Node>(Node{Kind::Fin, index, {}})); }

Family Family::full(const IndexTerm& index) { return Family(std::make_shared<const Node>(Node{Kind::Full, index, {}})); }

Family Family::polar(Family inner) {
  IndexTerm idx = inner.index();
  return Family(std::make_shared<const Node>(Node{Kind::Polar, std::move(idx), {std::move(inner)}}));
}

Family Family::sumfam(Family l, Family r) {
  IndexTerm idx = IndexTerm::sum(l.index(), r.index());
  return Family(std::make_shared<const Node>(Node{Kind::SumFam, std::move(idx), {std::move(l), std::move(r)}}));
}

Family Family::rect(Family a, Family b) {
  IndexTerm idx = IndexTerm::prod(a.index(), b.index());
  return Family(std::make_shared<const Node>(Node{Kind::Rect, std::move(idx), {std::move(a), std::move(b)}}));
}

Family::Kind Family::kind() const { return node_->kind; }
const IndexTerm& Family::index() const { return node_->index; }

const Family& Family::inner() const {
  if (node_->kind != Kind::Polar) throw TypeError("inner() on a non-POLAR family");
  return node_->kids[0];
}

const Family& Family::left() const {
  if (node_->kids.size() != 2) throw TypeError("left() on a family without two parts");
  return node_->kids[0];
}

const Family& Family::right() const {
  if (node_->kids.size() != 2) throw TypeError("right() on a family without two parts");
  return node_->kids[1];
}

std::string Family::to_string() const {
  switch (node_->kind) {
    case Kind::Fin: return "FIN";
    case Kind::Full: return "FULL";
    case Kind::Polar: return "POLAR(" + inner().to_string() + ")";
    case Kind::SumFam: return "SUMFAM(" + left().to_string() + ", " + right().to_string() + ")";
    case Kind::Rect: return "RECT(" + left().to_string() + ", " + right().to_string() + ")";
  }
  return {};
}

int Family::depth() const {
  int d = 0;
  for (const auto& k : node_->kids) d = std::max(d, k.depth());
  return d + 1;
}

bool operator==(const Family& a, const Family& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->index == b.node_->index && a.node_->kids == b.node_->kids;
}

// ---------------------------------------------------------------------------

namespace {

// POLAR applied to an already normalized family.
Family polar_of_normal(const Family& f) {
  switch (f.kind()) {
    case Family::Kind::Fin: return Family::full(f.index());
    case Family::Kind::Full: return Family::fin(f.index());
    case Family::Kind::SumFam: return Family::sumfam(polar_of_normal(f.left()), polar_of_normal(f.right()));
    case Family::Kind::Polar:
      if (f.inner().kind() == Family::Kind::Polar) return f.inner();  // P°°° = P°
      return Family::polar(f);
    case Family::Kind::Rect: return Family::polar(f);
  }
  return f;
}

}  // namespace

Family normalize(const Family& f) {
  switch (f.kind()) {
    case Family::Kind::Fin:
    case Family::Kind::Full: return f;
    case Family::Kind::Polar: return polar_of_normal(normalize(f.inner()));
    case Family::Kind::SumFam: return Family::sumfam(normalize(f.left()), normalize(f.right()));
    case Family::Kind::Rect: return Family::rect(normalize(f.left()), normalize(f.right()));
  }
  return f;
}

int max_polar_run(const Family& f) {
  switch (f.kind()) {
    case Family::Kind::Fin:
    case Family::Kind::Full: return 0;
    case Family::Kind::Polar: {
      int run = 1;
      const Family* g = &f.inner();
      while (g->kind() == Family::Kind::Polar) {
        ++run;
        g = &g->inner();
      }
      return std::max(run, max_polar_run(*g));
    }
    case Family::Kind::SumFam:
    case Family::Kind::Rect: return std::max(max_polar_run(f.left()), max_polar_run(f.right()));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Membership.
//
// Every family of this grammar covers its index and its ideal contains all
// finite sets. Over a single atom the generated ideal is therefore either the
// finite sets or everything. Both facts are used below.

namespace {

void require_same_index(const DescribedSubset& b, const Family& f) {
  if (!(b.index() == f.index()))
    throw TypeError("subset over " + b.index().to_string() + " tested against a family over " + f.index().to_string());
}

DescribedSubset single_component(const IndexTerm& index, const ProductComponent& c) {
  return DescribedSubset::union_of(index, {c});
}

bool member_double_polar(const DescribedSubset& b, const Family& g);

}  // namespace

bool member_ideal(const DescribedSubset& b, const Family& f) {
  require_same_index(b, f);
  switch (f.kind()) {
    case Family::Kind::Fin: return finiteness(b).finite;
    case Family::Kind::Full: return true;
    case Family::Kind::SumFam: return member_ideal(b.left(), f.left()) && member_ideal(b.right(), f.right());
    case Family::Kind::Rect: return member_ideal(project(b, 1), f.left()) && member_ideal(project(b, 2), f.right());
    case Family::Kind::Polar: return member_polar(b, f.inner());
  }
  return false;
}

bool member_polar(const DescribedSubset& b, const Family& f) {
  require_same_index(b, f);
  switch (f.kind()) {
    case Family::Kind::Fin: return true;
    case Family::Kind::Full: return finiteness(b).finite;
    case Family::Kind::SumFam: return member_polar(b.left(), f.left()) && member_polar(b.right(), f.right());
    case Family::Kind::Rect:
      for (const auto& c : b.components()) {
        if (c.kind == ProductComponent::Kind::Rect) {
          // (D1 x D2) ∩ (a1 x a2) is finite iff a factor is empty or both are finite.
          const bool first_ok = member_polar(*c.first, f.left()) || c.second->is_empty();
          const bool second_ok = member_polar(*c.second, f.right()) || c.first->is_empty();
          if (!first_ok || !second_ok) return false;
        } else {
          // A graph is a bijection between two cofinite sets; it meets a1 x a2
          // finitely for all members iff one factor ideal is FIN-like.
          const DescribedSubset g = single_component(b.index(), c);
          if (!member_polar(project(g, 1), f.left()) && !member_polar(project(g, 2), f.right())) return false;
        }
      }
      return true;
    case Family::Kind::Polar: return member_double_polar(b, f.inner());
  }
  return false;
}

namespace {

// b in g°°.
bool member_double_polar(const DescribedSubset& b, const Family& g) {
  switch (g.kind()) {
    case Family::Kind::Fin: return finiteness(b).finite;
    case Family::Kind::Full: return true;
    case Family::Kind::SumFam:
      return member_double_polar(b.left(), g.left()) && member_double_polar(b.right(), g.right());
    case Family::Kind::Rect:
      // An infinite set with a bad projection contains an infinite partial
      // section lying in the polar of the rectangle family, and conversely.
      return member_double_polar(project(b, 1), g.left()) && member_double_polar(project(b, 2), g.right());
    case Family::Kind::Polar: return member_polar(b, g.inner());
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

Family parse_family(dsl::Lexer& lex, const IndexTerm& index) {
  const dsl::Token head = lex.peek();
  if (lex.accept("FIN")) return Family::fin(index);
  if (lex.accept("FULL")) return Family::full(index);
  if (lex.accept("POLAR")) {
    lex.expect("(", "'('");
    Family inner = parse_family(lex, index);
    lex.expect(")", "')'");
    return Family::polar(std::move(inner));
  }
  const bool is_sum = lex.accept("SUMFAM");
  if (is_sum || lex.accept("RECT")) {
    const auto want = is_sum ? IndexTerm::Kind::Sum : IndexTerm::Kind::Prod;
    if (index.kind() != want)
      lex.type_error_at(head, std::string(is_sum ? "SUMFAM requires a Sum" : "RECT requires a Prod") +
                            " index, got " + index.to_string());
    lex.expect("(", "'('");
    Family a = parse_family(lex, index.left());
    lex.expect(",", "','");
    Family b = parse_family(lex, index.right());
    lex.expect(")", "')'");
    return is_sum ? Family::sumfam(std::move(a), std::move(b)) : Family::rect(std::move(a), std::move(b));
  }
  lex.fail_at(head, "expected family (FIN, FULL, POLAR, SUMFAM, RECT)");
}

Family parse_family(std::string_view text, const IndexTerm& index) {
  dsl::Lexer lex(text);
  Family f = parse_family(lex, index);
  if (!lex.at_end()) lex.fail("expected end of input");
  return f;
}

// ---------------------------------------------------------------------------
// Coefficient rings

namespace {

std::shared_ptr<const ResidueRing> dual_ring(std::uint32_t p) {
  const Field k = Field::prime(p);
  return ResidueRing::make(k, {k.zero(), k.zero(), k.one()}, "Fp:" + std::to_string(p) + "[e]");
}

std::uint32_t parse_modulus(std::string_view digits, std::string_view text) {
  std::uint32_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw TypeError("bad coefficient ring '" + std::string(text) + "'");
  return p;
}

}  // namespace

CoefficientRing CoefficientRing::prime(std::uint32_t p) {
  Field::prime(p);
  return CoefficientRing(Kind::Prime, p);
}

CoefficientRing CoefficientRing::dual_numbers(std::uint32_t p) {
  Field::prime(p);
  return CoefficientRing(Kind::DualNumbers, p);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) return prime(parse_modulus(text.substr(3), text));
  if (text.starts_with("Dual:")) return dual_numbers(parse_modulus(text.substr(5), text));
  throw TypeError("unknown coefficient ring '" + std::string(text) + "' (expected Z, Q, Fp:<p>, Dual:<p>)");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "Fp:" + std::to_string(p_);
    case Kind::DualNumbers: return "Dual:" + std::to_string(p_);
  }
  return {};
}

Scalar CoefficientRing::from_int(std::int64_t v) const { return from_pair(v, 0); }

Scalar CoefficientRing::from_pair(std::int64_t a, std::int64_t b) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      if (b != 0) throw TypeError("ring " + name() + " has no e component");
      return Scalar(mpq_class(mpz_class(static_cast<long>(a))));
    case Kind::Prime:
      if (b != 0) throw TypeError("ring " + name() + " has no e component");
      return Field::prime(p_).from_int(a);
    case Kind::DualNumbers: {
      const Field k = Field::prime(p_);
      return dual_ring(p_)->element({k.from_int(a), k.from_int(b)});
    }
  }
  return {};
}

Scalar CoefficientRing::parse_scalar(std::string_view text) const {
  if (kind_ == Kind::DualNumbers) {
    const Field k = Field::prime(p_);
    const auto colon = text.find(':');
    Scalar a = k.parse_scalar(text.substr(0, colon));
    Scalar b = colon == std::string_view::npos ? k.zero() : k.parse_scalar(text.substr(colon + 1));
    return dual_ring(p_)->element({a, b});
  }
  if (kind_ == Kind::Prime) return Field::prime(p_).parse_scalar(text);
  Scalar s = Field::rationals().parse_scalar(text);
  if (kind_ == Kind::Integers && s.rational().get_den() != 1)
    throw TypeError("'" + std::string(text) + "' is not an integer");
  return s;
}

bool CoefficientRing::contains(const Scalar& s) const {
  switch (kind_) {
    case Kind::Integers: return s.is_rational() && s.rational().get_den() == 1;
    case Kind::Rationals: return s.is_rational();
    case Kind::Prime: return s.is_prime() && s.prime_elem().p == p_;
    case Kind::DualNumbers: return s.same_domain(from_int(0));
  }
  return false;
}

Scalar CoefficientRing::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::Integers: return from_int(rng.range(-9, 9));
    case Kind::Rationals: return Scalar(mpq_class(mpz_class(static_cast<long>(rng.range(-9, 9))), mpz_class(static_cast<long>(rng.range(1, 5)))));
    case Kind::Prime: return from_int(rng.range(0, p_ - 1));
    case Kind::DualNumbers: return from_pair(rng.range(0, p_ - 1), rng.range(0, p_ - 1));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Modules

ModuleObject ModuleObject::make(const Family& family, const CoefficientRing& ring) {
  return ModuleObject{normalize(family), ring};
}

std::string ModuleObject::to_string() const {
  return family.to_string() + " on " + index().to_string() + " over " + ring.name();
}

ModuleObject dual(const ModuleObject& m) { return ModuleObject::make(Family::polar(m.family), m.ring); }

std::string to_string(BuildKind k) {
  switch (k) {
    case BuildKind::Product: return "product";
    case BuildKind::Hom: return "hom";
    case BuildKind::DualTensor: return "dual_tensor";
    case BuildKind::TensorReflexive: return "tensor_reflexive";
    case BuildKind::TildeTensorOfDuals: return "tilde_tensor_of_duals";
  }
  return {};
}

std::optional<BuildKind> parse_build_kind(std::string_view name) {
  for (auto k : {BuildKind::Product, BuildKind::Hom, BuildKind::DualTensor, BuildKind::TensorReflexive,
                 BuildKind::TildeTensorOfDuals})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

ModuleObject build(BuildKind kind, const ModuleObject& m, const ModuleObject& n) {
  if (!(m.ring == n.ring)) throw TypeError("coefficient mismatch: " + m.ring.name() + " vs " + n.ring.name());
  const Family& f = m.family;
  const Family& g = n.family;
  auto p = [](const Family& x) { return Family::polar(x); };
  switch (kind) {
    case BuildKind::Product: return ModuleObject::make(Family::sumfam(f, g), m.ring);
    case BuildKind::Hom: return ModuleObject::make(Family::rect(p(f), g), m.ring);
    case BuildKind::DualTensor: return ModuleObject::make(Family::rect(p(f), p(g)), m.ring);
    case BuildKind::TensorReflexive: return ModuleObject::make(p(Family::rect(p(f), p(g))), m.ring);
    case BuildKind::TildeTensorOfDuals: return ModuleObject::make(Family::rect(p(p(f)), p(p(g))), m.ring);
  }
  return m;
}

EqualityOutcome modules_equal_randomized(const ModuleObject& m, const ModuleObject& n, std::uint64_t seed,
                                         std::size_t cases) {
  if (!(m.index() == n.index()))
    throw TypeError("index mismatch: " + m.index().to_string() + " vs " + n.index().to_string());
  EqualityOutcome out;
  for (std::size_t i = 0; i <= cases; ++i) {
    DescribedSubset b = DescribedSubset::full(m.index());
    if (i > 0) {
      Rng rng(Rng::derive(seed, i - 1));
      b = sample_subset(rng, m.index());
    }
    ++out.checked;
    if (member_polar(b, m.family) != member_polar(b, n.family)) {
      out.consistent = false;
      out.counterexample = std::move(b);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elements and pairing

ModuleElement::ModuleElement(ModuleObject owner, std::vector<ElementTerm> terms)
    : owner_(std::move(owner)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!(t.subset.index() == owner_.index()))
      throw TypeError("term support " + t.subset.to_string() + " is not over " + owner_.index().to_string());
    if (!owner_.ring.contains(t.coeff))
      throw TypeError("coefficient " + t.coeff.to_string() + " is not in " + owner_.ring.name());
    if (!member_polar(t.subset, owner_.family))
      throw TypeError("support " + t.subset.to_string() + " is outside the support ideal of " + owner_.to_string());
  }
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (!(owner_ == o.owner_)) throw TypeError("adding elements of different modules");
  std::vector<ElementTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return ModuleElement(owner_, std::move(all));
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
  std::vector<ElementTerm> out = terms_;
  for (auto& t : out) t.coeff = c * t.coeff;
  return ModuleElement(owner_, std::move(out));
}

std::string ModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    s += (i ? " + " : "") + terms_[i].coeff.to_string() + "*" + terms_[i].subset.to_string();
  return s;
}

Scalar pair(const ModuleElement& x, const ModuleElement& w) {
  if (!(w.owner() == dual(x.owner())))
    throw TypeError("pairing needs an element of " + dual(x.owner()).to_string() + ", got one of " + w.owner().to_string());
  Scalar total = x.owner().ring.zero();
  for (const auto& a : x.terms())
    for (const auto& b : w.terms()) {
      const auto n = cardinality(intersect(a.subset, b.subset));
      if (!n)
        throw ConsistencyError("infinite intersection " + a.subset.to_string() + " ∩ " + b.subset.to_string() +
                               " in a pairing");
      total += a.coeff * b.coeff * total.int_like(static_cast<std::int64_t>(*n));
    }
  return total;
}

// ---------------------------------------------------------------------------
// Sampling

IndexTerm sample_index(Rng& rng, int depth) {
  const std::uint64_t roll = rng.below(depth > 0 ? 10 : 4);
  if (roll < 2) return IndexTerm::atom("A");
  if (roll < 3) return IndexTerm::atom("B");
  if (roll < 4) return IndexTerm::finset(rng.range(1, 4));
  if (roll < 7) return IndexTerm::sum(sample_index(rng, depth - 1), sample_index(rng, depth - 1));
  if (rng.chance(1, 2)) {
    IndexTerm a = IndexTerm::atom(rng.chance(2, 3) ? "A" : "B");
    return IndexTerm::prod(a, a);
  }
  return IndexTerm::prod(sample_index(rng, depth - 1), sample_index(rng, depth - 1));
}

Family sample_family(Rng& rng, const IndexTerm& index, int depth) {
  const bool composite = index.kind() == IndexTerm::Kind::Sum || index.kind() == IndexTerm::Kind::Prod;
  if (depth > 1) {
    const std::uint64_t roll = rng.below(10);
    if (roll < 3) return Family::polar(sample_family(rng, index, depth - 1));
    if (composite && roll < 8) {
      Family a = sample_family(rng, index.left(), depth - 1);
      Family b = sample_family(rng, index.right(), depth - 1);
      return index.kind() == IndexTerm::Kind::Sum ? Family::sumfam(std::move(a), std::move(b))
                                                  : Family::rect(std::move(a), std::move(b));
    }
  }
  return rng.chance(1, 2) ? Family::fin(index) : Family::full(index);
}

namespace {

std::vector<std::int64_t> sample_list(Rng& rng, std::int64_t max_size, std::int64_t bound) {
  std::vector<std::int64_t> out;
  const std::int64_t n = rng.range(0, max_size);
  for (std::int64_t i = 0; i < n; ++i) out.push_back(rng.range(0, bound - 1));
  return out;
}

DescribedSubset sample_finite(Rng& rng, const IndexTerm& index) {
  switch (index.kind()) {
    case IndexTerm::Kind::Atom: return DescribedSubset::finite(index, sample_list(rng, 8, 64));
    case IndexTerm::Kind::FinSet:
      if (index.size() == 0) return DescribedSubset::empty(index);
      return DescribedSubset::finite(index, sample_list(rng, std::min<std::int64_t>(8, index.size()), index.size()));
    case IndexTerm::Kind::Sum:
      return DescribedSubset::pair(sample_finite(rng, index.left()), sample_finite(rng, index.right()));
    case IndexTerm::Kind::Prod:
      return DescribedSubset::rect(sample_finite(rng, index.left()), sample_finite(rng, index.right()));
  }
  return DescribedSubset::empty(index);
}

}  // namespace

DescribedSubset sample_subset(Rng& rng, const IndexTerm& index) {
  switch (index.kind()) {
    case IndexTerm::Kind::Atom:
      if (rng.chance(1, 2)) return DescribedSubset::finite(index, sample_list(rng, 8, 64));
      return DescribedSubset::cofinite(index, sample_list(rng, 8, 64));
    case IndexTerm::Kind::FinSet: return sample_finite(rng, index);
    case IndexTerm::Kind::Sum:
      return DescribedSubset::pair(sample_subset(rng, index.left()), sample_subset(rng, index.right()));
    case IndexTerm::Kind::Prod: {
      const bool graphs = index.left().kind() == IndexTerm::Kind::Atom && index.left() == index.right();
      std::vector<ProductComponent> comps;
      const std::int64_t n = rng.range(1, 3);
      for (std::int64_t i = 0; i < n; ++i) {
        if (graphs && rng.chance(2, 5)) {
          std::vector<std::int64_t> excl = rng.chance(1, 3) ? sample_list(rng, 3, 16) : std::vector<std::int64_t>{};
          comps.push_back(ProductComponent::graph(rng.range(-4, 4), std::move(excl)));
        } else {
          comps.push_back(ProductComponent::rect(sample_subset(rng, index.left()), sample_subset(rng, index.right())));
        }
      }
      return DescribedSubset::union_of(index, std::move(comps));
    }
  }
  return DescribedSubset::empty(index);
}

DescribedSubset sample_support(Rng& rng, const Family& f) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    DescribedSubset b = sample_subset(rng, f.index());
    if (member_polar(b, f)) return b;
  }
  return sample_finite(rng, f.index());
}

std::vector<std::pair<std::string, ModuleObject>> module_catalog(const CoefficientRing& ring) {
  const IndexTerm a = IndexTerm::atom("A");
  const IndexTerm b = IndexTerm::atom("B");
  const ModuleObject sum_a = ModuleObject::make(Family::full(a), ring);
  const ModuleObject sum_b = ModuleObject::make(Family::full(b), ring);
  const ModuleObject prod_a = ModuleObject::make(Family::fin(a), ring);
  const ModuleObject prod_b = ModuleObject::make(Family::fin(b), ring);
  const ModuleObject free3 = ModuleObject::make(Family::full(IndexTerm::finset(3)), ring);
  std::vector<std::pair<std::string, ModuleObject>> out = {
      {"sum_A", sum_a},
      {"prod_A", prod_a},
      {"free_3", free3},
      {"sum_A_x_prod_B", build(BuildKind::Product, sum_a, prod_b)},
      {"hom_sum_sum", build(BuildKind::Hom, sum_a, sum_b)},
      {"hom_prod_sum", build(BuildKind::Hom, prod_a, sum_b)},
      {"dual_tensor_sum_sum", build(BuildKind::DualTensor, sum_a, sum_b)},
      {"tensor_reflexive_sum_prod", build(BuildKind::TensorReflexive, sum_a, prod_b)},
      {"tilde_tensor_prod_sum", build(BuildKind::TildeTensorOfDuals, prod_a, sum_b)},
      {"row_finite_AA", ModuleObject::make(Family::rect(Family::fin(a), Family::full(a)), ring)},
      {"diag_polar_AA", ModuleObject::make(Family::polar(Family::rect(Family::fin(a), Family::full(a))), ring)},
      {"hom_free3_sum", build(BuildKind::Hom, free3, sum_a)},
  };
  return out;
}

}  // namespace refcalc
