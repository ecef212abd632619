// bialgebra, cartier, linrec, spec-points and hom-determination.

#include <algorithm>
#include <set>

#include "refcalc/bialgebra.hpp"
#include "refcalc/linrec.hpp"
#include "refcalc/profinite.hpp"
#include "suite_detail.hpp"

namespace refcalc::detail {

namespace {

json axiom_witness(const json& structure, const AxiomReport& rep) {
  json j{{"kind", "case"}, {"structure", structure}};
  if (const LawResult* f = rep.first_failure()) {
    j["law"] = f->law;
    j["at"] = f->witness;
  }
  return j;
}

CaseOutcome expect(bool ok, const std::string& what, json data = json::object(), std::uint64_t checks = 1) {
  if (ok) return CaseOutcome::pass(checks);
  data["kind"] = "case";
  return CaseOutcome::fail(what, std::move(data), checks);
}

std::vector<Field> golden_fields() { return {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}; }

// ---------------------------------------------------------------------------
// Group-hom oracle: a hom from a product of cyclic groups is a choice of an
// image h with order(g_i) * h = 0 for each generator g_i.

std::uint64_t group_hom_count(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
  std::uint64_t count = 1;
  const std::uint64_t n = group_order(to);
  for (auto o : from) {
    std::uint64_t fit = 0;
    for (std::uint64_t h = 0; h < n; ++h) {
      const auto digits = group_element(to, h);
      bool killed = true;
      for (std::size_t f = 0; f < to.size(); ++f)
        if ((static_cast<std::uint64_t>(o) * digits[f]) % to[f] != 0) killed = false;
      fit += killed;
    }
    count *= fit;
  }
  return count;
}

std::vector<std::vector<std::uint32_t>> small_groups() {
  return {{1}, {2}, {3}, {4}, {5}, {6}, {2, 2}};
}

Matrix compose(const Matrix& g, const Matrix& f) { return g * f; }

}  // namespace

std::vector<Property> bialgebra_suite(const SuiteContext& ctx) {
  std::vector<CatalogEntry> catalog;
  for (const auto& k : golden_fields())
    for (auto& e : bialgebra_catalog(k)) catalog.push_back(std::move(e));
  std::vector<Property> out;
  out.push_back({"catalog-axioms", catalog.size(), [catalog](std::size_t i, std::uint64_t) {
                   const AxiomReport rep = check_axioms(catalog[i].bialgebra);
                   if (rep.all_pass()) return CaseOutcome::pass(rep.laws.size());
                   return CaseOutcome::fail(catalog[i].name + ": " + rep.first_failure()->law,
                                            axiom_witness(structure_to_json(catalog[i].bialgebra), rep));
                 }});
  out.push_back({"dual-axioms", catalog.size(), [catalog](std::size_t i, std::uint64_t) {
                   const FdBialgebra d = dualize(catalog[i].bialgebra);
                   const AxiomReport rep = check_axioms(d);
                   if (rep.all_pass()) return CaseOutcome::pass(rep.laws.size());
                   return CaseOutcome::fail("dual of " + catalog[i].name + ": " + rep.first_failure()->law,
                                            axiom_witness(structure_to_json(d), rep));
                 }});
  out.push_back({"double-dual", catalog.size(), [catalog](std::size_t i, std::uint64_t) {
                   const FdBialgebra& b = catalog[i].bialgebra;
                   return expect(identical(dualize(dualize(b)), b), catalog[i].name + ": double dual differs",
                                 {{"structure", structure_to_json(b)}});
                 }});
  out.push_back({"flags-exchange", catalog.size(), [catalog](std::size_t i, std::uint64_t) {
                   const FdBialgebra& b = catalog[i].bialgebra;
                   const FdBialgebra d = dualize(b);
                   const bool ok = d.algebra.is_commutative() == b.coalgebra.is_cocommutative() &&
                                   d.coalgebra.is_cocommutative() == b.algebra.is_commutative();
                   return expect(ok, catalog[i].name + ": commutativity flags not exchanged",
                                 {{"structure", structure_to_json(b)}});
                 }});
  out.push_back({"mutations-detected", catalog.size(), [catalog](std::size_t i, std::uint64_t) {
                   const auto muts = mutations(catalog[i].bialgebra);
                   for (const auto& m : muts) {
                     const AxiomReport rep = check_axioms(m.mutated);
                     const LawResult* f = rep.first_failure();
                     if (!f || f->witness.empty())
                       return CaseOutcome::fail(catalog[i].name + ": mutation '" + m.description + "' passes",
                                                json{{"kind", "case"}, {"structure", structure_to_json(m.mutated)}},
                                                muts.size());
                   }
                   return CaseOutcome::pass(muts.size());
                 }});
  out.push_back({"function-algebra-dual", 4 * small_groups().size(), [](std::size_t i, std::uint64_t) {
                   const Field k = golden_fields()[i / small_groups().size()];
                   const auto g = small_groups()[i % small_groups().size()];
                   return expect(same_structure(dualize(function_algebra(k, g)), group_algebra(k, g)),
                                 "dual of K^" + group_name(g) + " over " + k.name() + " is not K[G]");
                 }});
  out.push_back({"grouplike", 4 * small_groups().size(), [](std::size_t i, std::uint64_t) {
                   const Field k = golden_fields()[i / small_groups().size()];
                   const FdBialgebra b = group_algebra(k, small_groups()[i % small_groups().size()]);
                   const std::size_t n = b.dim();
                   for (std::size_t g = 0; g < n; ++g) {
                     const Vector e = b.algebra.basis_vector(g);
                     Vector gg(n * n, k.zero());
                     gg[g * n + g] = k.one();
                     if (b.coalgebra.comultiply(e) != gg || !b.coalgebra.apply_counit(e).is_one())
                       return CaseOutcome::fail("basis vector " + b.algebra.labels[g] + " is not grouplike",
                                                json{{"kind", "case"}, {"structure", structure_to_json(b)}}, n);
                   }
                   return CaseOutcome::pass(n);
                 }});
  const auto groups = small_groups();
  out.push_back({"group-hom-count", groups.size() * groups.size(), [groups, ctx](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(7);
                   const auto& g = groups[i / groups.size()];
                   const auto& h = groups[i % groups.size()];
                   const auto homs = enumerate_bialgebra_homs(group_algebra(k, g), group_algebra(k, h), ctx.guard);
                   const std::uint64_t want = group_hom_count(g, h);
                   return expect(homs.size() == want,
                                 group_name(g) + " -> " + group_name(h) + ": " + std::to_string(homs.size()) +
                                     " bialgebra homs, " + std::to_string(want) + " group homs",
                                 {{"from", group_name(g)}, {"to", group_name(h)}, {"homs", homs.size()}});
                 }});
  out.push_back({"dual-morphism", groups.size() * groups.size(), [groups, ctx](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(3);
                   const FdBialgebra b = group_algebra(k, groups[i / groups.size()]);
                   const FdBialgebra c = group_algebra(k, groups[i % groups.size()]);
                   const FdBialgebra bd = dualize(b), cd = dualize(c);
                   std::uint64_t checks = 0;
                   for (const auto& f : enumerate_bialgebra_homs(b, c, ctx.guard)) {
                     ++checks;
                     if (!is_bialgebra_morphism(dual_morphism(f), cd, bd))
                       return CaseOutcome::fail("transpose of a bialgebra hom is not one",
                                                json{{"kind", "case"}, {"map", matrix_to_json(f)}}, checks);
                     // Contravariance against every endomorphism of the target.
                     for (const auto& g : enumerate_bialgebra_homs(c, c, ctx.guard)) {
                       ++checks;
                       if (dual_morphism(compose(g, f)) != dual_morphism(f) * dual_morphism(g))
                         return CaseOutcome::fail("(g f)* != f* g*",
                                                  json{{"kind", "case"}, {"f", matrix_to_json(f)}, {"g", matrix_to_json(g)}},
                                                  checks);
                     }
                   }
                   const Matrix id = Matrix::identity(k, b.dim());
                   return expect(dual_morphism(id) == id, "id* != id", {}, checks + 1);
                 }});
  out.push_back({"counit-uniqueness", catalog.size(), [catalog, ctx](std::size_t i, std::uint64_t) {
                   const FdBialgebra& b = catalog[i].bialgebra;
                   if (!b.field().finite()) return CaseOutcome::pass(0);
                   const auto homs = enumerate_bialgebra_homs(b, base_field_bialgebra(b.field()), ctx.guard);
                   Matrix counit(b.field(), 1, b.dim());
                   for (std::size_t j = 0; j < b.dim(); ++j) counit(0, j) = b.coalgebra.counit[j];
                   const bool ok = homs.size() == 1 && homs[0] == counit;
                   return expect(ok, catalog[i].name + ": homs to K are not exactly the counit",
                                 {{"homs", homs.size()}});
                 }});
  out.push_back({"counit-dualizes-to-unit", golden_fields().size(), [](std::size_t i, std::uint64_t) {
                   const Field k = golden_fields()[i];
                   const FdBialgebra b = group_algebra(k, {2});
                   Matrix counit(k, 1, 2);
                   for (std::size_t j = 0; j < 2; ++j) counit(0, j) = b.coalgebra.counit[j];
                   const Matrix t = dual_morphism(counit);
                   const FdBialgebra f = function_algebra(k, {2});
                   return expect(t.column(0) == f.algebra.unit, "counit of K[Z/2] does not transpose to the unit of K^Z/2");
                 }});
  for (const auto& s : ctx.model.structures) {
    const StructureBlock block = s.block;
    out.push_back({"model-axioms " + s.name, 1, [block](std::size_t, std::uint64_t) {
                     AxiomReport rep;
                     json data;
                     if (block.is_bialgebra()) {
                       rep = check_axioms(block.bialgebra());
                       data = structure_to_json(block.bialgebra());
                     } else if (block.algebra) {
                       rep = check_axioms(*block.algebra);
                       data = structure_to_json(*block.algebra);
                     } else {
                       rep = check_axioms(*block.coalgebra);
                       data = structure_to_json(*block.coalgebra);
                     }
                     if (rep.all_pass()) return CaseOutcome::pass(rep.laws.size());
                     return CaseOutcome::fail(rep.first_failure()->law + " fails", axiom_witness(data, rep));
                   }});
    if (block.is_bialgebra())
      out.push_back({"model-double-dual " + s.name, 1, [block](std::size_t, std::uint64_t) {
                       const FdBialgebra b = block.bialgebra();
                       return expect(identical(dualize(dualize(b)), b), "dualization does not round-trip");
                     }});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Property> cartier_suite(const SuiteContext& ctx) {
  struct Plan {
    std::vector<std::uint32_t> group;
    std::uint32_t p;
    std::size_t s;
  };
  std::vector<Plan> plan;
  for (const auto& g : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {4}, {2, 2}})
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const auto algebras = test_algebra_catalog(Field::prime(p));
      for (std::size_t s = 0; s < algebras.size(); ++s)
        if (saturating_power(algebras[s].element_count(), group_order(g)) <= kDefaultGuard) plan.push_back({g, p, s});
    }
  std::vector<Property> out;
  out.push_back({"cartier", plan.size(), [plan, ctx](std::size_t i, std::uint64_t) {
                   const Plan& c = plan[i];
                   const Field k = Field::prime(c.p);
                   const CartierReport rep = cartier_check(c.group, k, test_algebra_catalog(k)[c.s], ctx.guard);
                   return expect(rep.passed, rep.detail,
                                 {{"group", rep.group}, {"field", k.name()}, {"algebra", rep.algebra}}, 4);
                 }});
  out.push_back({"mu2-counts", 2, [ctx](std::size_t i, std::uint64_t) {
                   const std::uint32_t p = i == 0 ? 3 : 2;
                   const std::size_t want = i == 0 ? 2 : 1;
                   const Field k = Field::prime(p);
                   const CartierReport rep = cartier_check({2}, k, base_field_algebra(k), ctx.guard);
                   return expect(rep.passed && rep.points == want && rep.brute_points == want,
                                 "mu_2(F_" + std::to_string(p) + ") has " + std::to_string(rep.points) + " points");
                 }});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Poly random_monic(Rng& rng, const Field& k, std::size_t degree) {
  Poly f;
  for (std::size_t i = 0; i < degree; ++i)
    f.push_back(k.finite() ? k.element(rng.below(k.size())) : k.from_int(rng.range(-3, 3)));
  f.push_back(k.one());
  return f;
}

LinRecFunctional random_functional(Rng& rng, const Field& k, LinRecStructure s) {
  const std::size_t d = rng.range(1, 3);
  Vector init;
  for (std::size_t i = 0; i < d; ++i) init.push_back(k.finite() ? k.element(rng.below(k.size())) : k.from_int(rng.range(-4, 4)));
  return linrec_from_recurrence(k, random_monic(rng, k, d), std::move(init), s);
}

bool annihilates(const Poly& h, const Vector& seq, std::size_t upto) {
  const std::size_t d = h.size() - 1;
  for (std::size_t n = 0; n <= upto; ++n) {
    Scalar s = seq[0].zero_like();
    for (std::size_t i = 0; i <= d; ++i) s += h[i] * seq[n + i];
    if (!s.is_zero()) return false;
  }
  return true;
}

LinRecFunctional geom(const Field& k, std::int64_t a) {
  return linrec_from_recurrence(k, {k.from_int(-a), k.one()}, {k.one()}, LinRecStructure::Additive);
}

}  // namespace

std::vector<Property> linrec_suite(const SuiteContext& ctx) {
  const Field q = Field::rationals();
  std::vector<Property> out;
  out.push_back({"fibonacci", 1, [q](std::size_t, std::uint64_t) {
                   const auto fib = parse_linrec("linrec(Q, f=x^2-x-1, init=[0,1], structure=additive)");
                   Vector want{q.from_int(0), q.from_int(1)};
                   for (int n = 2; n < 30; ++n) want.push_back(want[n - 1] + want[n - 2]);
                   return expect(fib.values(30) == want && fib.annihilates_upto(10), "Fibonacci values differ", {}, 31);
                 }});
  out.push_back({"ones-unit", 1, [q](std::size_t, std::uint64_t) {
                   const auto ones = linrec_from_recurrence(q, {q.from_int(-1), q.one()}, {q.one()}, LinRecStructure::Multiplicative);
                   const auto fib = linrec_from_recurrence(q, parse_polynomial("x^2-x-1", q), {q.zero(), q.one()},
                                                           LinRecStructure::Multiplicative);
                   const auto p = linrec_product(ones, fib);
                   return expect(p.modulus == fib.modulus && p.values(40) == fib.values(40), "ones * fib != fib",
                                 {{"product", p.to_string()}});
                 }});
  out.push_back({"hurwitz-ones-square", 1, [q](std::size_t, std::uint64_t) {
                   const auto p = linrec_product(geom(q, 1), geom(q, 1));
                   Vector want;
                   mpz_class pow2 = 1;
                   for (int n = 0; n < 40; ++n, pow2 *= 2) want.push_back(Scalar(mpq_class(pow2)));
                   const Poly x_minus_2{q.from_int(-2), q.one()};
                   return expect(p.values(40) == want && p.modulus == x_minus_2, "ones^2 is " + p.to_string(),
                                 {{"product", p.to_string()}});
                 }});
  out.push_back({"geom-sum", 49, [](std::size_t i, std::uint64_t) {
                   const std::int64_t a = static_cast<std::int64_t>(i / 7) - 3, b = static_cast<std::int64_t>(i % 7) - 3;
                   for (const Field& k : {Field::rationals(), Field::prime(5), Field::prime(7)}) {
                     const auto p = linrec_product(geom(k, a), geom(k, b));
                     const auto want = geom(k, a + b);
                     if (p.modulus != want.modulus || p.values(30) != want.values(30))
                       return CaseOutcome::fail("geom(" + std::to_string(a) + ") * geom(" + std::to_string(b) +
                                                    ") over " + k.name() + " is " + p.to_string(),
                                                json{{"kind", "case"}, {"product", p.to_string()}}, 3);
                   }
                   return CaseOutcome::pass(3);
                 }});
  out.push_back({"product-annihilates", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3),
                                                      Field::prime(5), Field::prime(7)};
                   const Field k = fields[rng.below(fields.size())];
                   const LinRecStructure s = rng.chance(1, 2) ? LinRecStructure::Additive : LinRecStructure::Multiplicative;
                   const auto a = random_functional(rng, k, s), b = random_functional(rng, k, s);
                   const auto p = linrec_product(a, b);
                   const Vector direct = product_values(a, b, 60);
                   const Poly companion = companion_product_modulus(a, b);
                   const bool ok = annihilates(p.modulus, direct, 20) && annihilates(companion, direct, 20) &&
                                   p.degree() <= a.degree() * b.degree() && p.values(60) == direct;
                   return expect(ok, a.to_string() + " * " + b.to_string() + " gives " + p.to_string(),
                                 {{"a", a.to_string()}, {"b", b.to_string()}, {"product", p.to_string()}}, 4);
                 }});
  out.push_back({"tag-mismatch", 1, [q](std::size_t, std::uint64_t) {
                   const auto a = geom(q, 1);
                   auto b = a;
                   b.structure = LinRecStructure::Multiplicative;
                   try {
                     linrec_product(a, b);
                   } catch (const TypeError&) {
                     return CaseOutcome::pass();
                   }
                   return expect(false, "mixing additive and multiplicative was accepted");
                 }});
  out.push_back({"bar-family", 3, [](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(i == 0 ? 2 : i == 1 ? 3 : 5);
                   constexpr std::size_t d = 2;  // truncation degree
                   const auto fam = bar_family(k, d);
                   const std::uint64_t want = k.size() + k.size() * k.size();
                   bool ok = fam.size() == want;
                   // Every functional on K[x]/(f) is linearly recursive with modulus f.
                   for (const auto& f : fam) {
                     const auto w = linrec_from_recurrence(k, f, Vector(f.size() - 1, k.one()), LinRecStructure::Additive);
                     ok = ok && poly_is_monic(f) && w.annihilates_upto(10);
                   }
                   return expect(ok, "truncated family (d = 2) over " + k.name() + " has " + std::to_string(fam.size()) +
                                         " members, expected " + std::to_string(want));
                 }});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Scalar eval_at(const Poly& f, const Scalar& s, const TestAlgebra& alg) {
  Scalar acc = alg.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * s + alg.embed(f[i]);
  return acc;
}

std::size_t root_count(const Poly& f, const TestAlgebra& s) {
  std::size_t n = 0;
  for (std::uint64_t i = 0; i < s.element_count(); ++i) n += eval_at(f, s.element(i), s).is_zero();
  return n;
}

// f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j), computed in S.
bool is_point(const Matrix& m, const FdAlgebra& a, const TestAlgebra& s) {
  Scalar one = s.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) one += s.embed(a.unit[i]) * point_value(m, s, i);
  if (one != s.one()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar lhs = s.zero();
      for (std::size_t k = 0; k < a.dim(); ++k) lhs += s.embed(a.mult(i, j, k)) * point_value(m, s, k);
      if (lhs != point_value(m, s, i) * point_value(m, s, j)) return false;
    }
  return true;
}

std::set<std::string> x_images(const std::vector<Matrix>& points, const TestAlgebra& s) {
  std::set<std::string> out;
  for (const auto& p : points) out.insert(point_value(p, s, p.cols() > 1 ? 1 : 0).to_string());
  return out;
}

std::set<std::string> nilpotents(const TestAlgebra& s) {
  std::set<std::string> out;
  for (std::uint64_t i = 0; i < s.element_count(); ++i)
    if (s.is_nilpotent(s.element(i))) out.insert(s.element(i).to_string());
  return out;
}

struct AlgebraCase {
  FdAlgebra algebra;
  std::string name;
  std::optional<Poly> modulus;  // when A = K[x]/(f)
};

AlgebraCase random_algebra(Rng& rng, const Field& k) {
  if (rng.chance(2, 3)) {
    const Poly f = random_monic(rng, k, rng.range(1, 3));
    return {polynomial_quotient_algebra(k, f), "K[x]/(" + poly_to_string(f) + ")", f};
  }
  const std::vector<std::vector<std::uint32_t>> gs = {{2}, {3}, {2, 2}};
  const auto& g = gs[rng.below(gs.size())];
  return {group_algebra(k, g).algebra, "K[" + group_name(g) + "]", std::nullopt};
}

}  // namespace

std::vector<Property> spec_points_suite(const SuiteContext& ctx) {
  std::vector<Property> out;
  out.push_back({"known-counts", 3, [ctx](std::size_t i, std::uint64_t) {
                   if (i == 0) {
                     const Field k = Field::prime(2);
                     const auto n = spec_points(polynomial_quotient_algebra(k, parse_polynomial("x^2", k)), dual_numbers(k), ctx.guard).size();
                     return expect(n == 2, "F2[x]/(x^2) -> F2[e]: " + std::to_string(n) + " points");
                   }
                   if (i == 1) {
                     const Field k = Field::prime(3);
                     const auto n = spec_points(polynomial_quotient_algebra(k, parse_polynomial("x^2-1", k)), base_field_algebra(k), ctx.guard).size();
                     return expect(n == 2, "F3[x]/(x^2-1) -> F3: " + std::to_string(n) + " points");
                   }
                   for (std::uint32_t p : {2u, 3u, 5u})
                     for (const auto& s : test_algebra_catalog(Field::prime(p)))
                       if (spec_points(base_field_as_algebra(Field::prime(p)), s, ctx.guard).size() != 1)
                         return expect(false, "K -> " + s.name() + " is not a single point");
                   return CaseOutcome::pass(12);
                 }});
  out.push_back({"points-verified", ctx.cases, [ctx](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Field k = Field::prime(std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)]);
                   const AlgebraCase a = random_algebra(rng, k);
                   const auto cat = test_algebra_catalog(k);
                   const TestAlgebra& s = cat[rng.below(cat.size())];
                   const auto points = spec_points(a.algebra, s, ctx.guard);
                   for (const auto& p : points)
                     if (!is_point(p, a.algebra, s))
                       return CaseOutcome::fail(a.name + " -> " + s.name() + ": map is not an algebra hom",
                                                json{{"kind", "case"}, {"point", matrix_to_json(p)}});
                   if (a.modulus && points.size() != root_count(*a.modulus, s))
                     return CaseOutcome::fail(a.name + " -> " + s.name() + ": " + std::to_string(points.size()) +
                                                  " points but " + std::to_string(root_count(*a.modulus, s)) + " roots",
                                              json{{"kind", "case"}, {"algebra", structure_to_json(a.algebra)}});
                   return CaseOutcome::pass(points.size() + 1);
                 }});
  out.push_back({"tensor-multiplicative", ctx.cases, [ctx](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Field k = Field::prime(rng.chance(1, 2) ? 2 : 3);
                   const Poly f = random_monic(rng, k, rng.range(1, 2)), g = random_monic(rng, k, rng.range(1, 2));
                   const FdAlgebra a = polynomial_quotient_algebra(k, f), b = polynomial_quotient_algebra(k, g);
                   const auto cat = test_algebra_catalog(k);
                   const TestAlgebra& s = cat[rng.below(cat.size())];
                   const std::size_t na = spec_points(a, s, ctx.guard).size(), nb = spec_points(b, s, ctx.guard).size();
                   const std::size_t nab = spec_points(tensor_product(a, b), s, ctx.guard).size();
                   return expect(nab == na * nb,
                                 "|" + poly_to_string(f) + " (x) " + poly_to_string(g) + " -> " + s.name() + "| = " +
                                     std::to_string(nab) + ", factors " + std::to_string(na) + " * " + std::to_string(nb),
                                 {{"f", poly_to_string(f)}, {"g", poly_to_string(g)}, {"algebra", s.name()}}, 3);
                 }});
  struct AdicCase {
    std::uint32_t p;
    std::size_t s;
  };
  std::vector<AdicCase> adic;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t s = 0; s < 4; ++s) adic.push_back({p, s});
  out.push_back({"adic-nilpotents", adic.size(), [adic, ctx](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(adic[i].p);
                   const TestAlgebra s = test_algebra_catalog(k)[adic[i].s];
                   const AlgebraTower t = adic_tower(k, parse_polynomial("x", k), 3);
                   const auto got = x_images(spec_points(t, s, ctx.guard), s);
                   return expect(got == nilpotents(s), "x-adic points at " + s.name() + " are not the nilpotents",
                                 {{"algebra", s.name()}, {"points", std::vector<std::string>(got.begin(), got.end())}});
                 }});
  out.push_back({"depth-stable", adic.size(), [adic, ctx](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(adic[i].p);
                   const TestAlgebra s = test_algebra_catalog(k)[adic[i].s];
                   const AlgebraTower t3 = adic_tower(k, parse_polynomial("x", k), 3);
                   const AlgebraTower t4 = adic_tower(k, parse_polynomial("x", k), 4);
                   const bool ok = depth_stable(t4, s, ctx.guard) &&
                                   x_images(spec_points(t3, s, ctx.guard), s) == x_images(spec_points(t4, s, ctx.guard), s);
                   return expect(ok, "x-adic points at " + s.name() + " change from depth 3 to 4");
                 }});
  out.push_back({"tower-shapes", 1, [](std::size_t, std::uint64_t) {
                   const Field f2 = Field::prime(2);
                   const AlgebraTower t = adic_tower(f2, parse_polynomial("x", f2), 3);
                   const AlgebraTower u = adic_tower(f2, parse_polynomial("x^2+x", f2), 2);
                   bool ok = t.levels[0].dim() == 1 && t.levels[1].dim() == 2 && t.levels[2].dim() == 3 &&
                             u.levels[0].dim() == 2 && u.levels[1].dim() == 4 &&
                             adic_tower(f2, parse_polynomial("x", f2), 1).depth() == 1;
                   for (const AlgebraTower* tw : {&t, &u})
                     for (std::size_t n = 0; n + 1 < tw->depth(); ++n)
                       ok = ok && tw->transitions[n].apply(tw->levels[n + 1].unit) == tw->levels[n].unit;
                   return expect(ok, "adic tower dimensions or unit coherence differ", {}, 8);
                 }});
  out.push_back({"finite-dual-roundtrip", golden_fields().size(), [](std::size_t i, std::uint64_t) {
                   const Field k = golden_fields()[i];
                   std::uint64_t checks = 0;
                   for (const auto& e : bialgebra_catalog(k)) {
                     ++checks;
                     const FdAlgebra back = dualize(finite_dual(e.bialgebra.algebra));
                     if (!(back.mult == e.bialgebra.algebra.mult && back.unit == e.bialgebra.algebra.unit &&
                           back.labels == e.bialgebra.algebra.labels))
                       return CaseOutcome::fail(e.name + ": dualize(finite_dual(A)) != A",
                                                json{{"kind", "case"}, {"algebra", structure_to_json(e.bialgebra.algebra)}},
                                                checks);
                   }
                   return CaseOutcome::pass(checks);
                 }});
  for (const auto& nt : ctx.model.towers) {
    const AlgebraTower tower = nt.tower;
    const Field k = tower.top().field;
    if (!k.finite()) continue;
    out.push_back({"model-tower " + nt.name, 4, [tower, k, ctx](std::size_t i, std::uint64_t) {
                     const TestAlgebra s = test_algebra_catalog(k)[i];
                     const auto points = spec_points(tower, s, ctx.guard);
                     for (const auto& p : points)
                       if (!is_point(p, tower.top(), s))
                         return CaseOutcome::fail("point at " + s.name() + " is not an algebra hom",
                                                  json{{"kind", "case"}, {"point", matrix_to_json(p)}});
                     return CaseOutcome::pass(points.size() + 1);
                   }});
  }
  for (const auto& ns : ctx.model.structures) {
    if (!ns.block.algebra || !ns.block.field.finite()) continue;
    const FdAlgebra a = *ns.block.algebra;
    out.push_back({"model-points " + ns.name, 4, [a, ctx](std::size_t i, std::uint64_t) {
                     const TestAlgebra s = test_algebra_catalog(a.field)[i];
                     const auto points = spec_points(a, s, ctx.guard);
                     for (const auto& p : points)
                       if (!is_point(p, a, s))
                         return CaseOutcome::fail("point at " + s.name() + " is not an algebra hom",
                                                  json{{"kind", "case"}, {"point", matrix_to_json(p)}});
                     return CaseOutcome::pass(points.size() + 1);
                   }});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Matrix random_matrix(Rng& rng, const Field& k, std::size_t n) {
  Matrix m(k, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = k.element(rng.below(k.size()));
  return m;
}

CaseOutcome hom_report(const HomBaseChangeReport& rep, const std::string& what) {
  return expect(rep.passed, what + " at " + rep.algebra + ": " + rep.detail,
                {{"algebra", rep.algebra}, {"base_dim", rep.base_dim}, {"extended_nullity", rep.extended_nullity}});
}

}  // namespace

std::vector<Property> hom_determination_suite(const SuiteContext& ctx) {
  std::vector<Property> out;
  out.push_back({"documented-homs", 3, [ctx](std::size_t i, std::uint64_t) {
                   std::uint64_t checks = 0;
                   if (i == 0) {
                     const Field k = Field::prime(2);
                     const FdAlgebra a = group_algebra(k, {2}).algebra;
                     const FdModule m = regular_module(a);
                     const auto rep = hom_base_change_check(a, m, m, dual_numbers(k), ctx.guard);
                     if (!rep.passed || rep.base_dim != 2 || rep.extended_nullity != 4) return hom_report(rep, "F2[Z/2] regular");
                     return CaseOutcome::pass(1);
                   }
                   if (i == 1) {
                     for (std::uint32_t p : {2u, 3u}) {
                       const Field k = Field::prime(p);
                       const FdAlgebra a = base_field_as_algebra(k);
                       const FdModule m{{Matrix::identity(k, 2)}}, m2{{Matrix::identity(k, 3)}};
                       for (const auto& s : test_algebra_catalog(k)) {
                         ++checks;
                         const auto rep = hom_base_change_check(a, m, m2, s, ctx.guard);
                         if (!rep.passed || rep.base_dim != 6) return hom_report(rep, "base field");
                       }
                     }
                     return CaseOutcome::pass(checks);
                   }
                   const Field k = Field::prime(3);
                   const FdAlgebra a = polynomial_quotient_algebra(k, parse_polynomial("x^2", k));
                   const FdModule m = regular_module(a);
                   const FdModule m2 = polynomial_module(a, Matrix(k, 1, 1));
                   for (const auto& s : test_algebra_catalog(k)) {
                     ++checks;
                     const auto rep = hom_base_change_check(a, m, m2, s, ctx.guard);
                     if (!rep.passed || rep.base_dim != 1) return hom_report(rep, "F3[x]/(x^2) -> F3");
                   }
                   return CaseOutcome::pass(checks);
                 }});
  out.push_back({"documented-submodules", 3, [](std::size_t i, std::uint64_t) {
                   const Field k = Field::prime(2);
                   const FdAlgebra a = polynomial_quotient_algebra(k, parse_polynomial("x^2", k));
                   const FdModule m = regular_module(a);
                   std::vector<Vector> w;
                   if (i == 0) w = {{k.zero(), k.one()}};
                   if (i == 1) w = {{k.one(), k.zero()}};
                   const SubmoduleReport rep = submodule_stability_check(a, m, w);
                   const bool want_stable = i != 1;
                   bool ok = rep.base_stable == want_stable && rep.consistent;
                   ok = ok && (want_stable ? rep.extended.size() == 4 : rep.extended.empty());
                   for (const auto& [name, stable] : rep.extended) ok = ok && stable;
                   return expect(ok, "submodule example " + std::to_string(i) + ": " + rep.detail);
                 }});
  out.push_back({"random-hom-base-change", ctx.cases, [ctx](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Field k = Field::prime(rng.chance(1, 2) ? 2 : 3);
                   const std::size_t d = rng.range(1, 2), d2 = rng.range(1, 2);
                   const Matrix x = random_matrix(rng, k, d), x2 = random_matrix(rng, k, d2);
                   const Poly f = poly_mul(k, characteristic_polynomial(x), characteristic_polynomial(x2));
                   const FdAlgebra a = polynomial_quotient_algebra(k, f);
                   const FdModule m = polynomial_module(a, x), m2 = polynomial_module(a, x2);
                   std::uint64_t checks = 0;
                   for (const auto& s : test_algebra_catalog(k)) {
                     ++checks;
                     const auto rep = hom_base_change_check(a, m, m2, s, ctx.guard);
                     if (!rep.passed) {
                       CaseOutcome o = hom_report(rep, "K[x]/(" + poly_to_string(f) + ")");
                       o.witness["x"] = matrix_to_json(x);
                       o.witness["x2"] = matrix_to_json(x2);
                       return o;
                     }
                   }
                   return CaseOutcome::pass(checks);
                 }});
  out.push_back({"random-submodules", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Field k = Field::prime(rng.chance(1, 2) ? 2 : 3);
                   const std::size_t d = rng.range(1, 3);
                   const Matrix x = random_matrix(rng, k, d);
                   const FdAlgebra a = polynomial_quotient_algebra(k, characteristic_polynomial(x));
                   const FdModule m = polynomial_module(a, x);
                   std::vector<Vector> w;
                   const std::size_t n = rng.range(0, d);
                   for (std::size_t i = 0; i < n; ++i) {
                     Vector v;
                     for (std::size_t j = 0; j < d; ++j) v.push_back(k.element(rng.below(k.size())));
                     w.push_back(std::move(v));
                   }
                   const SubmoduleReport rep = submodule_stability_check(a, m, w, true);
                   json ws = json::array();
                   for (const auto& v : w) ws.push_back(vector_to_json(v));
                   return expect(rep.consistent, rep.detail, {{"x", matrix_to_json(x)}, {"w", ws}}, 1 + rep.extended.size());
                 }});
  return out;
}

}  // namespace refcalc::detail
