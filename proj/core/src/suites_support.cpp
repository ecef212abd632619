// polar-laws, duality and limits: the set-family side.

#include "suite_detail.hpp"

namespace refcalc::detail {

namespace {

constexpr std::size_t kSubsetsPerFamily = 200;
constexpr std::size_t kSubsetsPerComparison = 200;
constexpr std::size_t kPairingsPerCase = 50;

struct Drawn {
  IndexTerm index;
  Family family;
};

Drawn draw(Rng& rng) {
  IndexTerm index = sample_index(rng, 2);
  Family f = sample_family(rng, index, 4);
  return {index, f};
}

// A family whose ideal is contained in (grow = false) or contains (grow = true)
// that of f, by monotone changes at the leaves.
Family vary(const Family& f, Rng& rng, bool grow) {
  switch (f.kind()) {
    case Family::Kind::Fin: return grow && rng.chance(1, 2) ? Family::full(f.index()) : f;
    case Family::Kind::Full: return !grow && rng.chance(1, 2) ? Family::fin(f.index()) : f;
    case Family::Kind::Polar: return Family::polar(vary(f.inner(), rng, !grow));
    case Family::Kind::SumFam: return Family::sumfam(vary(f.left(), rng, grow), vary(f.right(), rng, grow));
    case Family::Kind::Rect: return Family::rect(vary(f.left(), rng, grow), vary(f.right(), rng, grow));
  }
  return f;
}

// Checks one law over kSubsetsPerFamily sampled subsets, n_subsets per instance.
CaseOutcome over_samples(Rng& rng, const std::string& law, const IndexTerm& index, std::vector<Family> families,
                         std::size_t n_subsets) {
  for (std::size_t j = 0; j < kSubsetsPerFamily; ++j) {
    LawInstance inst{law, index, families, {}};
    for (std::size_t k = 0; k < n_subsets; ++k) inst.subsets.push_back(sample_subset(rng, index));
    if (!law_holds(inst)) return check_law(inst, j + 1);
  }
  return CaseOutcome::pass(kSubsetsPerFamily);
}

Property family_law(const SuiteContext& ctx, const std::string& law, std::size_t n_subsets) {
  return {law, ctx.cases, [law, n_subsets](std::size_t, std::uint64_t seed) {
            Rng rng(seed);
            const Drawn d = draw(rng);
            return over_samples(rng, law, d.index, {d.family}, n_subsets);
          }};
}

// Extensional comparison of two modules; the witness is a module-equal law.
CaseOutcome compare(const ModuleObject& m, const ModuleObject& n, std::uint64_t seed) {
  const EqualityOutcome eq = modules_equal_randomized(m, n, seed, kSubsetsPerComparison);
  if (eq.consistent) return CaseOutcome::pass(eq.checked);
  return check_law(LawInstance{"module-equal", m.index(), {m.family, n.family}, {*eq.counterexample}}, eq.checked);
}

ModuleElement sample_element(Rng& rng, const ModuleObject& owner) {
  std::vector<ElementTerm> terms;
  const std::uint64_t n = rng.range(1, 3);
  for (std::uint64_t i = 0; i < n; ++i) terms.push_back({sample_support(rng, owner.family), owner.ring.sample(rng)});
  return ModuleElement(owner, std::move(terms));
}

std::vector<CoefficientRing> rings() {
  return {CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::prime(5),
          CoefficientRing::dual_numbers(3)};
}

std::vector<ModuleObject> full_catalog() {
  std::vector<ModuleObject> out;
  for (const auto& r : rings())
    for (auto& [name, m] : module_catalog(r)) out.push_back(m);
  return out;
}

using BinaryCheck = std::function<CaseOutcome(const ModuleObject&, const ModuleObject&, std::uint64_t)>;

Property random_pairs(const SuiteContext& ctx, const std::string& name, BinaryCheck check) {
  return {name, ctx.cases, [check](std::size_t, std::uint64_t seed) {
            Rng rng(seed);
            const CoefficientRing ring = sample_ring(rng);
            const ModuleObject m = sample_module(rng, ring);
            const ModuleObject n = sample_module(rng, ring);
            return check(m, n, rng.next());
          }};
}

Property model_pairs(const SuiteContext& ctx, const std::string& name, BinaryCheck check) {
  std::vector<std::pair<ModuleObject, ModuleObject>> pairs;
  const auto mods = ctx.model.modules();
  for (const auto* a : mods)
    for (const auto* b : mods)
      if (a->value->ring == b->value->ring) pairs.emplace_back(*a->value, *b->value);
  return {name, pairs.size(), [pairs, check](std::size_t i, std::uint64_t seed) {
            return check(pairs[i].first, pairs[i].second, seed);
          }};
}

}  // namespace

std::vector<Property> polar_laws_suite(const SuiteContext& ctx) {
  std::vector<Property> out = {
      family_law(ctx, "extension", 1),
      family_law(ctx, "triple-polar", 1),
      family_law(ctx, "triple-polar-direct", 1),
      family_law(ctx, "normalize-preserves", 1),
      family_law(ctx, "ideal-union", 2),
      family_law(ctx, "ideal-down", 2),
      family_law(ctx, "polar-meets-members", 2),
  };
  out.push_back({"antitone", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Drawn d = draw(rng);
                   const Family smaller = vary(d.family, rng, false);
                   CaseOutcome o = over_samples(rng, "ideal-inclusion", d.index, {smaller, d.family}, 1);
                   if (o.status != Status::Pass) return o;
                   return over_samples(rng, "antitone", d.index, {smaller, d.family}, 1);
                 }});
  out.push_back({"normal-form", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const Drawn d = draw(rng);
                   return check_law(LawInstance{"normal-form", d.index, {d.family}, {}});
                 }});
  out.push_back({"intersection", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const IndexTerm index = sample_index(rng, 2);
                   LawInstance inst{"intersection", index, {}, {}};
                   for (int k = 0; k < 3; ++k) inst.subsets.push_back(sample_subset(rng, index));
                   return check_law(inst);
                 }});
  out.push_back({"projection", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   IndexTerm index = sample_index(rng, 2);
                   while (index.kind() != IndexTerm::Kind::Prod) index = sample_index(rng, 2);
                   return check_law(LawInstance{"projection", index, {}, {sample_subset(rng, index)}});
                 }});
  const auto fams = ctx.model.families();
  if (!fams.empty()) {
    std::vector<std::pair<IndexTerm, Family>> list;
    for (const auto* f : fams) list.emplace_back(f->index, f->family);
    out.push_back({"model-families", list.size(), [list](std::size_t i, std::uint64_t seed) {
                     Rng rng(seed);
                     const auto& [index, f] = list[i];
                     CaseOutcome total = CaseOutcome::pass(0);
                     for (const char* law : {"extension", "triple-polar", "triple-polar-direct", "normalize-preserves"}) {
                       CaseOutcome o = over_samples(rng, law, index, {f}, 1);
                       if (o.status != Status::Pass) return o;
                       total.checks += o.checks;
                     }
                     CaseOutcome o = check_law(LawInstance{"normal-form", index, {f}, {}});
                     if (o.status != Status::Pass) return o;
                     total.checks += 1;
                     return total;
                   }});
  }
  return out;
}

std::vector<Property> duality_suite(const SuiteContext& ctx) {
  std::vector<Property> out;
  const std::vector<ModuleObject> catalog = full_catalog();
  out.push_back({"reflexivity-catalog", catalog.size(), [catalog](std::size_t i, std::uint64_t seed) {
                   return compare(dual(dual(catalog[i])), catalog[i], seed);
                 }});
  out.push_back({"reflexivity-random", ctx.cases, [](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const ModuleObject m = sample_module(rng, sample_ring(rng));
                   return compare(dual(dual(m)), m, rng.next());
                 }});
  out.push_back({"pairing", ctx.cases * kPairingsPerCase, [catalog](std::size_t, std::uint64_t seed) {
                   Rng rng(seed);
                   const ModuleObject& m = catalog[rng.below(catalog.size())];
                   const ModuleObject d = dual(m);
                   const ModuleElement x = sample_element(rng, m), x2 = sample_element(rng, m);
                   const ModuleElement w = sample_element(rng, d), w2 = sample_element(rng, d);
                   const Scalar c = m.ring.sample(rng);
                   const Scalar xw = pair(x, w);
                   const bool ok = pair(x + x2, w) == xw + pair(x2, w) && pair(x, w + w2) == xw + pair(x, w2) &&
                                   pair(x.scaled(c), w) == c * xw && pair(x, w.scaled(c)) == c * xw;
                   if (ok) return CaseOutcome::pass(5);
                   return CaseOutcome::fail("bilinearity fails on " + m.to_string(),
                                            json{{"kind", "case"},
                                                 {"module", m.to_string()},
                                                 {"x", x.to_string()},
                                                 {"x2", x2.to_string()},
                                                 {"w", w.to_string()},
                                                 {"w2", w2.to_string()},
                                                 {"c", c.to_string()}},
                                            5);
                 }});
  const auto mods = ctx.model.modules();
  if (!mods.empty()) {
    std::vector<ModuleObject> list;
    for (const auto* m : mods) list.push_back(*m->value);
    out.push_back({"model-reflexivity", list.size(), [list](std::size_t i, std::uint64_t seed) {
                     return compare(dual(dual(list[i])), list[i], seed);
                   }});
  }
  for (const auto* c : ctx.model.claims()) {
    const ModuleObject a = *ctx.model.module(c->left).value, b = *ctx.model.module(c->right).value;
    out.push_back({"claim equal(" + c->left + ", " + c->right + ")", 1,
                   [a, b](std::size_t, std::uint64_t seed) { return compare(a, b, seed); }});
  }
  return out;
}

std::vector<Property> limits_suite(const SuiteContext& ctx) {
  const BinaryCheck product = [](const ModuleObject& m, const ModuleObject& n, std::uint64_t seed) {
    return compare(dual(build(BuildKind::Product, m, n)), build(BuildKind::Product, dual(m), dual(n)), seed);
  };
  const BinaryCheck reflexive = [](const ModuleObject& m, const ModuleObject& n, std::uint64_t seed) {
    return compare(dual(build(BuildKind::TensorReflexive, m, n)), build(BuildKind::DualTensor, m, n), seed);
  };
  const BinaryCheck tilde = [](const ModuleObject& m, const ModuleObject& n, std::uint64_t seed) {
    const ModuleObject t = build(BuildKind::TildeTensorOfDuals, m, n);
    CaseOutcome o = compare(t, build(BuildKind::DualTensor, dual(m), dual(n)), seed);
    if (o.status != Status::Pass) return o;
    const ModuleObject plain = ModuleObject::make(Family::rect(m.family, n.family), m.ring);
    CaseOutcome o2 = compare(t, plain, Rng::derive(seed, 1));
    o2.checks += o.checks;
    return o2;
  };
  const BinaryCheck hom = [](const ModuleObject& m, const ModuleObject& n, std::uint64_t seed) {
    return compare(build(BuildKind::Hom, m, n), build(BuildKind::DualTensor, m, dual(n)), seed);
  };
  std::vector<Property> out = {
      random_pairs(ctx, "product-duality", product),
      random_pairs(ctx, "tensor-reflexive-dual", reflexive),
      random_pairs(ctx, "tilde-tensor-of-duals", tilde),
      random_pairs(ctx, "hom-as-dual-tensor", hom),
  };
  if (!ctx.model.modules().empty()) {
    out.push_back(model_pairs(ctx, "model-product-duality", product));
    out.push_back(model_pairs(ctx, "model-tensor-reflexive-dual", reflexive));
  }
  return out;
}

}  // namespace refcalc::detail
