#pragma once

// Internal plumbing shared by the suite implementations.

#include <functional>
#include <string>
#include <vector>

#include "refcalc/model.hpp"
#include "refcalc/suite.hpp"

namespace refcalc::detail {

struct CaseOutcome {
  Status status = Status::Pass;
  std::uint64_t checks = 0;
  std::string detail;
  json witness;  // failure data; merged into the replayable witness

  static CaseOutcome pass(std::uint64_t checks = 1) { return {Status::Pass, checks, {}, {}}; }
  static CaseOutcome fail(std::string detail, json witness, std::uint64_t checks = 1) {
    return {Status::Fail, checks, std::move(detail), std::move(witness)};
  }
};

/// A property is a list of independent cases. Case i receives
/// Rng::derive(property seed, i) so sharding never changes what a case sees.
struct Property {
  std::string name;
  std::size_t cases = 1;
  std::function<CaseOutcome(std::size_t index, std::uint64_t case_seed)> run;
};

struct SuiteContext {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::uint64_t guard = 0;
  Model model;
};

using SuiteBuilder = std::vector<Property> (*)(const SuiteContext&);

std::vector<Property> polar_laws_suite(const SuiteContext& ctx);
std::vector<Property> duality_suite(const SuiteContext& ctx);
std::vector<Property> limits_suite(const SuiteContext& ctx);
std::vector<Property> bialgebra_suite(const SuiteContext& ctx);
std::vector<Property> cartier_suite(const SuiteContext& ctx);
std::vector<Property> linrec_suite(const SuiteContext& ctx);
std::vector<Property> spec_points_suite(const SuiteContext& ctx);
std::vector<Property> hom_determination_suite(const SuiteContext& ctx);

// ---------------------------------------------------------------------------
// Laws over set families. A law instance is all terms needed to re-decide it.

struct LawInstance {
  std::string law;
  IndexTerm index;
  std::vector<Family> families;
  std::vector<DescribedSubset> subsets;

  json to_json() const;
  static LawInstance from_json(const json& j);
};

/// Known laws:
///   extension            b in <F>  =>  b in (F°)°
///   triple-polar         b in F°  <=>  b in normalize(POLAR(POLAR(F)))°
///   triple-polar-direct  the same without normalizing
///   antitone             <F0> ⊆ <F1>:  b in F1°  =>  b in F0°
///   ideal-inclusion      <F0> ⊆ <F1>:  b in <F0>  =>  b in <F1>
///   ideal-union          a, c in <F>  =>  a ∪ c in <F>
///   ideal-down           a in <F>  =>  a ∩ c in <F>
///   polar-meets-members  b in F°, a in <F>  =>  b ∩ a finite
///   normalize-preserves  membership in <F> and F° unchanged by normalize
///   normal-form          normalize is idempotent with polar runs <= 2
///   module-equal         b in F0°  <=>  b in F1°
///   intersection         ∩ commutative, associative, idempotent on a probe window
///   projection           sampled points of d project into project(d, axis)
/// Throws TypeError for an unknown law.
bool law_holds(const LawInstance& inst);

CaseOutcome check_law(const LawInstance& inst, std::uint64_t checks = 1);

/// Catalog of rings used for random module objects.
CoefficientRing sample_ring(Rng& rng);
/// A random module over a random index of depth <= 2 with a family of depth <= 4.
ModuleObject sample_module(Rng& rng, const CoefficientRing& ring);
ModuleObject sample_module_over(Rng& rng, const IndexTerm& index, const CoefficientRing& ring);

std::uint64_t name_hash(const std::string& s);

}  // namespace refcalc::detail
