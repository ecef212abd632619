#include "refcalc/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "refcalc/hom_search.hpp"
#include "suite_detail.hpp"

namespace refcalc {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

namespace detail {

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Laws

json LawInstance::to_json() const {
  json fams = json::array(), subs = json::array();
  for (const auto& f : families) fams.push_back(f.to_string());
  for (const auto& s : subsets) subs.push_back(s.to_string());
  return json{{"kind", "law"}, {"law", law}, {"index", index.to_string()}, {"families", fams}, {"subsets", subs}};
}

LawInstance LawInstance::from_json(const json& j) {
  LawInstance inst{j.at("law").get<std::string>(), parse_index_term(j.at("index").get<std::string>()), {}, {}};
  for (const auto& f : j.at("families")) inst.families.push_back(parse_family(f.get<std::string>(), inst.index));
  for (const auto& s : j.at("subsets")) inst.subsets.push_back(parse_subset(s.get<std::string>(), inst.index));
  return inst;
}

namespace {

constexpr std::int64_t kWindow = 24;

bool same_set(const DescribedSubset& x, const DescribedSubset& y) {
  return finiteness(x).finite == finiteness(y).finite && points_below(x, kWindow) == points_below(y, kWindow);
}

bool intersection_laws(const DescribedSubset& a, const DescribedSubset& b, const DescribedSubset& c) {
  const DescribedSubset ab = intersect(a, b);
  if (!same_set(ab, intersect(b, a))) return false;
  if (!same_set(intersect(ab, c), intersect(a, intersect(b, c)))) return false;
  if (!same_set(intersect(a, a), a)) return false;
  if (finiteness(a).finite && !finiteness(ab).finite) return false;
  // Pointwise oracle on the window.
  std::vector<Point> expected;
  for (const auto& p : points_below(a, kWindow))
    if (b.contains(p)) expected.push_back(p);
  return points_below(ab, kWindow) == expected;
}

bool projection_law(const DescribedSubset& d) {
  const DescribedSubset p1 = project(d, 1), p2 = project(d, 2);
  for (const auto& p : points_below(d, kWindow))
    if (!p1.contains(p.parts[0]) || !p2.contains(p.parts[1])) return false;
  return true;
}

void need(const LawInstance& inst, std::size_t families, std::size_t subsets) {
  if (inst.families.size() < families || inst.subsets.size() < subsets)
    throw TypeError("law " + inst.law + " needs " + std::to_string(families) + " families and " +
                    std::to_string(subsets) + " subsets");
}

}  // namespace

bool law_holds(const LawInstance& inst) {
  const std::string& law = inst.law;
  if (law == "intersection") {
    need(inst, 0, 3);
    return intersection_laws(inst.subsets[0], inst.subsets[1], inst.subsets[2]);
  }
  if (law == "projection") {
    need(inst, 0, 1);
    return projection_law(inst.subsets[0]);
  }
  if (law == "normal-form") {
    need(inst, 1, 0);
    const Family n = normalize(inst.families[0]);
    return max_polar_run(n) <= 2 && normalize(n) == n;
  }
  need(inst, 1, 1);
  const Family& f = inst.families[0];
  const DescribedSubset& b = inst.subsets[0];
  if (law == "extension") {
    if (!member_ideal(b, f)) return true;
    return member_polar(b, Family::polar(f)) && member_polar(b, normalize(Family::polar(f)));
  }
  if (law == "triple-polar") return member_polar(b, f) == member_polar(b, normalize(Family::polar(Family::polar(f))));
  if (law == "triple-polar-direct") return member_polar(b, f) == member_polar(b, Family::polar(Family::polar(f)));
  if (law == "normalize-preserves") {
    const Family n = normalize(f);
    return member_polar(b, f) == member_polar(b, n) && member_ideal(b, f) == member_ideal(b, n);
  }
  if (law == "antitone") {
    need(inst, 2, 1);
    return !member_polar(b, inst.families[1]) || member_polar(b, f);
  }
  if (law == "ideal-inclusion") {
    need(inst, 2, 1);
    return !member_ideal(b, f) || member_ideal(b, inst.families[1]);
  }
  if (law == "module-equal") {
    need(inst, 2, 1);
    return member_polar(b, f) == member_polar(b, inst.families[1]);
  }
  need(inst, 1, 2);
  const DescribedSubset& c = inst.subsets[1];
  if (law == "ideal-union") return !(member_ideal(b, f) && member_ideal(c, f)) || member_ideal(unite(b, c), f);
  if (law == "ideal-down") return !member_ideal(b, f) || member_ideal(intersect(b, c), f);
  if (law == "polar-meets-members")
    return !(member_polar(b, f) && member_ideal(c, f)) || finiteness(intersect(b, c)).finite;
  throw TypeError("unknown law '" + law + "'");
}

CaseOutcome check_law(const LawInstance& inst, std::uint64_t checks) {
  if (law_holds(inst)) return CaseOutcome::pass(checks);
  std::string detail = inst.law + " fails for";
  for (const auto& f : inst.families) detail += " " + f.to_string();
  for (const auto& s : inst.subsets) detail += " " + s.to_string();
  return CaseOutcome::fail(detail + " over " + inst.index.to_string(), inst.to_json(), checks);
}

CoefficientRing sample_ring(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return CoefficientRing::integers();
    case 1: return CoefficientRing::rationals();
    case 2: return CoefficientRing::prime(5);
    default: return CoefficientRing::dual_numbers(3);
  }
}

ModuleObject sample_module_over(Rng& rng, const IndexTerm& index, const CoefficientRing& ring) {
  return ModuleObject::make(sample_family(rng, index, 4), ring);
}

ModuleObject sample_module(Rng& rng, const CoefficientRing& ring) {
  const IndexTerm index = sample_index(rng, 2);
  return sample_module_over(rng, index, ring);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reports

int Report::exit_code() const {
  bool skipped = false;
  for (const auto& p : properties) {
    if (p.status == Status::Fail) return 1;
    if (p.status == Status::Skipped) skipped = true;
  }
  return skipped ? 3 : 0;
}

json Report::to_json() const {
  std::size_t passed = 0, failed = 0, skipped = 0;
  json props = json::array();
  for (const auto& p : properties) {
    json j{{"name", p.name}, {"status", to_string(p.status)}, {"cases", p.cases}, {"checks", p.checks}};
    if (!p.detail.empty()) j["detail"] = p.detail;
    if (p.witness) j["witness"] = *p.witness;
    props.push_back(std::move(j));
    (p.status == Status::Pass ? passed : p.status == Status::Fail ? failed : skipped)++;
  }
  const int code = exit_code();
  return json{{"schema", kReportSchema},
              {"artifact", {{"name", "refcalc"}, {"version", REFCALC_VERSION}}},
              {"suite", suite},
              {"replay", replay},
              {"config",
               {{"seed", seed},
                {"cases", cases},
                {"guard", guard},
                {"guard_source", guard_from_env ? "REFCALC_GUARD_MAX" : "default"},
                {"models", models}}},
              {"properties", props},
              {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
              {"status", code == 0 ? "pass" : code == 1 ? "fail" : "skipped"}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "refcalc " << REFCALC_VERSION << (replay ? " replay" : "") << "  suite=" << suite << " seed=" << seed
     << " cases=" << cases << " guard=" << guard << (guard_from_env ? " (REFCALC_GUARD_MAX)" : "") << "\n";
  for (const auto& m : models) os << "model " << m << "\n";
  std::size_t width = 0;
  for (const auto& p : properties) width = std::max(width, p.name.size());
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& p : properties) {
    const char* tag = p.status == Status::Pass ? "PASS" : p.status == Status::Fail ? "FAIL" : "SKIP";
    os << tag << "  " << p.name << std::string(width - p.name.size() + 2, ' ') << p.checks << " checks in "
       << p.cases << " cases\n";
    if (!p.detail.empty()) os << "      " << p.detail << "\n";
    if (p.witness) os << "      witness: " << p.witness->dump() << "\n";
    (p.status == Status::Pass ? passed : p.status == Status::Fail ? failed : skipped)++;
  }
  os << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return os.str();
}

std::string Report::render(ReportFormat f) const { return f == ReportFormat::Json ? to_json().dump(2) + "\n" : to_text(); }

// ---------------------------------------------------------------------------
// Running

namespace {

using detail::CaseOutcome;
using detail::Property;
using detail::SuiteBuilder;
using detail::SuiteContext;

const std::map<std::string, SuiteBuilder>& builders() {
  static const std::map<std::string, SuiteBuilder> m = {
      {"polar-laws", detail::polar_laws_suite},   {"duality", detail::duality_suite},
      {"limits", detail::limits_suite},           {"bialgebra", detail::bialgebra_suite},
      {"cartier", detail::cartier_suite},         {"linrec", detail::linrec_suite},
      {"spec-points", detail::spec_points_suite}, {"hom-determination", detail::hom_determination_suite},
  };
  return m;
}

const std::map<std::string, std::size_t> kDefaultCases = {
    {"polar-laws", 1000}, {"duality", 200},   {"limits", 200},      {"bialgebra", 1},
    {"cartier", 1},       {"linrec", 200},    {"spec-points", 100}, {"hom-determination", 100},
};

bool guard_env_set() {
  const char* v = std::getenv("REFCALC_GUARD_MAX");
  return v && *v;
}

CaseOutcome run_one(const Property& p, std::size_t i, std::uint64_t property_seed) {
  try {
    return p.run(i, Rng::derive(property_seed, i));
  } catch (const GuardExceeded& e) {
    return CaseOutcome{Status::Skipped, 0, e.what(), {}};
  } catch (const Error& e) {
    return CaseOutcome::fail(std::string("error: ") + e.what(), json{{"kind", "case"}});
  }
}

struct WitnessEcho {
  std::string suite;
  std::uint64_t seed;
  std::size_t cases;
  std::vector<std::string> models;
};

PropertyResult merge(const Property& p, const std::vector<std::pair<std::size_t, CaseOutcome>>& outcomes,
                     const WitnessEcho& echo) {
  PropertyResult r;
  r.name = p.name;
  r.cases = outcomes.size();
  std::size_t skipped = 0;
  const std::pair<std::size_t, CaseOutcome>* first_fail = nullptr;
  const CaseOutcome* first_skip = nullptr;
  for (const auto& entry : outcomes) {
    const CaseOutcome& o = entry.second;
    r.checks += o.checks;
    if (o.status == Status::Fail && !first_fail) first_fail = &entry;
    if (o.status == Status::Skipped) {
      ++skipped;
      if (!first_skip) first_skip = &o;
    }
  }
  if (first_fail) {
    r.status = Status::Fail;
    r.detail = "case " + std::to_string(first_fail->first) + ": " + first_fail->second.detail;
    json w = first_fail->second.witness.is_object() ? first_fail->second.witness : json{{"kind", "case"}};
    if (!w.contains("kind")) w["kind"] = "case";
    w["suite"] = echo.suite;
    w["property"] = p.name;
    w["seed"] = echo.seed;
    w["cases"] = echo.cases;
    w["case"] = first_fail->first;
    w["models"] = echo.models;
    r.witness = std::move(w);
  } else if (first_skip) {
    r.status = Status::Skipped;
    r.detail = std::to_string(skipped) + " of " + std::to_string(outcomes.size()) +
               " cases skipped: " + first_skip->detail;
  }
  return r;
}

PropertyResult execute(const Property& p, std::uint64_t seed, unsigned jobs, const WitnessEcho& echo) {
  const std::uint64_t property_seed = Rng::derive(seed, detail::name_hash(p.name));
  std::vector<std::pair<std::size_t, CaseOutcome>> outcomes(p.cases);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(p.cases)));
  if (workers == 1) {
    for (std::size_t i = 0; i < p.cases; ++i) outcomes[i] = {i, run_one(p, i, property_seed)};
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < p.cases; i = next++) outcomes[i] = {i, run_one(p, i, property_seed)};
      });
    for (auto& t : pool) t.join();
  }
  return merge(p, outcomes, echo);
}

SuiteContext make_context(std::uint64_t seed, std::size_t cases, std::uint64_t guard,
                          const std::vector<std::string>& models) {
  SuiteContext ctx;
  ctx.seed = seed;
  ctx.cases = cases;
  ctx.guard = guard;
  for (const auto& path : models) ctx.model.merge(parse_model_file(path));
  return ctx;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"polar-laws", "duality",     "limits",           "bialgebra",
                                                 "cartier",    "linrec",      "spec-points",      "hom-determination"};
  return names;
}

std::size_t default_cases(const std::string& suite) {
  const auto it = kDefaultCases.find(suite);
  if (it == kDefaultCases.end()) throw UsageError("unknown suite '" + suite + "'");
  return it->second;
}

Report run_suite(const SuiteConfig& config) {
  const auto it = builders().find(config.suite);
  if (it == builders().end()) throw UsageError("unknown suite '" + config.suite + "'");
  Report rep;
  rep.suite = config.suite;
  rep.seed = config.seed;
  rep.cases = config.cases ? config.cases : default_cases(config.suite);
  rep.guard = config.guard ? config.guard : default_guard();
  rep.guard_from_env = !config.guard && guard_env_set();
  rep.models = config.models;
  const SuiteContext ctx = make_context(rep.seed, rep.cases, rep.guard, config.models);
  const WitnessEcho echo{rep.suite, rep.seed, rep.cases, rep.models};
  for (const auto& p : it->second(ctx)) rep.properties.push_back(execute(p, rep.seed, config.jobs, echo));
  return rep;
}

namespace {

PropertyResult replay_one(const json& w) {
  const std::string suite = w.at("suite").get<std::string>();
  const std::string property = w.at("property").get<std::string>();
  const WitnessEcho echo{suite, w.at("seed").get<std::uint64_t>(), w.at("cases").get<std::size_t>(),
                         w.value("models", std::vector<std::string>{})};
  if (w.at("kind") == "law") {
    const detail::LawInstance inst = detail::LawInstance::from_json(w);
    const Property p{property, 1, [&](std::size_t, std::uint64_t) { return detail::check_law(inst); }};
    PropertyResult r = execute(p, echo.seed, 1, echo);
    if (r.witness) (*r.witness)["case"] = w.at("case");
    return r;
  }
  const auto it = builders().find(suite);
  if (it == builders().end()) throw UsageError("witness names unknown suite '" + suite + "'");
  const SuiteContext ctx = make_context(echo.seed, echo.cases, default_guard(), echo.models);
  const std::size_t index = w.at("case").get<std::size_t>();
  for (const auto& p : it->second(ctx)) {
    if (p.name != property) continue;
    if (index >= p.cases) throw UsageError("witness case " + std::to_string(index) + " out of range");
    const std::uint64_t property_seed = Rng::derive(echo.seed, detail::name_hash(p.name));
    return merge(p, {{index, run_one(p, index, property_seed)}}, echo);
  }
  throw UsageError("suite " + suite + " has no property '" + property + "'");
}

}  // namespace

Report replay(const json& input) {
  std::vector<json> witnesses;
  if (input.is_object() && input.contains("properties")) {
    for (const auto& p : input["properties"])
      if (p.contains("witness")) witnesses.push_back(p["witness"]);
    if (witnesses.empty()) throw UsageError("report contains no failing witness");
  } else if (input.is_object() && input.contains("kind")) {
    witnesses.push_back(input);
  } else {
    throw UsageError("expected a witness object or a JSON report");
  }
  Report rep;
  rep.replay = true;
  try {
    rep.suite = witnesses.front().at("suite").get<std::string>();
    rep.seed = witnesses.front().at("seed").get<std::uint64_t>();
    rep.cases = witnesses.front().at("cases").get<std::size_t>();
    rep.models = witnesses.front().value("models", std::vector<std::string>{});
    rep.guard = default_guard();
    rep.guard_from_env = guard_env_set();
    for (const auto& w : witnesses) rep.properties.push_back(replay_one(w));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed witness: ") + e.what());
  }
  return rep;
}

}  // namespace refcalc
