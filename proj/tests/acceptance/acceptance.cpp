// Acceptance run: one PASS/FAIL line per criterion, each with its runtime target.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "refcalc/bialgebra.hpp"
#include "refcalc/linrec.hpp"
#include "refcalc/profinite.hpp"
#include "refcalc/suite.hpp"

using namespace refcalc;

namespace {

struct Timed {
  Report report;
  double seconds = 0;
};

unsigned jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

Timed run(const std::string& suite, std::size_t cases) {
  SuiteConfig c;
  c.suite = suite;
  c.seed = 42;
  c.cases = cases;
  c.jobs = jobs();
  const auto t0 = std::chrono::steady_clock::now();
  Timed out{run_suite(c), 0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

const PropertyResult* find(const Report& r, const std::string& name) {
  for (const auto& p : r.properties)
    if (p.name == name) return &p;
  return nullptr;
}

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  // The named property passed with at least min_cases cases and min_checks checks.
  void passed(const Report& r, const std::string& name, std::size_t min_cases, std::size_t min_checks = 0) {
    const PropertyResult* p = find(r, name);
    if (!p) return require(false, "missing property " + name);
    require(p->status == Status::Pass, name + ": " + to_string(p->status) + " " + p->detail);
    require(p->cases >= min_cases, name + ": only " + std::to_string(p->cases) + " cases");
    require(p->checks >= min_checks, name + ": only " + std::to_string(p->checks) + " checks");
  }
};

int failures = 0;

void line(const char* id, const std::string& what, const Verdict& v, double seconds, double target) {
  const bool ok = v.ok && seconds <= target;
  if (!ok) ++failures;
  std::string note = v.ok ? "" : "  (" + v.note + ")";
  if (v.ok && seconds > target) note = "  (over the runtime target)";
  std::printf("%s %s  %s  %.2f s / %.0f s%s\n", id, ok ? "PASS" : "FAIL", what.c_str(), seconds, target, note.c_str());
  std::fflush(stdout);
}

double timed(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  {
    const Timed t = run("polar-laws", 1000);
    Verdict v;
    for (const char* law : {"extension", "triple-polar", "triple-polar-direct"}) v.passed(t.report, law, 1000, 200 * 1000);
    line("AC1", "polar laws, 1000 families x 200 subsets", v, t.seconds, 60);
  }

  const Timed duality = run("duality", 200);
  {
    Verdict v;
    v.passed(duality.report, "reflexivity-catalog", 1);
    v.passed(duality.report, "reflexivity-random", 200);
    line("AC2", "reflexivity, catalog and 200 random modules", v, duality.seconds, 60);
  }

  const Timed limits = run("limits", 200);
  {
    Verdict v;
    v.passed(limits.report, "product-duality", 200);
    line("AC3", "product duality on 200 random pairs", v, limits.seconds, 30);
  }
  {
    Verdict v;
    v.passed(limits.report, "tensor-reflexive-dual", 200);
    v.passed(limits.report, "tilde-tensor-of-duals", 200);
    v.passed(limits.report, "hom-as-dual-tensor", 200);
    line("AC4", "hom/tensor index formulas on 200 random pairs", v, limits.seconds, 60);
  }
  {
    Verdict v;
    v.passed(duality.report, "pairing", 10000, 5 * 10000);
    line("AC5", "10^4 pairings, bilinearity exact", v, duality.seconds, 30);
  }

  {
    Timed t = run("bialgebra", 0);
    Verdict v;
    std::size_t mutation_count = 0;
    t.seconds += timed([&] {
      for (const char* f : {"Q", "Fp:2", "Fp:3", "Fp:5"})
        for (const auto& e : bialgebra_catalog(Field::parse(f))) mutation_count += mutations(e.bialgebra).size();
    });
    const std::size_t entries = find(t.report, "catalog-axioms") ? find(t.report, "catalog-axioms")->cases : 0;
    for (const char* p : {"catalog-axioms", "dual-axioms", "double-dual", "flags-exchange", "mutations-detected"})
      v.passed(t.report, p, entries);
    v.require(entries >= 4 * 16, "catalog too small");
    v.require(mutation_count >= 5, "fewer than 5 mutations");
    line("AC6", "bialgebra duality on " + std::to_string(entries) + " entries, " + std::to_string(mutation_count) + " mutations",
         v, t.seconds, 10);
  }

  {
    const Timed t = run("cartier", 0);
    Verdict v;
    v.passed(t.report, "cartier", 4);
    v.passed(t.report, "mu2-counts", 2, 2);
    line("AC7", "Cartier check for Z/2, Z/3, Z/4, Z/2xZ/2; mu_2 over F3 and F2", v, t.seconds, 30);
  }

  {
    const Timed t = run("spec-points", 0);
    Verdict v;
    v.passed(t.report, "adic-nilpotents", 12);
    v.passed(t.report, "depth-stable", 12);
    line("AC8", "x-adic points equal nilpotents, depth-stable", v, t.seconds, 10);
  }

  {
    Timed t = run("linrec", 0);
    Verdict v;
    v.passed(t.report, "hurwitz-ones-square", 1);
    v.passed(t.report, "geom-sum", 1);
    v.passed(t.report, "product-annihilates", 1);
    t.seconds += timed([&] {
      const Field q = Field::rationals();
      const auto ones = parse_linrec("linrec(Q, f=x-1, init=[1], structure=additive)");
      const auto sq = linrec_product(ones, ones);
      v.require(sq.modulus == parse_polynomial("x-2", q), "Hurwitz square of ones has modulus " + poly_to_string(sq.modulus));
      const Vector vals = sq.values(21);
      for (long n = 0; n <= 20; ++n) v.require(vals[n] == q.from_int(1L << n), "2^n fails at n = " + std::to_string(n));
    });
    line("AC9", "Hurwitz ones square, geom sums, annihilating moduli", v, t.seconds, 5);
  }

  {
    const Timed t = run("hom-determination", 100);
    Verdict v;
    v.passed(t.report, "documented-homs", 1);
    v.passed(t.report, "documented-submodules", 1);
    v.passed(t.report, "random-hom-base-change", 100);
    v.passed(t.report, "random-submodules", 100);
    line("AC10", "hom and submodule determination, documented and 100 random", v, t.seconds, 60);
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
