#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "refcalc/suite.hpp"

using namespace refcalc;

namespace {

const std::string kData = REFCALC_TEST_DATA;
const std::string kGolden = REFCALC_TEST_GOLDEN;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SuiteConfig config(const std::string& suite, std::size_t cases, unsigned jobs = 1) {
  SuiteConfig c;
  c.suite = suite;
  c.seed = 42;
  c.cases = cases;
  c.jobs = jobs;
  return c;
}

}  // namespace

TEST(Suite, NamesAndDefaults) {
  EXPECT_EQ(suite_names().size(), 8u);
  EXPECT_EQ(default_cases("polar-laws"), 1000u);
  EXPECT_THROW(default_cases("nope"), UsageError);
  EXPECT_THROW(run_suite(config("nope", 1)), UsageError);
}

TEST(Suite, ReportsAreIdenticalAcrossWorkerCounts) {
  for (const char* s : {"polar-laws", "duality", "limits", "spec-points", "hom-determination"}) {
    const std::string one = run_suite(config(s, 12, 1)).render(ReportFormat::Json);
    const std::string four = run_suite(config(s, 12, 4)).render(ReportFormat::Json);
    EXPECT_EQ(one, four) << s;
    EXPECT_EQ(run_suite(config(s, 12, 3)).render(ReportFormat::Text), run_suite(config(s, 12, 1)).render(ReportFormat::Text));
  }
}

TEST(Suite, SeedChangesCasesButNotVerdicts) {
  SuiteConfig a = config("duality", 20), b = config("duality", 20);
  b.seed = 43;
  const Report ra = run_suite(a), rb = run_suite(b);
  EXPECT_EQ(ra.exit_code(), 0);
  EXPECT_EQ(rb.exit_code(), 0);
  EXPECT_NE(ra.properties[1].checks + ra.properties[0].checks, 0u);
}

TEST(Suite, GoldenJsonReports) {
  EXPECT_EQ(run_suite(config("cartier", 1)).render(ReportFormat::Json), slurp(kGolden + "/cartier_seed42.json"));
  EXPECT_EQ(run_suite(config("linrec", 5)).render(ReportFormat::Json), slurp(kGolden + "/linrec_seed42_cases5.json"));
}

TEST(Suite, JsonSchemaShape) {
  const json j = run_suite(config("linrec", 3)).to_json();
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["artifact"]["name"], "refcalc");
  EXPECT_EQ(j["config"]["seed"], 42);
  EXPECT_EQ(j["config"]["cases"], 3);
  EXPECT_TRUE(j["config"].contains("guard"));
  EXPECT_FALSE(j["config"].contains("jobs"));
  EXPECT_EQ(j["status"], "pass");
}

TEST(Suite, PlantedClaimFailsWithReplayableWitness) {
  SuiteConfig c = config("duality", 10);
  c.models = {kData + "/planted_sum_product.rc"};
  const Report rep = run_suite(c);
  EXPECT_EQ(rep.exit_code(), 1);
  const PropertyResult* failed = nullptr;
  for (const auto& p : rep.properties)
    if (p.status == Status::Fail) failed = &p;
  ASSERT_NE(failed, nullptr);
  EXPECT_EQ(failed->name, "claim equal(DirectSum, DirectProduct)");
  ASSERT_TRUE(failed->witness);
  EXPECT_EQ((*failed->witness)["subsets"][0], "Cofin{}");

  const Report from_witness = replay(*failed->witness);
  ASSERT_EQ(from_witness.properties.size(), 1u);
  EXPECT_EQ(from_witness.properties[0].status, Status::Fail);
  EXPECT_EQ(from_witness.properties[0].detail, failed->detail);
  EXPECT_EQ(from_witness.exit_code(), 1);

  const Report from_report = replay(rep.to_json());
  EXPECT_EQ(from_report.properties.size(), 1u);
  EXPECT_EQ(from_report.properties[0].witness, failed->witness);
}

TEST(Suite, LawWitnessReplaysInIsolation) {
  const json w = json::parse(R"({"kind":"law","law":"module-equal","index":"Atom A","families":["FULL","FIN"],
    "subsets":["Cofin{}"],"suite":"duality","property":"hand-made","seed":1,"cases":1,"case":0,"models":[]})");
  const Report r = replay(w);
  EXPECT_EQ(r.properties[0].status, Status::Fail);
  EXPECT_TRUE(r.replay);
  json ok = w;
  ok["subsets"] = {"Fin{1,2}"};
  EXPECT_EQ(replay(ok).properties[0].status, Status::Pass);
}

TEST(Suite, CaseWitnessRerunsTheRecordedCase) {
  const json w = json::parse(R"({"kind":"case","suite":"linrec","property":"product-annihilates","seed":42,
    "cases":5,"case":3,"models":[]})");
  const Report r = replay(w);
  ASSERT_EQ(r.properties.size(), 1u);
  EXPECT_EQ(r.properties[0].status, Status::Pass);
  EXPECT_EQ(r.properties[0].cases, 1u);
}

TEST(Suite, MalformedWitnesses) {
  EXPECT_THROW(replay(json::parse("[1,2]")), UsageError);
  EXPECT_THROW(replay(json::parse(R"({"kind":"case","suite":"linrec"})")), UsageError);
  EXPECT_THROW(replay(json::parse(R"({"kind":"case","suite":"linrec","property":"nope","seed":1,"cases":1,"case":0})")),
               UsageError);
  EXPECT_THROW(replay(json::parse(R"({"properties":[]})")), UsageError);
}

TEST(Suite, GuardExhaustionIsSkippedNotFailed) {
  SuiteConfig c = config("bialgebra", 1);
  c.guard = 1000;
  const Report rep = run_suite(c);
  EXPECT_EQ(rep.exit_code(), 3);
  bool skipped = false;
  for (const auto& p : rep.properties) {
    EXPECT_NE(p.status, Status::Fail) << p.name;
    if (p.status == Status::Skipped) {
      skipped = true;
      EXPECT_NE(p.detail.find("exceeds the guard 1000"), std::string::npos) << p.detail;
    }
  }
  EXPECT_TRUE(skipped);
}

TEST(Suite, GuardFromEnvironmentIsRecorded) {
  ::setenv("REFCALC_GUARD_MAX", "2000000", 1);
  const json j = run_suite(config("cartier", 1)).to_json();
  ::unsetenv("REFCALC_GUARD_MAX");
  EXPECT_EQ(j["config"]["guard"], 2000000);
  EXPECT_EQ(j["config"]["guard_source"], "REFCALC_GUARD_MAX");
}

TEST(Suite, ModelPropertiesAppear) {
  SuiteConfig c = config("spec-points", 3);
  c.models = {kData + "/adic_tower_f2.json", kData + "/group_algebra_z2_f3.json"};
  const Report rep = run_suite(c);
  EXPECT_EQ(rep.exit_code(), 0);
  std::vector<std::string> names;
  for (const auto& p : rep.properties) names.push_back(p.name);
  EXPECT_NE(std::find(names.begin(), names.end(), "model-tower adic_tower_f2"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "model-points group_algebra_z2_f3"), names.end());
}
