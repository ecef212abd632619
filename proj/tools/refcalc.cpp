// refcalc: run a property suite, or replay a witness from an earlier report.

#include <chrono>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "refcalc/model.hpp"
#include "refcalc/suite.hpp"

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "|") + x;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refcalc: exact property suites for support families and bialgebras"};
  app.set_version_flag("--version", std::string("refcalc ") + REFCALC_VERSION);

  refcalc::SuiteConfig config;
  std::string format = "text";
  std::string replay_path;
  bool quiet = false;

  auto* suite = app.add_option("--suite", config.suite, "Suite to run: " + join(refcalc::suite_names()))
                    ->check(CLI::IsMember(refcalc::suite_names()));
  app.add_option("--seed", config.seed, "64-bit seed")->default_val(42);
  app.add_option("--cases", config.cases, "Cases per random property (default: per suite)")
      ->check(CLI::PositiveNumber);
  app.add_option("--model", config.models, "Model file (.rc DSL or .json structure/tower); repeatable")
      ->check(CLI::ExistingFile);
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  auto* replay = app.add_option("--replay", replay_path, "Witness or JSON report to replay")->check(CLI::ExistingFile);
  app.add_option("--jobs", config.jobs, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->default_val(1);
  app.add_flag("--quiet", quiet, "No timing line on stderr");
  suite->excludes(replay);
  replay->excludes(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (config.suite.empty() && replay_path.empty()) {
    std::cerr << "refcalc: one of --suite or --replay is required\n" << app.help();
    return 2;
  }
  config.format = format == "json" ? refcalc::ReportFormat::Json : refcalc::ReportFormat::Text;

  const auto start = std::chrono::steady_clock::now();
  refcalc::Report report;
  try {
    if (!replay_path.empty())
      report = refcalc::replay(refcalc::read_json_file(replay_path));
    else
      report = refcalc::run_suite(config);
  } catch (const refcalc::ParseError& e) {
    std::cerr << "refcalc: " << e.what() << "\n";
    return 2;
  } catch (const refcalc::UsageError& e) {
    std::cerr << "refcalc: " << e.what() << "\n";
    return 2;
  } catch (const refcalc::TypeError& e) {
    std::cerr << "refcalc: " << e.what() << "\n";
    return 2;
  } catch (const refcalc::Error& e) {
    std::cerr << "refcalc: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << report.render(config.format) << std::flush;
  if (!quiet) std::cerr << "refcalc: " << report.suite << " finished in " << secs << " s\n";
  return report.exit_code();
}
