#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refcalc/errors.hpp"
#include "refcalc/json_io.hpp"

namespace refcalc {

enum class ReportFormat { Text, Json };

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 42;
  std::size_t cases = 0;  // 0: the suite's default
  std::uint64_t guard = 0;  // 0: default_guard()
  ReportFormat format = ReportFormat::Text;
  std::vector<std::string> models;
  unsigned jobs = 1;  // never echoed; output does not depend on it
};

/// Usage problems: unknown suite, bad flag values, unreadable witness files.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct PropertyResult {
  std::string name;
  Status status = Status::Pass;
  std::size_t cases = 0;
  std::uint64_t checks = 0;
  std::string detail;             // failure description or skip reason
  std::optional<json> witness;    // set on failure; self-contained for replay
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::uint64_t guard = 0;
  bool guard_from_env = false;
  std::vector<std::string> models;
  std::vector<PropertyResult> properties;
  bool replay = false;

  // 0 all pass, 1 a property failed, 3 a property was skipped by the guard.
  int exit_code() const;
  json to_json() const;
  std::string to_text() const;
  std::string render(ReportFormat f) const;
};

inline constexpr const char* kReportSchema = "refcalc.report/1";

const std::vector<std::string>& suite_names();
std::size_t default_cases(const std::string& suite);

/// Throws UsageError for an unknown suite; model files may throw ParseError,
/// TypeError or Error.
Report run_suite(const SuiteConfig& config);

/// Replays a witness object, or every failing witness of a JSON report.
/// Term witnesses are re-evaluated from their terms alone; case witnesses re-run
/// the single recorded case.
Report replay(const json& witness_or_report);

}  // namespace refcalc
