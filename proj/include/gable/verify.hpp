#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gable::verify {

struct Options {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Largest k for the parity suite.
  int max_k = 3;
  /// Largest m, n for the lattice-path laws.
  int max_path = 4;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
  std::size_t failures() const;
};

/// Known suite names, without "all".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Deterministic in the seed; the
/// job count only changes scheduling. Throws Error("unknown-suite").
std::vector<SuiteReport> run(const std::string& name, const Options& options);

/// {"seed":..,"suites":[{"suite":..,"pass":..,"checks":..,"failed":..,"failures":[...]}],"pass":..}.
/// Passing checks are summarized by count; failing ones are listed with witnesses.
nlohmann::json to_json(const std::vector<SuiteReport>& reports, const Options& options);

}  // namespace gable::verify
