// Batch pipeline runner: loads a fixture, runs one command, emits one
// report. Identical (fixture, seed, config) always produces byte-identical
// reports; exit codes follow a fixed contract for CI consumption.

#ifndef HOPFGALOIS_CLI_HPP_
#define HOPFGALOIS_CLI_HPP_

#include <cstdint>
#include <string>

#include "hopfgalois/io.hpp"

namespace hopfgalois {

// Exit codes: 0 success/consistent, 2 fixture invalid, 3 budget exceeded,
// 4 contradiction (an implementation bug surfaced by a theorem check).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFixtureInvalid = 2;
inline constexpr int kExitBudgetExceeded = 3;
inline constexpr int kExitContradiction = 4;

struct RunConfig {
  std::string command;  // enumerate | nbg | theorem | hopf-order
  std::string fixture_path;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  long box = 2;
  std::string out_path;         // empty = stdout
  std::string format = "json";  // json | markdown
  std::string verify_only;      // path of a previous report to re-validate
};

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

// Runs the configured command against the fixture document.
RunResult run_command(const RunConfig& config, const Json& fixture);

// Convenience wrapper that reads the fixture from config.fixture_path.
RunResult run_command(const RunConfig& config);

// Renders a report as pretty JSON or as markdown.
std::string render_report(const Json& report, const std::string& format);

// Fixture helpers shared with the tests.
FiniteGroup fixture_group(const Json& fixture);
GaloisContext fixture_context(const Json& fixture);
Lattice fixture_lattice(const Json& fixture, std::size_t dim);

}  // namespace hopfgalois

#endif
