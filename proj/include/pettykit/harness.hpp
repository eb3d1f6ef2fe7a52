#pragma once

#include <string>
#include <vector>

#include "pettykit/empirical.hpp"
#include "pettykit/io.hpp"

namespace pettykit {

struct SuiteCase {
  std::string id;
  json values;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  json config;  // resolved, with defaults filled in
  std::vector<SuiteCase> cases;
  bool pass = false;
  double wall_seconds = 0.0;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<std::string> csv_rows;  // optional plot-ready profile data

  json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string verifies;
  std::string tolerance;
};

/// The ten verification suites with the theorem each one checks.
std::vector<SuiteInfo> suite_table();

/// Run one suite from a config {"suite": name, "seed"?, "samples_scale"?,
/// ...}. Unknown suites and schema violations throw ConfigError.
SuiteReport run_suite(const json& config);

/// Full CLI (subcommands run/list). Exit codes: 0 pass, 1 verified
/// inequality failure, 2 usage/config error.
int cli_main(int argc, char** argv);

// shared tolerance policy (single source of truth, surfaced in reports)
namespace tol {
inline constexpr double exact_rel = 1e-9;       // exact-path assertions
inline constexpr double vertex_rel = 1e-12;     // vertex-wise identities
inline constexpr double oracle_rel = 1e-3;      // facet vs fd-limit oracle
inline constexpr double sigma_policy = 3.0;     // MC inequality decisions
inline constexpr double fd_eps = 1e-4;          // fd oracle step
inline constexpr int fd_dirs = 2048;            // fd oracle grid
inline constexpr int t_grid_points = 41;        // convexity scans
}  // namespace tol

}  // namespace pettykit
