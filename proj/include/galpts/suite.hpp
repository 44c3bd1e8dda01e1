#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galpts/field.hpp"

namespace galpts {

/// One run of the checks. `m` drives the Fm/Em suites, `r` the Gr suite.
struct RunConfig {
  uint32_t p = 3;
  unsigned n = 1;
  std::optional<unsigned> m, r;
  std::string selector = "all";  // thm1a, thm1b, thm2, lemma1, prop1, all
  uint64_t seed = 0;
  unsigned ext_cap = 8;
  int precision = 0;    // 0 = default branch precision
  bool timing = false;  // off keeps reports byte-identical across runs

  nlohmann::json to_json() const;
};

/// Throws ConfigError on bad parameters or an unknown selector.
void validate(const RunConfig& cfg);

struct CheckRecord {
  std::string name;
  std::string anchor;  // the statement being certified
  std::string status;  // pass, fail, error, blocked, external, skipped
  std::string witness;
  int64_t millis = 0;

  bool failed() const { return status == "fail" || status == "error" || status == "blocked"; }
};

struct Report {
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  std::string verdict;  // pass, fail, rejected
  std::string error;    // set when rejected

  nlohmann::json to_json() const;
  std::string to_text() const;
  /// 0 all pass, 1 some check failed, 2 configuration error.
  int exit_code() const;
};

/// Runs the selected suites. Configuration problems give a "rejected" report
/// without any computation; failing checks do not stop later ones.
Report run(const RunConfig& cfg);

struct GridEntry {
  int line = 0;
  uint32_t p = 0;
  unsigned n = 0;
  unsigned e = 0;  // m, or r for thm2
  std::string selector;
  std::string parse_error;
};

/// One `p n m|r selector` tuple per line; `#` starts a comment.
std::vector<GridEntry> parse_grid(std::istream& in);

struct SweepReport {
  std::vector<GridEntry> entries;
  std::vector<Report> reports;

  nlohmann::json to_json() const;
  /// Pass/fail matrix, one row per tuple.
  std::string to_text() const;
  /// 1 if any tuple failed, else 2 if any was rejected, else 0.
  int exit_code() const;
};

/// Smallest legal parameters for each selector.
std::vector<GridEntry> default_grid();

/// Runs every tuple with the seed, cap and precision of `base`.
SweepReport sweep(const std::vector<GridEntry>& grid, const RunConfig& base);

}  // namespace galpts
