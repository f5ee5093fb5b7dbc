#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nrdcsk/engine.hpp"

namespace nrdcsk::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string axis;
  std::vector<double> values;
};

// A validated run plan: a base scenario plus zero or more sweep axes.
// Multiple axes expand to their cross product, one result row per cell.
struct RunConfig {
  engine::Scenario base;
  std::vector<SweepAxis> sweeps;
  std::string out = "results.csv";
  int workers = 0;  // 0 = hardware concurrency
  bool analysis_overlay = true;
};

// Parses the flat JSON document (sections modem/jammer/channel/sweep/run).
// Throws ConfigError with the offending key path on any violation.
RunConfig parse_config(const std::string& text);

// Canonical JSON form; parse_config(canonical_config(c)) reproduces c.
std::string canonical_config(const RunConfig& config);

struct TaggedScenario {
  std::string scenario_id;
  engine::Scenario scenario;
};

// Cross product of the sweep axes, with per-cell sub-seeds.
std::vector<TaggedScenario> expand_plan(const RunConfig& config);

struct ResultRow {
  TaggedScenario tag;
  engine::BerEstimate estimate;  // bits == 0 means analysis-only row
};

// CSV with the fixed column set; inapplicable fields are empty strings.
std::string csv_string(const std::vector<ResultRow>& rows,
                       bool analysis_overlay);
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path,
              bool analysis_overlay);

}  // namespace nrdcsk::cli
