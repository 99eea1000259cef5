#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "exmc/config.hpp"
#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"

namespace exmc {

/// Model, prior, posterior and proposal described by a config.
struct BuiltExperiment {
  ModelPtr model;
  Prior prior;
  PosteriorSpec posterior;
  Proposal proposal;
  std::vector<std::string> notes;
};

/// Throws ConfigError (with the field path) for invalid blocks and
/// BudgetError for oversized enumerations.
BuiltExperiment build_experiment(const ExperimentConfig& config);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;  // overrides the config seed
  bool write_files = true;
};

struct CheckSummary {
  std::string check;
  std::string detail;
  bool satisfied = false;
};

struct ExperimentResult {
  std::uint64_t seed = 0;
  std::vector<CheckSummary> checks;
  std::string report_json;
  std::string summary;

  bool all_passed() const;
};

/// Runs traces and all enabled checks. With write_files, writes trace.csv
/// (trace_mh.csv as well when both algorithms run), trace.json,
/// report.json, summary.txt and matrix CSVs into out_dir.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace exmc
