#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mogpi/environments.hpp"
#include "mogpi/learners.hpp"
#include "mogpi/oracle.hpp"

namespace mogpi {

/// Master seed feeding the per-run split function: the rng of seed s is
/// Rng(kMasterSeed).split(s), so adding seeds never perturbs existing runs.
constexpr std::uint64_t kMasterSeed = 0x6d6f727067ULL;

enum class Algorithm { kGpiLs, kGpiPd, kGpiPdUniform, kOracle };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct ExperimentConfig {
  std::string env = "dst";  // "dst" or a map file path
  Algorithm algorithm = Algorithm::kGpiPd;
  double gamma = 0.99;
  double time_penalty = -1.0;
  LearnerConfig learner;
  BufferConfig buffer{50000, 0.6, 0.001};
  GeometryConfig geometry;
  OracleConfig oracle;
  std::vector<std::uint64_t> seeds = {1};
  std::string out_dir = "out";
  int workers = 0;  // 0 = all available cores

  void validate() const;
};

/// Parses the flat key=value format ('#' comments, blank lines ignored).
/// Unknown keys and malformed lines raise with file/line diagnostics.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin);

/// FNV-1a over the canonical serialization of all semantic fields (defaults
/// filled in), so whitespace, comments, and key order never affect it.
std::uint64_t config_hash(const ExperimentConfig& cfg);
std::string canonical_config_text(const ExperimentConfig& cfg);

struct RunRecord {
  std::uint64_t config_hash;
  std::uint64_t seed;
  MetricTrace trace;
  ValueSet final_values;
  double duration_seconds;
};

/// Executes one seeded run per configured seed (parallel worker pool, results
/// in seed order) and writes trace_seed<seed>.csv, ccs_seed<seed>.csv, and
/// aggregate.csv into the output directory. algorithm=oracle writes ccs.csv.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

struct CompareSummary {
  std::vector<int> iterations;
  std::vector<double> eu_delta;   // candidate - baseline, per iteration
  std::vector<double> mul_delta;  // candidate - baseline, per iteration
  std::vector<long> baseline_steps;   // per seed; -1 means never reached
  std::vector<long> candidate_steps;  // per seed; -1 means never reached
  double baseline_median_steps;  // over seeds that reached; NaN when none did
  double candidate_median_steps;
  double median_ratio;  // candidate / baseline; NaN when either side empty
  double threshold_fraction;
};

/// Reads aggregate.csv from both directories (errors when iteration grids
/// differ) plus the per-seed traces, and reports per-iteration EU/MUL deltas
/// and steps-to-threshold medians. The per-seed threshold is
/// threshold_fraction times that seed's initial grid MUL; seeds that never
/// cross are reported as not reached and excluded from the medians.
CompareSummary compare_runs(const std::string& baseline_dir,
                            const std::string& candidate_dir,
                            double threshold_fraction = 0.1);

std::string format_compare_summary(const CompareSummary& s);

// CSV plumbing shared by the harness and its tests; every number is written
// with "%.17g", '.' decimal separator, LF line endings.
std::string format_double(double x);
void write_trace_csv(const std::string& path, const MetricTrace& trace);
MetricTrace read_trace_csv(const std::string& path);
void write_value_set_csv(const std::string& path, const ValueSet& v);
ValueSet read_value_set_csv(const std::string& path);

}  // namespace mogpi
