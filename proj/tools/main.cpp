#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mogpi/experiment.hpp"
#include "mogpi/geometry.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("MOGPI_LOG");
  if (!env) return 1;
  std::string v(env);
  if (v == "quiet" || v == "0") return 0;
  if (v == "debug" || v == "2") return 2;
  return 1;
}

void info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << msg << '\n';
}

int cmd_run(const std::string& config_path, const std::string& seeds,
            const std::string& out_dir) {
  mogpi::ExperimentConfig cfg = mogpi::parse_config(config_path);
  if (!seeds.empty()) {
    // reuse the config parser so the list grammar stays identical
    mogpi::ExperimentConfig patch = mogpi::parse_config_text(
        mogpi::canonical_config_text(cfg) + "seeds=" + seeds + "\n",
        "--seeds");
    cfg.seeds = patch.seeds;
  }
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  info("running " + mogpi::algorithm_name(cfg.algorithm) + " on " + cfg.env +
       " with " + std::to_string(cfg.seeds.size()) + " seed(s)");
  auto records = mogpi::run_experiment(cfg);
  for (const auto& r : records)
    info("seed " + std::to_string(r.seed) + ": " +
         std::to_string(r.final_values.vectors.size()) + " value vectors, " +
         mogpi::format_double(r.duration_seconds) + " s");
  info("wrote results to " + cfg.out_dir);
  return 0;
}

int cmd_oracle(const std::string& env, const std::string& out_dir) {
  mogpi::ExperimentConfig cfg;
  cfg.env = env;
  cfg.algorithm = mogpi::Algorithm::kOracle;
  cfg.out_dir = out_dir;
  auto records = mogpi::run_experiment(cfg);
  info("oracle set size: " +
       std::to_string(records.front().final_values.vectors.size()));
  info("wrote " + out_dir + "/ccs.csv");
  return 0;
}

int cmd_compare(const std::string& baseline, const std::string& candidate,
                double threshold_fraction) {
  mogpi::CompareSummary s =
      mogpi::compare_runs(baseline, candidate, threshold_fraction);
  std::cout << mogpi::format_compare_summary(s);
  return 0;
}

int cmd_weights(int m, int n) {
  for (const auto& w : mogpi::equidistant_weights(n, m)) {
    for (Eigen::Index i = 0; i < w.dim(); ++i) {
      if (i) std::cout << ',';
      std::cout << mogpi::format_double(w[i]);
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective tabular RL experiment harness"};
  app.require_subcommand(1);

  std::string config_path, seeds, out_dir;
  auto* run = app.add_subcommand("run", "Execute a configured experiment");
  run->add_option("--config", config_path, "Config file (key = value lines)")
      ->required();
  run->add_option("--seeds", seeds, "Comma-separated seed list override");
  run->add_option("--out", out_dir, "Output directory override");

  std::string oracle_env = "dst", oracle_out = "out";
  auto* oracle = app.add_subcommand("oracle", "Compute the exact CCS");
  oracle->add_option("--env", oracle_env, "'dst' or a map file path");
  oracle->add_option("--out", oracle_out, "Output directory")->required();

  std::string baseline, candidate;
  double threshold_fraction = 0.1;
  auto* compare =
      app.add_subcommand("compare", "Compare two experiment output dirs");
  compare->add_option("baseline", baseline, "Baseline directory")->required();
  compare->add_option("candidate", candidate, "Candidate directory")
      ->required();
  compare->add_option("--threshold-fraction", threshold_fraction,
                      "Per-seed threshold as a fraction of initial MUL");

  int m = 2, n = 101;
  auto* weights = app.add_subcommand("weights", "Print a simplex weight grid");
  weights->add_option("--m", m, "Number of objectives");
  weights->add_option("--n", n, "Requested grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit cleanly, usage errors as 1
  }

  try {
    if (run->parsed()) return cmd_run(config_path, seeds, out_dir);
    if (oracle->parsed()) return cmd_oracle(oracle_env, oracle_out);
    if (compare->parsed())
      return cmd_compare(baseline, candidate, threshold_fraction);
    if (weights->parsed()) return cmd_weights(m, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
