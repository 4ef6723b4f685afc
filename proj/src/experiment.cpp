#include "mogpi/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mogpi/dp.hpp"

namespace mogpi {

namespace fs = std::filesystem;

Algorithm parse_algorithm(const std::string& name) {
  if (name == "gpi-ls") return Algorithm::kGpiLs;
  if (name == "gpi-pd") return Algorithm::kGpiPd;
  if (name == "gpi-pd-uniform") return Algorithm::kGpiPdUniform;
  if (name == "oracle") return Algorithm::kOracle;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kGpiLs: return "gpi-ls";
    case Algorithm::kGpiPd: return "gpi-pd";
    case Algorithm::kGpiPdUniform: return "gpi-pd-uniform";
    case Algorithm::kOracle: return "oracle";
  }
  throw std::logic_error("unreachable");
}

void ExperimentConfig::validate() const {
  if (seeds.empty())
    throw std::invalid_argument("ExperimentConfig: need at least one seed");
  if (gamma < 0.0 || gamma >= 1.0)
    throw std::invalid_argument("ExperimentConfig: gamma must be in [0,1)");
  if (buffer.capacity <= 0)
    throw std::invalid_argument("ExperimentConfig: buffer capacity must be positive");
  if (workers < 0)
    throw std::invalid_argument("ExperimentConfig: workers must be >= 0");
  learner.validate();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& where) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(where + ": expected a number, got '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument(where + ": trailing characters in '" + s + "'");
  return v;
}

long to_long(const std::string& s, const std::string& where) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(where + ": expected an integer, got '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument(where + ": trailing characters in '" + s + "'");
  return v;
}

std::vector<std::uint64_t> to_seed_list(const std::string& s,
                                        const std::string& where) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::invalid_argument(where + ": empty seed entry");
    out.push_back(static_cast<std::uint64_t>(to_long(item, where)));
  }
  if (out.empty()) throw std::invalid_argument(where + ": empty seed list");
  return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& origin) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string where = origin + ":" + std::to_string(lineno);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::invalid_argument(where + ": empty key or value");

    if (key == "env") cfg.env = val;
    else if (key == "algorithm") {
      try {
        cfg.algorithm = parse_algorithm(val);
      } catch (const std::exception& e) {
        throw std::invalid_argument(where + ": " + e.what());
      }
    } else if (key == "gamma") cfg.gamma = to_double(val, where);
    else if (key == "time_penalty") cfg.time_penalty = to_double(val, where);
    else if (key == "learning_rate") cfg.learner.learning_rate = to_double(val, where);
    else if (key == "epsilon_start") cfg.learner.epsilon.start = to_double(val, where);
    else if (key == "epsilon_end") cfg.learner.epsilon.end = to_double(val, where);
    else if (key == "epsilon_anneal_steps") cfg.learner.epsilon.anneal_steps = to_long(val, where);
    else if (key == "steps_per_iteration") cfg.learner.steps_per_iteration = to_long(val, where);
    else if (key == "dyna_steps") cfg.learner.dyna_steps = static_cast<int>(to_long(val, where));
    else if (key == "max_iterations") cfg.learner.max_iterations = static_cast<int>(to_long(val, where));
    else if (key == "epsilon_ccs") cfg.learner.epsilon_ccs = to_double(val, where);
    else if (key == "gpi_rollouts") cfg.learner.gpi_rollouts = static_cast<int>(to_long(val, where));
    else if (key == "rollout_horizon") cfg.learner.rollout_horizon = to_long(val, where);
    else if (key == "done_threshold") cfg.learner.done_threshold = to_double(val, where);
    else if (key == "buffer_capacity") cfg.buffer.capacity = static_cast<int>(to_long(val, where));
    else if (key == "alpha_per") cfg.buffer.alpha_per = to_double(val, where);
    else if (key == "kappa") cfg.buffer.kappa = to_double(val, where);
    else if (key == "feasibility_tolerance") cfg.geometry.feasibility_tolerance = to_double(val, where);
    else if (key == "dedup_tolerance") cfg.geometry.dedup_tolerance = to_double(val, where);
    else if (key == "vi_tolerance") cfg.oracle.vi_tolerance = to_double(val, where);
    else if (key == "vi_max_sweeps") cfg.oracle.vi_max_sweeps = static_cast<int>(to_long(val, where));
    else if (key == "weight_grid_size") cfg.oracle.weight_grid_size = static_cast<int>(to_long(val, where));
    else if (key == "max_ccs_iterations") cfg.oracle.max_ccs_iterations = static_cast<int>(to_long(val, where));
    else if (key == "seeds") cfg.seeds = to_seed_list(val, where);
    else if (key == "out") cfg.out_dir = val;
    else if (key == "workers") cfg.workers = static_cast<int>(to_long(val, where));
    else throw std::invalid_argument(where + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string canonical_config_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "algorithm=" << algorithm_name(cfg.algorithm) << '\n'
      << "alpha_per=" << format_double(cfg.buffer.alpha_per) << '\n'
      << "buffer_capacity=" << cfg.buffer.capacity << '\n'
      << "dedup_tolerance=" << format_double(cfg.geometry.dedup_tolerance) << '\n'
      << "done_threshold=" << format_double(cfg.learner.done_threshold) << '\n'
      << "dyna_steps=" << cfg.learner.dyna_steps << '\n'
      << "env=" << cfg.env << '\n'
      << "epsilon_anneal_steps=" << cfg.learner.epsilon.anneal_steps << '\n'
      << "epsilon_ccs=" << format_double(cfg.learner.epsilon_ccs) << '\n'
      << "epsilon_end=" << format_double(cfg.learner.epsilon.end) << '\n'
      << "epsilon_start=" << format_double(cfg.learner.epsilon.start) << '\n'
      << "feasibility_tolerance=" << format_double(cfg.geometry.feasibility_tolerance) << '\n'
      << "gamma=" << format_double(cfg.gamma) << '\n'
      << "gpi_rollouts=" << cfg.learner.gpi_rollouts << '\n'
      << "kappa=" << format_double(cfg.buffer.kappa) << '\n'
      << "learning_rate=" << format_double(cfg.learner.learning_rate) << '\n'
      << "max_ccs_iterations=" << cfg.oracle.max_ccs_iterations << '\n'
      << "max_iterations=" << cfg.learner.max_iterations << '\n'
      << "rollout_horizon=" << cfg.learner.rollout_horizon << '\n'
      << "steps_per_iteration=" << cfg.learner.steps_per_iteration << '\n'
      << "time_penalty=" << format_double(cfg.time_penalty) << '\n'
      << "vi_max_sweeps=" << cfg.oracle.vi_max_sweeps << '\n'
      << "vi_tolerance=" << format_double(cfg.oracle.vi_tolerance) << '\n'
      << "weight_grid_size=" << cfg.oracle.weight_grid_size << '\n';
  out << "seeds=";
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
    if (i) out << ',';
    out << cfg.seeds[i];
  }
  out << '\n';
  return out.str();
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::string text = canonical_config_text(cfg);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// CSV I/O

void write_trace_csv(const std::string& path, const MetricTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "iteration,env_steps,eu_grid,mul_grid,mul_corner,library_size\n";
  for (const auto& r : trace) {
    out << r.iteration << ',' << r.env_steps << ',' << format_double(r.eu_grid)
        << ',' << format_double(r.mul_grid) << ','
        << format_double(r.mul_corner) << ',' << r.library_size << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

MetricTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty trace file");
  if (trim(line) != "iteration,env_steps,eu_grid,mul_grid,mul_corner,library_size")
    throw std::runtime_error(path + ": unexpected header '" + line + "'");
  MetricTrace trace;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto f = split_csv_line(line);
    std::string where = path + ":" + std::to_string(lineno);
    if (f.size() != 6) throw std::runtime_error(where + ": expected 6 columns");
    MetricRecord r;
    r.iteration = static_cast<int>(to_long(f[0], where));
    r.env_steps = to_long(f[1], where);
    r.eu_grid = to_double(f[2], where);
    r.mul_grid = to_double(f[3], where);
    r.mul_corner = to_double(f[4], where);
    r.library_size = static_cast<int>(to_long(f[5], where));
    trace.push_back(r);
  }
  return trace;
}

void write_value_set_csv(const std::string& path, const ValueSet& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  Eigen::Index m = v.vectors.empty() ? 0 : v.vectors.front().size();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (j) out << ',';
    out << 'v' << j;
  }
  out << '\n';
  for (const auto& vec : v.vectors) {
    for (Eigen::Index j = 0; j < vec.size(); ++j) {
      if (j) out << ',';
      out << format_double(vec[j]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

ValueSet read_value_set_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open value set file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty value set file");
  ValueSet v;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto f = split_csv_line(line);
    Vec vec(static_cast<Eigen::Index>(f.size()));
    for (std::size_t j = 0; j < f.size(); ++j)
      vec[static_cast<Eigen::Index>(j)] =
          to_double(f[j], path + ":" + std::to_string(lineno));
    v.vectors.push_back(std::move(vec));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Experiment driver

namespace {

Momdp build_env(const ExperimentConfig& cfg) {
  DstMap map = (cfg.env == "dst") ? canonical_dst_map() : load_dst_map(cfg.env);
  map.time_penalty = cfg.time_penalty;
  return build_dst(map, cfg.gamma);
}

/// Exact value vectors of the library's greedy policies, dominance-pruned.
ValueSet final_value_set(const Momdp& env, const PolicyLibrary& lib,
                         const GeometryConfig& geometry) {
  ValueSet out;
  for (int i = 0; i < lib.size(); ++i) {
    const MoQTable& q = lib.q_tables[i];
    const WeightVector& w = lib.weight_support[i];
    std::vector<int> policy(q.state_count(), 0);
    for (int s = 0; s < q.state_count(); ++s) {
      double best = q.q(s, 0).dot(w.entries());
      for (int a = 1; a < q.action_count(); ++a) {
        double u = q.q(s, a).dot(w.entries());
        if (u > best) {
          best = u;
          policy[s] = a;
        }
      }
    }
    out.vectors.push_back(value_under_mu(env, evaluate_policy(env, policy)));
    out.policy_ids.push_back(i);
  }
  return remove_dominated(out, geometry);
}

RunRecord run_one(const ExperimentConfig& cfg, const Momdp& env,
                  const ValueSet& reference,
                  const std::vector<WeightVector>& grid, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.config_hash = config_hash(cfg);
  rec.seed = seed;

  LearnerConfig learner = cfg.learner;
  if (cfg.algorithm == Algorithm::kGpiLs) learner.dyna_steps = 0;
  learner.prioritized_dyna = cfg.algorithm != Algorithm::kGpiPdUniform;

  EvalContext eval{&reference, &grid};
  Rng rng = Rng(kMasterSeed).split(seed);
  GpiLsState state =
      gpi_pd_run(env, learner, cfg.buffer, cfg.geometry, rng, &eval);
  rec.trace = std::move(state.trace);
  rec.final_values = final_value_set(env, state.library, cfg.geometry);

  auto t1 = std::chrono::steady_clock::now();
  rec.duration_seconds = std::chrono::duration<double>(t1 - t0).count();
  return rec;
}

/// Two-sided 97.5% Student-t quantiles for df = 1..30; 1.96 beyond.
double t_quantile_975(int df) {
  static const double table[] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (df <= 0) return std::numeric_limits<double>::quiet_NaN();
  if (df <= 30) return table[df - 1];
  return 1.96;
}

void write_aggregate_csv(const std::string& path,
                         const std::vector<RunRecord>& records) {
  std::size_t len = std::numeric_limits<std::size_t>::max();
  for (const auto& r : records) len = std::min(len, r.trace.size());
  if (records.empty() || len == 0) len = 0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "iteration,eu_mean,eu_ci95,mul_mean,mul_ci95\n";
  const int n = static_cast<int>(records.size());
  for (std::size_t i = 0; i < len; ++i) {
    auto stats = [&](auto field) {
      double mean = 0.0;
      for (const auto& r : records) mean += r.trace[i].*field;
      mean /= n;
      double ci = 0.0;
      if (n > 1) {
        double var = 0.0;
        for (const auto& r : records) {
          double d = r.trace[i].*field - mean;
          var += d * d;
        }
        var /= (n - 1);
        ci = t_quantile_975(n - 1) * std::sqrt(var / n);
      }
      return std::make_pair(mean, ci);
    };
    auto [eu_mean, eu_ci] = stats(&MetricRecord::eu_grid);
    auto [mul_mean, mul_ci] = stats(&MetricRecord::mul_grid);
    out << records[0].trace[i].iteration << ',' << format_double(eu_mean)
        << ',' << format_double(eu_ci) << ',' << format_double(mul_mean) << ','
        << format_double(mul_ci) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  Momdp env = build_env(cfg);
  fs::create_directories(cfg.out_dir);

  ValueSet reference = exact_ccs(env, cfg.geometry, cfg.oracle);
  std::vector<WeightVector> grid =
      equidistant_weights(cfg.oracle.weight_grid_size, env.objective_count());

  if (cfg.algorithm == Algorithm::kOracle) {
    write_value_set_csv((fs::path(cfg.out_dir) / "ccs.csv").string(), reference);
    RunRecord rec;
    rec.config_hash = config_hash(cfg);
    rec.seed = 0;
    rec.final_values = reference;
    rec.duration_seconds = 0.0;
    MetricRecord r{1, 0, expected_utility(reference, grid), 0.0, 0.0,
                   static_cast<int>(reference.vectors.size())};
    rec.trace.push_back(r);
    write_trace_csv((fs::path(cfg.out_dir) / "trace_oracle.csv").string(),
                    rec.trace);
    return {rec};
  }

  const int n = static_cast<int>(cfg.seeds.size());
  std::vector<RunRecord> records(n);
  int workers =
      cfg.workers > 0
          ? cfg.workers
          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);

  std::exception_ptr first_error;
  std::atomic<int> next{0};
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        records[i] = run_one(cfg, env, reference, grid, cfg.seeds[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& rec : records) {
    std::string tag = std::to_string(rec.seed);
    write_trace_csv(
        (fs::path(cfg.out_dir) / ("trace_seed" + tag + ".csv")).string(),
        rec.trace);
    write_value_set_csv(
        (fs::path(cfg.out_dir) / ("ccs_seed" + tag + ".csv")).string(),
        rec.final_values);
  }
  write_aggregate_csv((fs::path(cfg.out_dir) / "aggregate.csv").string(),
                      records);
  return records;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

struct AggregateRow {
  int iteration;
  double eu_mean;
  double mul_mean;
};

std::vector<AggregateRow> read_aggregate_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open aggregate file: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "iteration,eu_mean,eu_ci95,mul_mean,mul_ci95")
    throw std::runtime_error(path + ": unexpected aggregate header");
  std::vector<AggregateRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto f = split_csv_line(line);
    std::string where = path + ":" + std::to_string(lineno);
    if (f.size() != 5) throw std::runtime_error(where + ": expected 5 columns");
    rows.push_back({static_cast<int>(to_long(f[0], where)),
                    to_double(f[1], where), to_double(f[3], where)});
  }
  return rows;
}

std::vector<std::string> seed_trace_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::string name = e.path().filename().string();
    if (name.rfind("trace_seed", 0) == 0 && name.size() > 14 &&
        name.substr(name.size() - 4) == ".csv")
      out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// First env_steps at which mul_grid drops to fraction * (initial mul_grid);
/// -1 when the trace never crosses.
long steps_to_threshold(const MetricTrace& trace, double fraction) {
  if (trace.empty()) return -1;
  double threshold = fraction * trace.front().mul_grid;
  for (const auto& r : trace)
    if (r.mul_grid <= threshold) return r.env_steps;
  return -1;
}

double median_reached(const std::vector<long>& steps) {
  std::vector<long> reached;
  for (long s : steps)
    if (s >= 0) reached.push_back(s);
  if (reached.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(reached.begin(), reached.end());
  std::size_t n = reached.size();
  if (n % 2 == 1) return static_cast<double>(reached[n / 2]);
  return 0.5 * (static_cast<double>(reached[n / 2 - 1]) +
                static_cast<double>(reached[n / 2]));
}

}  // namespace

CompareSummary compare_runs(const std::string& baseline_dir,
                            const std::string& candidate_dir,
                            double threshold_fraction) {
  auto base = read_aggregate_csv(
      (fs::path(baseline_dir) / "aggregate.csv").string());
  auto cand = read_aggregate_csv(
      (fs::path(candidate_dir) / "aggregate.csv").string());
  std::size_t len = std::min(base.size(), cand.size());
  for (std::size_t i = 0; i < len; ++i)
    if (base[i].iteration != cand[i].iteration)
      throw std::runtime_error("compare_runs: mismatched iteration grids");
  if (base.size() != cand.size())
    throw std::runtime_error("compare_runs: mismatched iteration grids");

  CompareSummary s;
  s.threshold_fraction = threshold_fraction;
  for (std::size_t i = 0; i < len; ++i) {
    s.iterations.push_back(base[i].iteration);
    s.eu_delta.push_back(cand[i].eu_mean - base[i].eu_mean);
    s.mul_delta.push_back(cand[i].mul_mean - base[i].mul_mean);
  }
  for (const auto& f : seed_trace_files(baseline_dir))
    s.baseline_steps.push_back(
        steps_to_threshold(read_trace_csv(f), threshold_fraction));
  for (const auto& f : seed_trace_files(candidate_dir))
    s.candidate_steps.push_back(
        steps_to_threshold(read_trace_csv(f), threshold_fraction));
  s.baseline_median_steps = median_reached(s.baseline_steps);
  s.candidate_median_steps = median_reached(s.candidate_steps);
  s.median_ratio = s.candidate_median_steps / s.baseline_median_steps;
  return s;
}

std::string format_compare_summary(const CompareSummary& s) {
  std::ostringstream out;
  out << "iteration,eu_delta,mul_delta\n";
  for (std::size_t i = 0; i < s.iterations.size(); ++i)
    out << s.iterations[i] << ',' << format_double(s.eu_delta[i]) << ','
        << format_double(s.mul_delta[i]) << '\n';
  auto steps_line = [&](const char* label, const std::vector<long>& steps) {
    out << label << "_steps_to_threshold=";
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (i) out << ',';
      if (steps[i] < 0)
        out << "not-reached";
      else
        out << steps[i];
    }
    out << '\n';
  };
  out << "threshold_fraction=" << format_double(s.threshold_fraction) << '\n';
  steps_line("baseline", s.baseline_steps);
  steps_line("candidate", s.candidate_steps);
  out << "baseline_median=" << format_double(s.baseline_median_steps) << '\n';
  out << "candidate_median=" << format_double(s.candidate_median_steps) << '\n';
  out << "median_ratio=" << format_double(s.median_ratio) << '\n';
  return out.str();
}

}  // namespace mogpi
