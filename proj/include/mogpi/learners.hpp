#pragma once

#include <functional>
#include <optional>

#include "mogpi/buffer.hpp"
#include "mogpi/geometry.hpp"
#include "mogpi/gpi.hpp"
#include "mogpi/model.hpp"
#include "mogpi/momdp.hpp"
#include "mogpi/oracle.hpp"

namespace mogpi {

struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.0;
  long anneal_steps = 50000;

  /// Linear interpolation from start to end over anneal_steps.
  double at(long step) const {
    if (anneal_steps <= 0 || step >= anneal_steps) return end;
    double f = static_cast<double>(step) / static_cast<double>(anneal_steps);
    return start + f * (end - start);
  }
};

struct LearnerConfig {
  double learning_rate = 0.3;
  EpsilonSchedule epsilon;
  long steps_per_iteration = 4000;  // N
  int dyna_steps = 5;               // H
  int max_iterations = 25;
  double epsilon_ccs = 0.0;  // tolerance attached to the returned set's claim
  bool prioritized_dyna = true;
  int gpi_rollouts = 5;       // K rollouts for the GPI value estimate
  long rollout_horizon = 400;
  double done_threshold = 1e-6;

  void validate() const;
};

struct GpiLsState {
  PolicyLibrary library;
  std::vector<WeightVector> finished;  // weight support of the partial CCS
  int iteration = 0;
  long env_steps = 0;
  bool converged = false;  // select_weight returned none
  MetricTrace trace;
};

/// Membership test on weight sets with tolerance.
bool weight_in(const std::vector<WeightVector>& set, const WeightVector& w,
               double tol);

/// Corner weights of the library's value set minus the finished set; returns
/// none when empty, else the corner maximizing gpi_value(w) - max_pi v^pi_w
/// (ties: lexicographically smallest weight).
std::optional<WeightVector> select_weight(
    const PolicyLibrary& lib, const std::vector<WeightVector>& finished,
    const GeometryConfig& geometry,
    const std::function<double(const WeightVector&)>& gpi_value);

/// Exact scalarized value of the stationary GPI policy under mu, by direct
/// policy evaluation on the known model.
double evaluate_gpi_value(const Momdp& env, const PolicyLibrary& lib,
                          const WeightVector& w);

/// Monte-Carlo estimate of the GPI policy value from a learned tabular model:
/// mean of k seeded rollouts; unvisited pairs bootstrap from the library.
double evaluate_gpi_value_rollouts(const TabularModel& model, const Momdp& env,
                                   const PolicyLibrary& lib,
                                   const WeightVector& w, int k, long horizon,
                                   Rng rng);

/// Component-wise q(s,a) += alpha * (R + gamma * q(s',a_next) - q(s,a)),
/// bootstrap zero past terminal transitions. Returns the max-abs applied
/// change.
double td_update(MoQTable& q, const Transition& t, int a_next, double alpha,
                 double gamma);

/// Table for a fresh policy: copy of the incumbent maximizing v . w, or zeros
/// when the library is empty.
MoQTable new_policy_init(const PolicyLibrary& lib, const WeightVector& w,
                         int state_count, int action_count,
                         int objective_count);

/// With probability eps a uniform random action, else the GPI action.
int epsilon_greedy(const PolicyLibrary& lib, int s, const WeightVector& w,
                   double eps, Rng& rng);

/// Value estimate of a stored policy from its own table: mu-weighted q at the
/// greedy action for w.
Vec estimate_policy_value(const Momdp& env, const MoQTable& q,
                          const WeightVector& w);

// ---------------------------------------------------------------------------
// GPI-LS outer loop with a pluggable policy subroutine (used with the exact
// solver for oracle construction and theorem-style runs).

struct NewPolicyResult {
  MoQTable q;
  Vec value;
  bool done;
};

using NewPolicyFn =
    std::function<NewPolicyResult(const WeightVector&, const PolicyLibrary&)>;

struct GpiLsOptions {
  int max_iterations = 1000;
  const ValueSet* reference = nullptr;              // oracle CCS, for MUL
  const std::vector<WeightVector>* grid = nullptr;  // EU/MUL weight grid
};

GpiLsState gpi_ls_solve(const Momdp& env, const NewPolicyFn& new_policy,
                        const GeometryConfig& geometry,
                        const GpiLsOptions& opts = {});

// ---------------------------------------------------------------------------
// Online learner: tabular GPI prioritized Dyna.

struct EvalContext {
  const ValueSet* reference = nullptr;
  const std::vector<WeightVector>* grid = nullptr;
};

/// Full online loop: GPI-LS weight refresh every N steps, GPI behavior
/// policy with annealed epsilon-greedy exploration, per-policy TD updates,
/// prioritized buffer and tabular model, H Dyna planning steps per real step.
/// Metrics are recorded at every refresh via exact evaluation of the learned
/// greedy policies when an EvalContext is provided.
GpiLsState gpi_pd_run(const Momdp& env, const LearnerConfig& cfg,
                      const BufferConfig& buffer_cfg,
                      const GeometryConfig& geometry, Rng rng,
                      const EvalContext* eval = nullptr);

}  // namespace mogpi
