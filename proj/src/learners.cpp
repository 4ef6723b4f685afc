#include "mogpi/learners.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mogpi/dp.hpp"

namespace mogpi {

void LearnerConfig::validate() const {
  if (learning_rate <= 0.0 || learning_rate > 1.0)
    throw std::invalid_argument("LearnerConfig: learning_rate must be in (0,1]");
  if (dyna_steps < 0)
    throw std::invalid_argument("LearnerConfig: dyna_steps must be >= 0");
  if (steps_per_iteration <= 0)
    throw std::invalid_argument("LearnerConfig: steps_per_iteration must be positive");
  if (max_iterations <= 0)
    throw std::invalid_argument("LearnerConfig: max_iterations must be positive");
  if (gpi_rollouts <= 0)
    throw std::invalid_argument("LearnerConfig: gpi_rollouts must be positive");
  if (epsilon.start < 0.0 || epsilon.start > 1.0 || epsilon.end < 0.0 ||
      epsilon.end > 1.0)
    throw std::invalid_argument("LearnerConfig: epsilon must stay in [0,1]");
}

bool weight_in(const std::vector<WeightVector>& set, const WeightVector& w,
               double tol) {
  for (const auto& x : set)
    if (approx_equal(x.entries(), w.entries(), tol)) return true;
  return false;
}

std::optional<WeightVector> select_weight(
    const PolicyLibrary& lib, const std::vector<WeightVector>& finished,
    const GeometryConfig& geometry,
    const std::function<double(const WeightVector&)>& gpi_value) {
  if (lib.empty())
    throw std::invalid_argument("select_weight: empty library");
  ValueSet values = lib.value_set();
  std::optional<WeightVector> best;
  double best_improvement = -std::numeric_limits<double>::infinity();
  // corner_weights output is lexicographically sorted, so strict improvement
  // comparison keeps the lexicographically smallest weight on ties
  for (auto& w : corner_weights(values, geometry)) {
    if (weight_in(finished, w, geometry.dedup_tolerance)) continue;
    double improvement = gpi_value(w) - max_scalarized(values, w).first;
    if (improvement > best_improvement) {
      best_improvement = improvement;
      best = std::move(w);
    }
  }
  return best;
}

double evaluate_gpi_value(const Momdp& env, const PolicyLibrary& lib,
                          const WeightVector& w) {
  std::vector<int> policy(env.state_count());
  for (int s = 0; s < env.state_count(); ++s)
    policy[s] = gpi_action(lib, s, w);
  Eigen::MatrixXd v = evaluate_policy(env, policy);
  return value_under_mu(env, v).dot(w.entries());
}

double evaluate_gpi_value_rollouts(const TabularModel& model, const Momdp& env,
                                   const PolicyLibrary& lib,
                                   const WeightVector& w, int k, long horizon,
                                   Rng rng) {
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    Rng stream = rng.split(static_cast<std::uint64_t>(i));
    int s = reset(env, stream);
    double ret = 0.0;
    double disc = 1.0;
    for (long t = 0; t < horizon && disc > 1e-12; ++t) {
      int a = gpi_action(lib, s, w);
      if (!model.visited(s, a)) {
        // fall back to the library's own estimate for unexplored pairs
        ret += disc * gpi_state_value(lib, s, w);
        break;
      }
      Transition tr = model.sample(s, a, stream);
      ret += disc * tr.reward.dot(w.entries());
      if (tr.terminal) break;
      disc *= env.gamma();
      s = tr.next_state;
    }
    sum += ret;
  }
  return sum / static_cast<double>(k);
}

double td_update(MoQTable& q, const Transition& t, int a_next, double alpha,
                 double gamma) {
  Vec target = t.reward;
  if (!t.terminal)
    target += gamma * q.q(t.next_state, a_next).transpose();
  Vec change = alpha * (target - q.q(t.state, t.action).transpose());
  q.q(t.state, t.action) += change.transpose();
  return change.cwiseAbs().maxCoeff();
}

MoQTable new_policy_init(const PolicyLibrary& lib, const WeightVector& w,
                         int state_count, int action_count,
                         int objective_count) {
  if (lib.empty()) return MoQTable(state_count, action_count, objective_count);
  int best = 0;
  double best_u = scalarize(lib.value_vectors[0], w);
  for (int i = 1; i < lib.size(); ++i) {
    double u = scalarize(lib.value_vectors[i], w);
    if (u > best_u) {
      best_u = u;
      best = i;
    }
  }
  return lib.q_tables[best];
}

int epsilon_greedy(const PolicyLibrary& lib, int s, const WeightVector& w,
                   double eps, Rng& rng) {
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("epsilon_greedy: eps must be in [0,1]");
  if (eps > 0.0 && rng.uniform() < eps)
    return rng.uniform_int(lib.q_tables.front().action_count());
  return gpi_action(lib, s, w);
}

Vec estimate_policy_value(const Momdp& env, const MoQTable& q,
                          const WeightVector& w) {
  Vec v = Vec::Zero(env.objective_count());
  const Vec& mu = env.initial_distribution();
  for (int s = 0; s < env.state_count(); ++s) {
    if (mu[s] == 0.0) continue;
    int best_a = 0;
    double best = q.q(s, 0).dot(w.entries());
    for (int a = 1; a < env.action_count(); ++a) {
      double u = q.q(s, a).dot(w.entries());
      if (u > best) {
        best = u;
        best_a = a;
      }
    }
    v += mu[s] * q.q(s, best_a).transpose();
  }
  return v;
}

namespace {

/// Greedy deterministic policy of a q-table under a weight.
std::vector<int> greedy_policy(const MoQTable& q, const WeightVector& w) {
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
  return policy;
}

MetricRecord make_metric_record(const PolicyLibrary& lib, int iteration,
                                long env_steps,
                                const ValueSet& evaluated,
                                const ValueSet* reference,
                                const std::vector<WeightVector>* grid,
                                const GeometryConfig& geometry) {
  MetricRecord rec{iteration, env_steps,
                   std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::quiet_NaN(), lib.size()};
  if (grid && !evaluated.vectors.empty()) {
    rec.eu_grid = expected_utility(evaluated, *grid);
    if (reference) {
      rec.mul_grid = maximum_utility_loss(evaluated, *reference, *grid);
      auto augmented =
          corner_augmented_weights(evaluated, *reference, *grid, geometry);
      rec.mul_corner = maximum_utility_loss(evaluated, *reference, augmented);
    }
  }
  return rec;
}

/// Exact value vectors of the library's greedy policies (evaluation side).
ValueSet evaluate_library_exact(const Momdp& env, const PolicyLibrary& lib) {
  ValueSet out;
  for (int i = 0; i < lib.size(); ++i) {
    auto policy = greedy_policy(lib.q_tables[i], lib.weight_support[i]);
    out.vectors.push_back(value_under_mu(env, evaluate_policy(env, policy)));
    out.policy_ids.push_back(i);
  }
  return out;
}

}  // namespace

GpiLsState gpi_ls_solve(const Momdp& env, const NewPolicyFn& new_policy,
                        const GeometryConfig& geometry,
                        const GpiLsOptions& opts) {
  GpiLsState state;
  const int m = env.objective_count();
  WeightVector w = WeightVector::extremum(m, 0);

  auto gpi_value = [&](const WeightVector& wc) {
    return evaluate_gpi_value(env, state.library, wc);
  };

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    state.iteration = iter + 1;
    NewPolicyResult res = new_policy(w, state.library);
    state.library.add(std::move(res.q), w, std::move(res.value));
    if (res.done && !weight_in(state.finished, w, geometry.dedup_tolerance))
      state.finished.push_back(w);

    state.library.keep(nondominated_indices(state.library.value_set(), geometry));

    if (opts.grid) {
      ValueSet values = state.library.value_set();
      state.trace.push_back(make_metric_record(state.library, state.iteration,
                                               state.iteration, values,
                                               opts.reference, opts.grid,
                                               geometry));
    }

    auto next = select_weight(state.library, state.finished, geometry, gpi_value);
    if (!next) {
      state.converged = true;
      return state;
    }
    w = *next;
  }
  return state;  // iteration cap reached, converged stays false
}

GpiLsState gpi_pd_run(const Momdp& env, const LearnerConfig& cfg,
                      const BufferConfig& buffer_cfg,
                      const GeometryConfig& geometry, Rng rng,
                      const EvalContext* eval) {
  cfg.validate();
  const int m = env.objective_count();
  const int n_states = env.state_count();
  const int n_actions = env.action_count();
  const double gamma = env.gamma();

  Rng rng_env = rng.split(1);
  Rng rng_explore = rng.split(2);
  Rng rng_dyna = rng.split(3);
  Rng rng_rollout = rng.split(4);

  GpiLsState state;
  TabularModel model(n_states, n_actions);
  PrioritizedBuffer buffer(buffer_cfg);

  WeightVector w_active = WeightVector::extremum(m, 0);
  int active = -1;
  double block_max_delta = 0.0;

  int s = reset(env, rng_env);
  bool at_terminal = false;

  auto record_metrics = [&]() {
    if (!eval || !eval->grid) return;
    ValueSet evaluated = evaluate_library_exact(env, state.library);
    state.trace.push_back(make_metric_record(state.library, state.iteration,
                                             state.env_steps, evaluated,
                                             eval->reference, eval->grid,
                                             geometry));
  };

  auto refresh_priorities = [&]() {
    for (int i = 0; i < buffer.size(); ++i)
      buffer.update_priority(
          i, priority(state.library, buffer.transition(i), gamma, w_active,
                      active));
  };

  const long total_steps =
      static_cast<long>(cfg.max_iterations) * cfg.steps_per_iteration;
  for (long step_idx = 0; step_idx < total_steps; ++step_idx) {
    if (step_idx % cfg.steps_per_iteration == 0) {
      ++state.iteration;
      if (!state.library.empty()) {
        // refresh value estimates from the learned tables
        for (int i = 0; i < state.library.size(); ++i)
          state.library.value_vectors[i] = estimate_policy_value(
              env, state.library.q_tables[i], state.library.weight_support[i]);
        if (block_max_delta < cfg.done_threshold &&
            !weight_in(state.finished, w_active, geometry.dedup_tolerance))
          state.finished.push_back(w_active);
        state.library.keep(
            nondominated_indices(state.library.value_set(), geometry));
        record_metrics();

        Rng rollout_base = rng_rollout.split(state.iteration);
        auto gpi_value = [&](const WeightVector& wc) {
          return evaluate_gpi_value_rollouts(model, env, state.library, wc,
                                             cfg.gpi_rollouts,
                                             cfg.rollout_horizon, rollout_base);
        };
        auto next =
            select_weight(state.library, state.finished, geometry, gpi_value);
        if (!next) {
          state.converged = true;
          return state;
        }
        w_active = *next;
      }
      MoQTable fresh =
          new_policy_init(state.library, w_active, n_states, n_actions, m);
      Vec fresh_value = estimate_policy_value(env, fresh, w_active);
      state.library.add(std::move(fresh), w_active, std::move(fresh_value));
      active = state.library.size() - 1;
      block_max_delta = 0.0;
      if (state.library.size() == 1) record_metrics();
      if (buffer.size() > 0) refresh_priorities();
    }

    if (at_terminal) {
      s = reset(env, rng_env);
      at_terminal = false;
    }

    double eps = cfg.epsilon.at(step_idx);
    int a = epsilon_greedy(state.library, s, w_active, eps, rng_explore);
    Transition t = step(env, s, a, rng_env);

    // TD update for the active policy, then for every other policy under its
    // own weight; the bootstrap action is the GPI action in both cases
    int a_next = gpi_action(state.library, t.next_state, w_active);
    block_max_delta = std::max(
        block_max_delta, td_update(state.library.q_tables[active], t, a_next,
                                   cfg.learning_rate, gamma));
    for (int i = 0; i < state.library.size(); ++i) {
      if (i == active) continue;
      int ai = gpi_action(state.library, t.next_state,
                          state.library.weight_support[i]);
      td_update(state.library.q_tables[i], t, ai, cfg.learning_rate, gamma);
    }

    buffer.push(t, priority(state.library, t, gamma, w_active, active));
    model.update(t);

    for (int h = 0; h < cfg.dyna_steps && buffer.size() > 0; ++h) {
      int idx = cfg.prioritized_dyna ? buffer.sample_index(rng_dyna)
                                     : rng_dyna.uniform_int(buffer.size());
      const Transition& stored = buffer.transition(idx);
      Transition sim = model.sample(stored.state, stored.action, rng_dyna);
      int a_sim = gpi_action(state.library, sim.next_state, w_active);
      block_max_delta = std::max(
          block_max_delta, td_update(state.library.q_tables[active], sim,
                                     a_sim, cfg.learning_rate, gamma));
      buffer.update_priority(
          idx, priority(state.library, stored, gamma, w_active, active));
      for (int i = 0; i < state.library.size(); ++i) {
        if (i == active) continue;
        int ai = gpi_action(state.library, sim.next_state,
                            state.library.weight_support[i]);
        td_update(state.library.q_tables[i], sim, ai, cfg.learning_rate, gamma);
      }
    }

    s = t.next_state;
    at_terminal = t.terminal;
    ++state.env_steps;
  }

  // final refresh of value estimates and metrics after the step budget
  ++state.iteration;
  for (int i = 0; i < state.library.size(); ++i)
    state.library.value_vectors[i] = estimate_policy_value(
        env, state.library.q_tables[i], state.library.weight_support[i]);
  state.library.keep(nondominated_indices(state.library.value_set(), geometry));
  record_metrics();
  return state;
}

}  // namespace mogpi
