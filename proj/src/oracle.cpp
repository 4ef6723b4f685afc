#include "mogpi/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "mogpi/dp.hpp"
#include "mogpi/learners.hpp"

namespace mogpi {

ViResult scalarized_value_iteration(const Momdp& env, const WeightVector& w,
                                    const OracleConfig& cfg) {
  if (w.dim() != env.objective_count())
    throw std::invalid_argument("scalarized_value_iteration: weight dimension mismatch");
  const int n = env.state_count();
  const int na = env.action_count();

  // precompute scalarized expected rewards
  Eigen::MatrixXd rw(n, na);
  for (int s = 0; s < n; ++s)
    for (int a = 0; a < na; ++a)
      rw(s, a) = env.expected_reward(s, a).dot(w.entries());

  Eigen::VectorXd value = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd next(n);
  bool converged = false;
  for (int sweep = 0; sweep < cfg.vi_max_sweeps; ++sweep) {
    for (int s = 0; s < n; ++s) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < na; ++a) {
        double q = rw(s, a);
        for (const auto& o : env.outcomes(s, a))
          if (!o.terminal)
            q += env.gamma() * o.probability * value[o.next_state];
        best = std::max(best, q);
      }
      next[s] = best;
    }
    double delta = (next - value).cwiseAbs().maxCoeff();
    value.swap(next);
    if (delta < cfg.vi_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("scalarized_value_iteration: did not converge");

  // greedy policy, lowest action index on ties
  std::vector<int> policy(n, 0);
  for (int s = 0; s < n; ++s) {
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < na; ++a) {
      double q = rw(s, a);
      for (const auto& o : env.outcomes(s, a))
        if (!o.terminal) q += env.gamma() * o.probability * value[o.next_state];
      if (q > best) {
        best = q;
        policy[s] = a;
      }
    }
  }

  ViResult res{policy, MoQTable(n, na, env.objective_count()), Vec(), 0.0};
  Eigen::MatrixXd v = evaluate_policy(env, policy);
  res.q = policy_q_table(env, v);
  res.value_vector = value_under_mu(env, v);
  res.scalar_value = res.value_vector.dot(w.entries());
  return res;
}

ValueSet exact_ccs(const Momdp& env, const GeometryConfig& geometry,
                   const OracleConfig& cfg) {
  NewPolicyFn solver = [&](const WeightVector& w, const PolicyLibrary&) {
    ViResult vi = scalarized_value_iteration(env, w, cfg);
    return NewPolicyResult{std::move(vi.q), std::move(vi.value_vector), true};
  };
  GpiLsOptions opts;
  opts.max_iterations = cfg.max_ccs_iterations;
  GpiLsState state = gpi_ls_solve(env, solver, geometry, opts);
  if (!state.converged)
    throw std::runtime_error("exact_ccs: iteration cap exceeded");
  ValueSet v;
  v.vectors = state.library.value_vectors;
  return remove_dominated(v, geometry);
}

double expected_utility(const ValueSet& v,
                        const std::vector<WeightVector>& weights) {
  if (v.vectors.empty() || weights.empty())
    throw std::invalid_argument("expected_utility: empty input");
  double sum = 0.0;
  for (const auto& w : weights) sum += max_scalarized(v, w).first;
  return sum / static_cast<double>(weights.size());
}

double maximum_utility_loss(const ValueSet& v, const ValueSet& reference,
                            const std::vector<WeightVector>& weights) {
  if (v.vectors.empty() || reference.vectors.empty() || weights.empty())
    throw std::invalid_argument("maximum_utility_loss: empty input");
  if (v.vectors.front().size() != reference.vectors.front().size())
    throw std::invalid_argument("maximum_utility_loss: dimension mismatch");
  double worst = 0.0;
  for (const auto& w : weights) {
    double loss =
        max_scalarized(reference, w).first - max_scalarized(v, w).first;
    worst = std::max(worst, loss);
  }
  return worst;
}

std::vector<WeightVector> corner_augmented_weights(
    const ValueSet& v, const ValueSet& reference,
    const std::vector<WeightVector>& grid, const GeometryConfig& geometry) {
  ValueSet merged;
  merged.vectors = reference.vectors;
  merged.vectors.insert(merged.vectors.end(), v.vectors.begin(),
                        v.vectors.end());
  std::vector<WeightVector> out = grid;
  for (auto& c : corner_weights(merged, geometry)) out.push_back(std::move(c));
  return out;
}

}  // namespace mogpi
