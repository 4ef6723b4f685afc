#include "mogpi/dp.hpp"

#include <stdexcept>

namespace mogpi {

Eigen::MatrixXd evaluate_policy(const Momdp& env,
                                const std::vector<int>& policy) {
  const int n = env.state_count();
  const int m = env.objective_count();
  if (static_cast<int>(policy.size()) != n)
    throw std::invalid_argument("evaluate_policy: policy size mismatch");

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, m);
  for (int s = 0; s < n; ++s) {
    for (const auto& o : env.outcomes(s, policy[s])) {
      r.row(s) += o.probability * o.reward.transpose();
      if (!o.terminal)
        a(s, o.next_state) -= env.gamma() * o.probability;
    }
  }
  return a.partialPivLu().solve(r);
}

MoQTable policy_q_table(const Momdp& env,
                        const Eigen::MatrixXd& state_values) {
  MoQTable q(env.state_count(), env.action_count(), env.objective_count());
  for (int s = 0; s < env.state_count(); ++s) {
    for (int a = 0; a < env.action_count(); ++a) {
      Vec acc = Vec::Zero(env.objective_count());
      for (const auto& o : env.outcomes(s, a)) {
        acc += o.probability * o.reward;
        if (!o.terminal)
          acc += o.probability * env.gamma() *
                 state_values.row(o.next_state).transpose();
      }
      q.q(s, a) = acc.transpose();
    }
  }
  return q;
}

Vec value_under_mu(const Momdp& env, const Eigen::MatrixXd& state_values) {
  return state_values.transpose() * env.initial_distribution();
}

}  // namespace mogpi
