#pragma once

#include <vector>

#include "mogpi/momdp.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

/// Exact evaluation of a deterministic stationary policy: solves
/// (I - gamma * P_pi) V = R_pi directly, one right-hand side per objective.
/// Terminal transitions carry no bootstrap mass. Returns V (states x m).
Eigen::MatrixXd evaluate_policy(const Momdp& env, const std::vector<int>& policy);

/// Vector q-table of a deterministic policy from its state values:
/// q(s,a) = sum_o p_o * (r_o + gamma * [not terminal] * V(s'_o)).
MoQTable policy_q_table(const Momdp& env, const Eigen::MatrixXd& state_values);

/// Value vector under the initial state distribution.
Vec value_under_mu(const Momdp& env, const Eigen::MatrixXd& state_values);

}  // namespace mogpi
