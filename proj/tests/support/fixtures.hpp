#pragma once

#include <vector>

#include "mogpi/environments.hpp"
#include "mogpi/geometry.hpp"
#include "mogpi/momdp.hpp"
#include "mogpi/oracle.hpp"
#include "mogpi/rng.hpp"

namespace mogpi::testing {

/// 1-state, 2-action bandit: action 0 pays (1,0), action 1 pays (0,1),
/// gamma = 0.5, never terminal. Its two stationary deterministic policies
/// have values (2,0) and (0,2).
Momdp two_arm_env();

/// Same construction with both reward components identical, so every weight
/// shares one optimum.
Momdp identical_objectives_env();

/// All rewards zero.
Momdp zero_reward_env();

/// Deterministic 4-state, 2-action, 2-objective chain used for the
/// fixed-point and bound checks.
Momdp four_state_env();

/// Random dense MOMDP: 2..6 states, 2..3 actions, m in {2,3},
/// gamma in [0.5, 0.9], stochastic transitions, occasional terminals.
Momdp random_momdp(Rng& rng);

/// Exact value (under mu) of a deterministic policy computed by iterative
/// Bellman sweeps — an evaluation path independent of the linear solver.
Vec iterative_policy_value(const Momdp& env, const std::vector<int>& policy,
                           double tol = 1e-13, int max_sweeps = 2000000);

/// Value vectors of every deterministic stationary policy, evaluated
/// iteratively. Only usable for action_count^state_count small.
std::vector<Vec> enumerate_policy_values(const Momdp& env);

/// True when both sets support the same scalarized maximum at every listed
/// weight, within tol.
bool coverage_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                    const std::vector<WeightVector>& weights, double tol);

/// Random point on the m-simplex.
WeightVector random_weight(Rng& rng, int m);

}  // namespace mogpi::testing
