#include "fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace mogpi::testing {

namespace {

Momdp one_state_bandit(const Vec& r0, const Vec& r1) {
  std::vector<std::vector<std::vector<Outcome>>> tr(1);
  tr[0].push_back({Outcome{0, r0, false, 1.0}});
  tr[0].push_back({Outcome{0, r1, false, 1.0}});
  Vec mu(1);
  mu << 1.0;
  return Momdp(1, 2, static_cast<int>(r0.size()), 0.5, mu, tr);
}

}  // namespace

Momdp two_arm_env() {
  Vec r0(2), r1(2);
  r0 << 1.0, 0.0;
  r1 << 0.0, 1.0;
  return one_state_bandit(r0, r1);
}

Momdp identical_objectives_env() {
  Vec r0(2), r1(2);
  r0 << 1.0, 1.0;
  r1 << 0.25, 0.25;
  return one_state_bandit(r0, r1);
}

Momdp zero_reward_env() {
  Vec z = Vec::Zero(2);
  return one_state_bandit(z, z);
}

Momdp four_state_env() {
  // chain 0 -> {1,2} -> 3 -> terminal self-loop; action 0 favors objective 0,
  // action 1 favors objective 1
  auto r = [](double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
  };
  std::vector<std::vector<std::vector<Outcome>>> tr(4);
  tr[0].push_back({Outcome{1, r(1.0, 0.0), false, 1.0}});
  tr[0].push_back({Outcome{2, r(0.0, 1.0), false, 1.0}});
  tr[1].push_back({Outcome{3, r(0.8, 0.1), false, 1.0}});
  tr[1].push_back({Outcome{3, r(0.2, 0.6), false, 1.0}});
  tr[2].push_back({Outcome{3, r(0.5, 0.5), false, 1.0}});
  tr[2].push_back({Outcome{3, r(0.0, 0.9), false, 1.0}});
  tr[3].push_back({Outcome{3, r(1.0, 0.0), true, 1.0}});
  tr[3].push_back({Outcome{3, r(0.0, 1.0), true, 1.0}});
  Vec mu(4);
  mu << 1.0, 0.0, 0.0, 0.0;
  return Momdp(4, 2, 2, 0.9, mu, tr);
}

Momdp random_momdp(Rng& rng) {
  const int n = 2 + rng.uniform_int(5);   // 2..6 states
  const int na = 2 + rng.uniform_int(2);  // 2..3 actions
  const int m = 2 + rng.uniform_int(2);   // 2..3 objectives
  const double gamma = 0.5 + 0.4 * rng.uniform();

  auto rand_reward = [&]() {
    Vec r(m);
    for (int i = 0; i < m; ++i) r[i] = 2.0 * rng.uniform() - 1.0;
    return r;
  };

  std::vector<std::vector<std::vector<Outcome>>> tr(n);
  for (int s = 0; s < n; ++s) {
    for (int a = 0; a < na; ++a) {
      int outcomes = 1 + rng.uniform_int(2);
      std::vector<double> p(outcomes);
      double total = 0.0;
      for (auto& x : p) {
        x = 0.1 + rng.uniform();
        total += x;
      }
      std::vector<Outcome> dist;
      for (int k = 0; k < outcomes; ++k) {
        bool terminal = rng.uniform() < 0.1;
        dist.push_back(
            Outcome{rng.uniform_int(n), rand_reward(), terminal, p[k] / total});
      }
      tr[s].push_back(std::move(dist));
    }
  }
  Vec mu(n);
  double total = 0.0;
  for (int s = 0; s < n; ++s) {
    mu[s] = 0.1 + rng.uniform();
    total += mu[s];
  }
  mu /= total;
  return Momdp(n, na, m, gamma, mu, tr);
}

Vec iterative_policy_value(const Momdp& env, const std::vector<int>& policy,
                           double tol, int max_sweeps) {
  const int n = env.state_count();
  const int m = env.objective_count();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, m);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(n, m);
    for (int s = 0; s < n; ++s) {
      for (const auto& o : env.outcomes(s, policy[s])) {
        next.row(s) += o.probability * o.reward.transpose();
        if (!o.terminal)
          next.row(s) += env.gamma() * o.probability * v.row(o.next_state);
      }
    }
    double delta = (next - v).cwiseAbs().maxCoeff();
    v = next;
    if (delta < tol) return v.transpose() * env.initial_distribution();
  }
  throw std::runtime_error("iterative_policy_value: did not converge");
}

std::vector<Vec> enumerate_policy_values(const Momdp& env) {
  const int n = env.state_count();
  const int na = env.action_count();
  long total = 1;
  for (int s = 0; s < n; ++s) {
    total *= na;
    if (total > 100000)
      throw std::invalid_argument("enumerate_policy_values: too many policies");
  }
  std::vector<Vec> values;
  std::vector<int> policy(n, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int s = 0; s < n; ++s) {
      policy[s] = static_cast<int>(c % na);
      c /= na;
    }
    values.push_back(iterative_policy_value(env, policy));
  }
  return values;
}

bool coverage_equal(const std::vector<Vec>& a, const std::vector<Vec>& b,
                    const std::vector<WeightVector>& weights, double tol) {
  ValueSet va, vb;
  va.vectors = a;
  vb.vectors = b;
  for (const auto& w : weights) {
    double ua = max_scalarized(va, w).first;
    double ub = max_scalarized(vb, w).first;
    if (std::abs(ua - ub) > tol) return false;
  }
  return true;
}

WeightVector random_weight(Rng& rng, int m) {
  Vec w(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    w[i] = -std::log(1.0 - rng.uniform());  // exponential => uniform on simplex
    total += w[i];
  }
  w /= total;
  return WeightVector(std::move(w));
}

}  // namespace mogpi::testing
