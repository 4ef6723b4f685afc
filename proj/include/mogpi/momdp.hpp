#pragma once

#include <vector>

#include "mogpi/rng.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

/// One possible outcome of executing (s,a): next state, reward vector,
/// terminal flag, and its probability.
struct Outcome {
  int next_state;
  Vec reward;
  bool terminal;
  double probability;
};

/// Finite MOMDP with an explicit transition model.
class Momdp {
 public:
  Momdp(int state_count, int action_count, int objective_count, double gamma,
        Vec initial_distribution,
        std::vector<std::vector<std::vector<Outcome>>> transitions);

  int state_count() const { return states_; }
  int action_count() const { return actions_; }
  int objective_count() const { return objectives_; }
  double gamma() const { return gamma_; }
  const Vec& initial_distribution() const { return mu_; }

  const std::vector<Outcome>& outcomes(int s, int a) const;

  /// Expected reward vector of (s,a).
  Vec expected_reward(int s, int a) const;

 private:
  int states_;
  int actions_;
  int objectives_;
  double gamma_;
  Vec mu_;
  std::vector<std::vector<std::vector<Outcome>>> transitions_;
};

/// Samples a transition from the declared distribution of (s,a).
Transition step(const Momdp& env, int s, int a, Rng& rng);

/// Samples an initial state from mu.
int reset(const Momdp& env, Rng& rng);

}  // namespace mogpi
