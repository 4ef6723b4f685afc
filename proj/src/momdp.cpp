#include "mogpi/momdp.hpp"

#include <cmath>
#include <stdexcept>

namespace mogpi {

namespace {
constexpr double kDistributionTol = 1e-9;
}

Momdp::Momdp(int state_count, int action_count, int objective_count,
             double gamma, Vec initial_distribution,
             std::vector<std::vector<std::vector<Outcome>>> transitions)
    : states_(state_count),
      actions_(action_count),
      objectives_(objective_count),
      gamma_(gamma),
      mu_(std::move(initial_distribution)),
      transitions_(std::move(transitions)) {
  if (states_ <= 0 || actions_ <= 0)
    throw std::invalid_argument("Momdp: state and action counts must be positive");
  if (objectives_ < 2)
    throw std::invalid_argument("Momdp: need at least 2 objectives");
  if (gamma_ < 0.0 || gamma_ >= 1.0)
    throw std::invalid_argument("Momdp: gamma must be in [0,1)");
  if (mu_.size() != states_)
    throw std::invalid_argument("Momdp: initial distribution size mismatch");
  if (std::abs(mu_.sum() - 1.0) > kDistributionTol || mu_.minCoeff() < 0.0)
    throw std::invalid_argument("Momdp: initial distribution must sum to 1");
  if (static_cast<int>(transitions_.size()) != states_)
    throw std::invalid_argument("Momdp: transition table state dimension mismatch");
  for (const auto& per_state : transitions_) {
    if (static_cast<int>(per_state.size()) != actions_)
      throw std::invalid_argument("Momdp: transition table action dimension mismatch");
    for (const auto& outs : per_state) {
      if (outs.empty())
        throw std::invalid_argument("Momdp: every (s,a) needs at least one outcome");
      double mass = 0.0;
      for (const auto& o : outs) {
        if (o.next_state < 0 || o.next_state >= states_)
          throw std::invalid_argument("Momdp: outcome next state out of range");
        if (o.reward.size() != objectives_)
          throw std::invalid_argument("Momdp: reward vector length mismatch");
        if (!o.reward.allFinite())
          throw std::invalid_argument("Momdp: reward must be finite");
        if (o.probability < 0.0)
          throw std::invalid_argument("Momdp: negative outcome probability");
        mass += o.probability;
      }
      if (std::abs(mass - 1.0) > kDistributionTol)
        throw std::invalid_argument("Momdp: transition distribution must sum to 1");
    }
  }
}

const std::vector<Outcome>& Momdp::outcomes(int s, int a) const {
  if (s < 0 || s >= states_ || a < 0 || a >= actions_)
    throw std::out_of_range("Momdp: (s,a) out of range");
  return transitions_[s][a];
}

Vec Momdp::expected_reward(int s, int a) const {
  Vec r = Vec::Zero(objectives_);
  for (const auto& o : outcomes(s, a)) r += o.probability * o.reward;
  return r;
}

Transition step(const Momdp& env, int s, int a, Rng& rng) {
  const auto& outs = env.outcomes(s, a);
  double u = rng.uniform();
  const Outcome* chosen = &outs.back();
  double acc = 0.0;
  for (const auto& o : outs) {
    acc += o.probability;
    if (u < acc) {
      chosen = &o;
      break;
    }
  }
  return Transition{s, a, chosen->reward, chosen->next_state, chosen->terminal};
}

int reset(const Momdp& env, Rng& rng) {
  const Vec& mu = env.initial_distribution();
  double u = rng.uniform();
  double acc = 0.0;
  for (int s = 0; s < env.state_count(); ++s) {
    acc += mu[s];
    if (u < acc) return s;
  }
  return env.state_count() - 1;
}

}  // namespace mogpi
