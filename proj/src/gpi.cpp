#include "mogpi/gpi.hpp"

#include <cmath>
#include <stdexcept>

namespace mogpi {

void PolicyLibrary::keep(const std::vector<int>& indices) {
  std::vector<MoQTable> q;
  std::vector<WeightVector> w;
  std::vector<Vec> v;
  q.reserve(indices.size());
  w.reserve(indices.size());
  v.reserve(indices.size());
  for (int i : indices) {
    q.push_back(std::move(q_tables.at(i)));
    w.push_back(std::move(weight_support.at(i)));
    v.push_back(std::move(value_vectors.at(i)));
  }
  q_tables = std::move(q);
  weight_support = std::move(w);
  value_vectors = std::move(v);
}

ValueSet PolicyLibrary::value_set() const {
  ValueSet v;
  v.vectors = value_vectors;
  v.policy_ids.resize(value_vectors.size());
  for (int i = 0; i < static_cast<int>(v.policy_ids.size()); ++i)
    v.policy_ids[i] = i;
  return v;
}

double gpe(const PolicyLibrary& lib, int policy, int s, int a,
           const WeightVector& w) {
  if (policy < 0 || policy >= lib.size())
    throw std::out_of_range("gpe: policy index out of range");
  return lib.q_tables[policy].q(s, a).dot(w.entries());
}

int gpi_action(const PolicyLibrary& lib, int s, const WeightVector& w) {
  if (lib.empty()) throw std::invalid_argument("gpi_action: empty library");
  const int actions = lib.q_tables.front().action_count();
  int best_a = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < actions; ++a) {
    for (int i = 0; i < lib.size(); ++i) {
      double u = gpe(lib, i, s, a, w);
      if (u > best) {
        best = u;
        best_a = a;
      }
    }
  }
  return best_a;
}

double gpi_state_value(const PolicyLibrary& lib, int s,
                       const WeightVector& w) {
  if (lib.empty())
    throw std::invalid_argument("gpi_state_value: empty library");
  const int actions = lib.q_tables.front().action_count();
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < actions; ++a)
    for (int i = 0; i < lib.size(); ++i)
      best = std::max(best, gpe(lib, i, s, a, w));
  return best;
}

double one_step_gpi_target(const PolicyLibrary& lib, const Transition& t,
                           double gamma, const WeightVector& w) {
  double target = t.reward.dot(w.entries());
  if (!t.terminal)
    target += gamma * gpi_state_value(lib, t.next_state, w);
  return target;
}

double priority(const PolicyLibrary& lib, const Transition& t, double gamma,
                const WeightVector& w, int active) {
  return std::abs(one_step_gpi_target(lib, t, gamma, w) -
                  gpe(lib, active, t.state, t.action, w));
}

}  // namespace mogpi
