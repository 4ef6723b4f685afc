#pragma once

#include <vector>

#include "mogpi/geometry.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

/// Set of previously-learned policies: q-tables, the weights each policy
/// optimizes, and their value vectors, index-aligned.
struct PolicyLibrary {
  std::vector<MoQTable> q_tables;
  std::vector<WeightVector> weight_support;
  std::vector<Vec> value_vectors;

  int size() const { return static_cast<int>(q_tables.size()); }
  bool empty() const { return q_tables.empty(); }

  void add(MoQTable q, WeightVector w, Vec value) {
    q_tables.push_back(std::move(q));
    weight_support.push_back(std::move(w));
    value_vectors.push_back(std::move(value));
  }

  /// Keeps only the listed policy indices (ascending), preserving order.
  void keep(const std::vector<int>& indices);

  ValueSet value_set() const;
};

/// Scalarized action-value of one stored policy: q^{pi_i}(s,a) . w
double gpe(const PolicyLibrary& lib, int policy, int s, int a,
           const WeightVector& w);

/// argmax_a max_i gpe(lib, i, s, a, w); ties broken by lowest action index.
int gpi_action(const PolicyLibrary& lib, int s, const WeightVector& w);

/// max_a max_i gpe(lib, i, s, a, w)
double gpi_state_value(const PolicyLibrary& lib, int s, const WeightVector& w);

/// R . w + gamma * max_{a'} max_i gpe(lib, i, s', a', w); bootstrap is zero
/// past terminal transitions.
double one_step_gpi_target(const PolicyLibrary& lib, const Transition& t,
                           double gamma, const WeightVector& w);

/// |one_step_gpi_target - gpe(active, s, a, w)|; reduces to plain TD-error
/// prioritization when the library holds a single policy.
double priority(const PolicyLibrary& lib, const Transition& t, double gamma,
                const WeightVector& w, int active);

}  // namespace mogpi
