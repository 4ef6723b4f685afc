#pragma once

#include <vector>

#include "mogpi/geometry.hpp"
#include "mogpi/momdp.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

struct OracleConfig {
  double vi_tolerance = 1e-10;
  int vi_max_sweeps = 200000;
  int weight_grid_size = 101;
  int max_ccs_iterations = 1000;
};

struct MetricRecord {
  int iteration;
  long env_steps;
  double eu_grid;
  double mul_grid;
  double mul_corner;
  int library_size;
};

using MetricTrace = std::vector<MetricRecord>;

struct ViResult {
  std::vector<int> policy;      // greedy deterministic policy
  MoQTable q;                   // exact vector q-table of that policy
  Vec value_vector;             // v^pi under mu
  double scalar_value;          // v^pi . w
};

/// Optimal deterministic policy for the scalarized reward r . w, found by
/// value iteration to vi_tolerance max-norm, followed by exact vector-valued
/// policy evaluation.
ViResult scalarized_value_iteration(const Momdp& env, const WeightVector& w,
                                    const OracleConfig& cfg = {});

/// Ground-truth CCS: runs the corner-weight loop with
/// scalarized_value_iteration as the policy subroutine until no corner weight
/// remains, then prunes dominated vectors.
ValueSet exact_ccs(const Momdp& env, const GeometryConfig& geometry = {},
                   const OracleConfig& cfg = {});

/// EU(V) = mean_w max_i v_i . w
double expected_utility(const ValueSet& v,
                        const std::vector<WeightVector>& weights);

/// MUL(V) = max_w (max over reference - max over V), clamped at >= 0.
double maximum_utility_loss(const ValueSet& v, const ValueSet& reference,
                            const std::vector<WeightVector>& weights);

/// Weight list used for corner-exact MUL: grid plus all corner weights of
/// reference and candidate sets combined.
std::vector<WeightVector> corner_augmented_weights(
    const ValueSet& v, const ValueSet& reference,
    const std::vector<WeightVector>& grid, const GeometryConfig& geometry = {});

}  // namespace mogpi
