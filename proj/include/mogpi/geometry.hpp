#pragma once

#include <utility>
#include <vector>

#include "mogpi/types.hpp"

namespace mogpi {

struct GeometryConfig {
  double feasibility_tolerance = 1e-9;
  double dedup_tolerance = 1e-9;
};

/// Set of value vectors with optional policy ids aligned by index.
struct ValueSet {
  std::vector<Vec> vectors;
  std::vector<int> policy_ids;  // empty or aligned with vectors
};

/// Vertices of the polyhedron induced by V, projected to weight coordinates.
/// Output is deduplicated and lexicographically sorted; simplex extrema are
/// always included for non-empty V.
std::vector<WeightVector> corner_weights(const ValueSet& v,
                                         const GeometryConfig& cfg = {});

/// Indices of vectors that attain the scalarized maximum somewhere on the
/// simplex (ties kept, exact duplicates reduced to the first occurrence).
std::vector<int> nondominated_indices(const ValueSet& v,
                                      const GeometryConfig& cfg = {});

/// Retains exactly the linearly nondominated vectors (see above).
ValueSet remove_dominated(const ValueSet& v, const GeometryConfig& cfg = {});

/// max_i v_i . w and the smallest attaining index.
std::pair<double, int> max_scalarized(const ValueSet& v, const WeightVector& w);

/// n weights covering the simplex. For m=2 a uniform grid; for m>=3 a
/// simplex lattice whose size is the closest achievable to n.
std::vector<WeightVector> equidistant_weights(int n, int m);

}  // namespace mogpi
