#include "mogpi/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mogpi {

namespace {

// Enumerates vertices of P = { (w, z) : v_i . w <= z, sum w = 1, w >= 0 }
// by solving all m-subsets of active constraints together with the
// normalization row, then filtering for feasibility.
std::vector<Vec> enumerate_vertices(const std::vector<Vec>& vectors,
                                    const GeometryConfig& cfg) {
  const Eigen::Index m = vectors.front().size();
  const int n = static_cast<int>(vectors.size());
  const int n_constraints = n + static_cast<int>(m);  // hyperplanes + w_j = 0
  const double tol = cfg.feasibility_tolerance;

  std::vector<Vec> found;
  std::vector<int> subset(m);
  // first subset 0,1,...,m-1
  for (Eigen::Index i = 0; i < m; ++i) subset[i] = static_cast<int>(i);

  Eigen::MatrixXd a(m + 1, m + 1);
  Eigen::VectorXd b(m + 1);
  while (true) {
    a.setZero();
    b.setZero();
    a.row(0).head(m).setOnes();  // sum w = 1
    b[0] = 1.0;
    for (Eigen::Index k = 0; k < m; ++k) {
      const int c = subset[k];
      if (c < n) {
        a.row(k + 1).head(m) = vectors[c].transpose();
        a(k + 1, m) = -1.0;  // v_i . w - z = 0
      } else {
        a(k + 1, c - n) = 1.0;  // w_j = 0
      }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.isInvertible()) {
      Eigen::VectorXd x = lu.solve(b);
      const double z = x[m];
      bool feasible = x.head(m).minCoeff() >= -tol;
      for (int i = 0; feasible && i < n; ++i)
        feasible = vectors[i].dot(x.head(m)) <= z + tol;
      if (feasible) {
        Vec w = x.head(m).cwiseMax(0.0);
        w /= w.sum();
        found.push_back(std::move(w));
      }
    }
    // next m-combination of [0, n_constraints)
    Eigen::Index k = m - 1;
    while (k >= 0 && subset[k] == n_constraints - static_cast<int>(m - k))
      --k;
    if (k < 0) break;
    ++subset[k];
    for (Eigen::Index j = k + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
  return found;
}

std::vector<Vec> sort_dedup(std::vector<Vec> ws, double tol) {
  std::sort(ws.begin(), ws.end(),
            [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  std::vector<Vec> out;
  for (auto& w : ws) {
    bool dup = false;
    for (const auto& kept : out)
      if (approx_equal(kept, w, tol)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(w));
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void compositions(int total, int parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    current.push_back(v);
    compositions(total - v, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<WeightVector> corner_weights(const ValueSet& v,
                                         const GeometryConfig& cfg) {
  if (v.vectors.empty())
    throw std::invalid_argument("corner_weights: empty value set");
  const Eigen::Index m = v.vectors.front().size();
  if (m < 2) throw std::invalid_argument("corner_weights: need m >= 2");
  for (const auto& vec : v.vectors)
    if (vec.size() != m)
      throw std::invalid_argument("corner_weights: inconsistent dimensions");

  auto ws = sort_dedup(enumerate_vertices(v.vectors, cfg), cfg.dedup_tolerance);
  std::vector<WeightVector> out;
  out.reserve(ws.size());
  for (auto& w : ws) out.emplace_back(std::move(w));
  return out;
}

std::vector<int> nondominated_indices(const ValueSet& v,
                                      const GeometryConfig& cfg) {
  if (v.vectors.empty())
    throw std::invalid_argument("nondominated_indices: empty value set");
  const int n = static_cast<int>(v.vectors.size());

  // exact duplicates collapse to their first occurrence
  std::vector<bool> duplicate(n, false);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i && !duplicate[i]; ++j)
      if (!duplicate[j] && v.vectors[i] == v.vectors[j]) duplicate[i] = true;

  ValueSet unique;
  std::vector<int> unique_to_orig;
  for (int i = 0; i < n; ++i)
    if (!duplicate[i]) {
      unique.vectors.push_back(v.vectors[i]);
      unique_to_orig.push_back(i);
    }

  auto corners = corner_weights(unique, cfg);
  std::vector<int> kept;
  for (std::size_t u = 0; u < unique.vectors.size(); ++u) {
    bool attains = false;
    for (const auto& w : corners) {
      double best = max_scalarized(unique, w).first;
      if (scalarize(unique.vectors[u], w) >= best - cfg.feasibility_tolerance) {
        attains = true;
        break;
      }
    }
    if (attains) kept.push_back(unique_to_orig[u]);
  }
  return kept;
}

ValueSet remove_dominated(const ValueSet& v, const GeometryConfig& cfg) {
  auto kept = nondominated_indices(v, cfg);
  ValueSet out;
  for (int i : kept) {
    out.vectors.push_back(v.vectors[i]);
    if (!v.policy_ids.empty()) out.policy_ids.push_back(v.policy_ids[i]);
  }
  return out;
}

std::pair<double, int> max_scalarized(const ValueSet& v,
                                      const WeightVector& w) {
  if (v.vectors.empty())
    throw std::invalid_argument("max_scalarized: empty value set");
  double best = scalarize(v.vectors[0], w);
  int best_i = 0;
  for (int i = 1; i < static_cast<int>(v.vectors.size()); ++i) {
    double u = scalarize(v.vectors[i], w);
    if (u > best) {
      best = u;
      best_i = i;
    }
  }
  return {best, best_i};
}

std::vector<WeightVector> equidistant_weights(int n, int m) {
  if (m < 2) throw std::invalid_argument("equidistant_weights: need m >= 2");
  if (n < m) throw std::invalid_argument("equidistant_weights: need n >= m");
  std::vector<WeightVector> out;
  if (m == 2) {
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(i) / (n - 1);
      Vec w(2);
      w << x, 1.0 - x;
      out.emplace_back(std::move(w));
    }
    return out;
  }
  // Das-Dennis simplex lattice with point count closest to n
  int best_h = 1;
  std::int64_t best_diff = -1;
  for (int h = 1;; ++h) {
    std::int64_t count = binomial(h + m - 1, m - 1);
    std::int64_t diff = std::abs(count - static_cast<std::int64_t>(n));
    if (best_diff < 0 || diff < best_diff) {
      best_diff = diff;
      best_h = h;
    }
    if (count >= n) break;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> current;
  compositions(best_h, m, current, comps);
  std::vector<Vec> ws;
  ws.reserve(comps.size());
  for (const auto& c : comps) {
    Vec w(m);
    for (int i = 0; i < m; ++i) w[i] = static_cast<double>(c[i]) / best_h;
    ws.push_back(std::move(w));
  }
  std::sort(ws.begin(), ws.end(),
            [](const Vec& a, const Vec& b) { return lex_less(a, b); });
  out.reserve(ws.size());
  for (auto& w : ws) out.emplace_back(std::move(w));
  return out;
}

}  // namespace mogpi
