#include <doctest.h>

#include <cmath>

#include "mogpi/geometry.hpp"
#include "support/fixtures.hpp"

using namespace mogpi;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

ValueSet make_set(std::vector<Vec> vs) {
  ValueSet v;
  v.vectors = std::move(vs);
  return v;
}

bool contains_weight(const std::vector<WeightVector>& ws, const Vec& target,
                     double tol = 1e-9) {
  for (const auto& w : ws)
    if (approx_equal(w.entries(), target, tol)) return true;
  return false;
}

}  // namespace

TEST_CASE("corner weights of a single vector are the simplex extrema") {
  auto ws = corner_weights(make_set({vec2(1, 0)}));
  REQUIRE(ws.size() == 2);
  CHECK(contains_weight(ws, vec2(1, 0)));
  CHECK(contains_weight(ws, vec2(0, 1)));
}

TEST_CASE("corner weights include the symmetric crossing") {
  auto ws = corner_weights(make_set({vec2(1, 0), vec2(0, 1)}));
  REQUIRE(ws.size() == 3);
  CHECK(contains_weight(ws, vec2(1, 0)));
  CHECK(contains_weight(ws, vec2(0, 1)));
  CHECK(contains_weight(ws, vec2(0.5, 0.5)));
}

TEST_CASE("corner weight crossing of asymmetric vectors") {
  // 3 w1 = 1 - w1  =>  w1 = 0.25
  auto ws = corner_weights(make_set({vec2(3, 0), vec2(0, 1)}));
  REQUIRE(ws.size() == 3);
  CHECK(contains_weight(ws, vec2(0.25, 0.75)));

  // cross-check against a fine-grid argmin of |3 w1 - w2|
  double best_gap = 1e18, best_w1 = -1.0;
  const int grid = 100001;
  for (int i = 0; i < grid; ++i) {
    double w1 = static_cast<double>(i) / (grid - 1);
    double gap = std::abs(3.0 * w1 - (1.0 - w1));
    if (gap < best_gap) {
      best_gap = gap;
      best_w1 = w1;
    }
  }
  CHECK(std::abs(best_w1 - 0.25) <= 1.0 / (grid - 1));
}

TEST_CASE("corner weights validate input") {
  CHECK_THROWS_AS(corner_weights(make_set({})), std::invalid_argument);
  Vec scalar(1);
  scalar << 1.0;
  CHECK_THROWS_AS(corner_weights(make_set({scalar})), std::invalid_argument);
}

TEST_CASE("remove_dominated keeps exactly the linearly nondominated vectors") {
  auto pruned = remove_dominated(make_set({vec2(1, 0), vec2(0, 1), vec2(0.3, 0.3)}));
  REQUIRE(pruned.vectors.size() == 2);
  CHECK(pruned.vectors[0] == vec2(1, 0));
  CHECK(pruned.vectors[1] == vec2(0, 1));

  auto singleton = remove_dominated(make_set({vec2(1, 0)}));
  CHECK(singleton.vectors.size() == 1);
}

TEST_CASE("Pareto-nondominated but linearly dominated vectors are pruned") {
  ValueSet v = make_set({vec2(2, 0), vec2(0, 2), vec2(0.9, 0.9)});
  auto pruned = remove_dominated(v);
  REQUIRE(pruned.vectors.size() == 2);
  CHECK(pruned.vectors[0] == vec2(2, 0));
  CHECK(pruned.vectors[1] == vec2(0, 2));
  // grid confirmation: the max of the other two beats 0.9 everywhere
  for (int i = 0; i <= 10000; ++i) {
    double w1 = static_cast<double>(i) / 10000.0;
    double others = std::max(2.0 * w1, 2.0 * (1.0 - w1));
    CHECK(others > 0.9 * w1 + 0.9 * (1.0 - w1) - 1e-12);
  }
}

TEST_CASE("exact duplicates collapse to the first occurrence") {
  ValueSet v = make_set({vec2(1, 0), vec2(1, 0), vec2(0, 1)});
  auto kept = nondominated_indices(v);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0] == 0);
  CHECK(kept[1] == 2);
}

TEST_CASE("max_scalarized with lowest-index tie-break") {
  ValueSet v = make_set({vec2(2, 0), vec2(0, 2)});
  auto [u1, i1] = max_scalarized(v, WeightVector(vec2(1, 0)));
  CHECK(u1 == doctest::Approx(2.0));
  CHECK(i1 == 0);
  auto [u2, i2] = max_scalarized(v, WeightVector(vec2(0.5, 0.5)));
  CHECK(u2 == doctest::Approx(1.0));
  CHECK(i2 == 0);
  ValueSet v3 = make_set({vec2(3, 0), vec2(0, 1)});
  auto [u3, i3] = max_scalarized(v3, WeightVector(vec2(0.25, 0.75)));
  CHECK(u3 == doctest::Approx(0.75));
  CHECK(i3 == 0);
}

TEST_CASE("equidistant weights for two objectives") {
  auto g3 = equidistant_weights(3, 2);
  REQUIRE(g3.size() == 3);
  CHECK(approx_equal(g3[0].entries(), vec2(0, 1), 0.0));
  CHECK(approx_equal(g3[1].entries(), vec2(0.5, 0.5), 0.0));
  CHECK(approx_equal(g3[2].entries(), vec2(1, 0), 0.0));

  auto g101 = equidistant_weights(101, 2);
  REQUIRE(g101.size() == 101);
  for (int i = 0; i < 101; ++i)
    CHECK(g101[i][0] == doctest::Approx(i / 100.0).epsilon(1e-12));
  CHECK_THROWS_AS(equidistant_weights(1, 2), std::invalid_argument);
}

TEST_CASE("equidistant weights lattice for three objectives") {
  // requesting 6 points hits the H=2 lattice exactly: C(4,2) = 6
  auto g = equidistant_weights(6, 3);
  REQUIRE(g.size() == 6);
  Vec e1(3), half(3), e3(3);
  e1 << 1, 0, 0;
  half << 0.5, 0.5, 0;
  e3 << 0, 0, 1;
  bool has_e1 = false, has_half = false, has_e3 = false;
  for (const auto& w : g) {
    if (approx_equal(w.entries(), e1, 1e-12)) has_e1 = true;
    if (approx_equal(w.entries(), half, 1e-12)) has_half = true;
    if (approx_equal(w.entries(), e3, 1e-12)) has_e3 = true;
  }
  CHECK(has_e1);
  CHECK(has_half);
  CHECK(has_e3);
}

TEST_CASE("coverage preservation under dominance pruning") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 2 + rng.uniform_int(2);
    int count = 2 + rng.uniform_int(5);
    std::vector<Vec> vs;
    for (int i = 0; i < count; ++i) {
      Vec v(m);
      for (int j = 0; j < m; ++j) v[j] = 4.0 * rng.uniform() - 2.0;
      vs.push_back(std::move(v));
    }
    ValueSet v = make_set(vs);
    ValueSet pruned = remove_dominated(v);
    REQUIRE(!pruned.vectors.empty());
    for (int k = 0; k < 300; ++k) {
      WeightVector w = testing::random_weight(rng, m);
      CHECK(std::abs(max_scalarized(v, w).first -
                     max_scalarized(pruned, w).first) <= 1e-9);
    }
  }
}

TEST_CASE("vertex soundness and deterministic ordering") {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 2 + rng.uniform_int(2);
    int count = 1 + rng.uniform_int(6);
    std::vector<Vec> vs;
    for (int i = 0; i < count; ++i) {
      Vec v(m);
      for (int j = 0; j < m; ++j) v[j] = 4.0 * rng.uniform() - 2.0;
      vs.push_back(std::move(v));
    }
    ValueSet v = make_set(vs);
    auto ws = corner_weights(v);
    auto ws_again = corner_weights(v);
    REQUIRE(ws.size() == ws_again.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
      CHECK(ws[i].entries() == ws_again[i].entries());
      if (i > 0) CHECK(lex_less(ws[i - 1], ws[i]));
      // feasibility of every Eq-6 constraint at the projected vertex
      double z = -1e18;
      for (const auto& vv : v.vectors)
        z = std::max(z, vv.dot(ws[i].entries()));
      CHECK(ws[i].entries().minCoeff() >= -1e-9);
      for (const auto& vv : v.vectors)
        CHECK(vv.dot(ws[i].entries()) <= z + 1e-9);
    }
    // extrema always present
    for (int j = 0; j < m; ++j) {
      Vec e = Vec::Zero(m);
      e[j] = 1.0;
      CHECK(contains_weight(ws, e));
    }
  }
}

TEST_CASE("utility-loss maximizer lies at a corner weight") {
  Rng rng(55);
  const int grid_n = 2000;
  for (int trial = 0; trial < 40; ++trial) {
    int count = 2 + rng.uniform_int(5);
    std::vector<Vec> vs, refs;
    for (int i = 0; i < count; ++i) {
      Vec v(2);
      v[0] = 4.0 * rng.uniform() - 2.0;
      v[1] = 4.0 * rng.uniform() - 2.0;
      vs.push_back(v);
      Vec r = v;
      r[0] += rng.uniform();
      r[1] += rng.uniform();
      refs.push_back(r);
    }
    ValueSet v = make_set(vs);
    ValueSet reference = make_set(refs);
    auto corners = corner_weights(v);

    double best_loss = -1e18;
    Vec best_w;
    for (int i = 0; i < grid_n; ++i) {
      double w1 = static_cast<double>(i) / (grid_n - 1);
      WeightVector w(vec2(w1, 1.0 - w1));
      double loss =
          max_scalarized(reference, w).first - max_scalarized(v, w).first;
      if (loss > best_loss) {
        best_loss = loss;
        best_w = w.entries();
      }
    }
    // maximizer of the piecewise-linear loss is within one grid cell of a
    // corner of the candidate polyhedron (Theorem 3.2 shape of the claim)
    double spacing = 1.0 / (grid_n - 1);
    double nearest = 1e18;
    for (const auto& c : corners)
      nearest = std::min(nearest, (c.entries() - best_w).cwiseAbs().maxCoeff());
    CHECK(nearest <= spacing + 1e-12);
  }
}
