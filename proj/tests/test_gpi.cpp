#include <doctest.h>

#include <cmath>
#include <limits>

#include "mogpi/dp.hpp"
#include "mogpi/gpi.hpp"
#include "mogpi/oracle.hpp"
#include "support/fixtures.hpp"

using namespace mogpi;

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

WeightVector w2(double a, double b) { return WeightVector(vec2(a, b)); }

PolicyLibrary single_policy_library(int states, int actions, int m) {
  PolicyLibrary lib;
  lib.add(MoQTable(states, actions, m), WeightVector::extremum(m, 0),
          Vec::Zero(m));
  return lib;
}

}  // namespace

TEST_CASE("gpe is the scalarized stored q-value") {
  PolicyLibrary lib = single_policy_library(1, 2, 2);
  lib.q_tables[0].q(0, 0) = vec2(2, 0).transpose();
  CHECK(gpe(lib, 0, 0, 0, w2(0, 1)) == doctest::Approx(0.0));
  CHECK(gpe(lib, 0, 0, 0, w2(0.5, 0.5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(gpe(lib, 1, 0, 0, w2(1, 0)), std::out_of_range);

  PolicyLibrary lib3;
  lib3.add(MoQTable(1, 1, 3), WeightVector::extremum(3, 0), Vec::Zero(3));
  Vec q(3);
  q << 1, 2, 3;
  lib3.q_tables[0].q(0, 0) = q.transpose();
  Vec w(3);
  w << 0.1, 0.2, 0.7;
  CHECK(gpe(lib3, 0, 0, 0, WeightVector(w)) == doctest::Approx(2.6));
}

TEST_CASE("gpi_action examples") {
  PolicyLibrary lib = single_policy_library(1, 2, 2);
  lib.q_tables[0].q(0, 0) = vec2(1, 0).transpose();
  CHECK(gpi_action(lib, 0, w2(1, 0)) == 0);

  PolicyLibrary two;
  two.add(MoQTable(1, 2, 2), w2(1, 0), Vec::Zero(2));
  two.add(MoQTable(1, 2, 2), w2(0, 1), Vec::Zero(2));
  two.q_tables[0].q(0, 0) = vec2(1, 0).transpose();
  two.q_tables[1].q(0, 1) = vec2(0, 2).transpose();
  CHECK(gpi_action(two, 0, w2(0.5, 0.5)) == 1);  // 1.0 beats 0.5

  PolicyLibrary zeros = single_policy_library(1, 2, 2);
  CHECK(gpi_action(zeros, 0, w2(0.5, 0.5)) == 0);  // tie -> lowest action

  PolicyLibrary empty;
  CHECK_THROWS_AS(gpi_action(empty, 0, w2(1, 0)), std::invalid_argument);
}

TEST_CASE("one-step gpi target") {
  PolicyLibrary lib = single_policy_library(1, 1, 2);

  Transition terminal{0, 0, vec2(1, 0), 0, true};
  CHECK(one_step_gpi_target(lib, terminal, 0.5, w2(1, 0)) ==
        doctest::Approx(1.0));

  lib.q_tables[0].q(0, 0) = vec2(2, 0).transpose();
  Transition t{0, 0, vec2(1, 0), 0, false};
  CHECK(one_step_gpi_target(lib, t, 0.5, w2(1, 0)) == doctest::Approx(2.0));

  PolicyLibrary zeros = single_policy_library(1, 1, 2);
  Transition z{0, 0, vec2(0, 0), 0, false};
  CHECK(one_step_gpi_target(zeros, z, 0.5, w2(1, 0)) == doctest::Approx(0.0));
}

TEST_CASE("priority examples") {
  // converged table: q(s,a) = R + gamma * max q  =>  priority 0
  PolicyLibrary lib = single_policy_library(1, 1, 2);
  lib.q_tables[0].q(0, 0) = vec2(2, 0).transpose();
  Transition t{0, 0, vec2(1, 0), 0, false};
  CHECK(priority(lib, t, 0.5, w2(1, 0), 0) == doctest::Approx(0.0));

  // target 2.0 vs current 0.5 -> 1.5
  PolicyLibrary lib2 = single_policy_library(1, 2, 2);
  lib2.q_tables[0].q(0, 0) = vec2(0.5, 0).transpose();
  lib2.q_tables[0].q(0, 1) = vec2(2, 0).transpose();
  Transition t2{0, 0, vec2(1, 0), 0, false};
  CHECK(priority(lib2, t2, 0.5, w2(1, 0), 0) == doctest::Approx(1.5));
}

TEST_CASE("priority reduces to plain TD-error for a single policy") {
  Rng rng(101);
  const int states = 5, actions = 3;
  for (int trial = 0; trial < 1000; ++trial) {
    PolicyLibrary lib = single_policy_library(states, actions, 2);
    MoQTable& q = lib.q_tables[0];
    for (int s = 0; s < states; ++s)
      for (int a = 0; a < actions; ++a)
        q.q(s, a) = vec2(4 * rng.uniform() - 2, 4 * rng.uniform() - 2)
                        .transpose();
    WeightVector w = testing::random_weight(rng, 2);
    double gamma = rng.uniform();
    Transition t{rng.uniform_int(states), rng.uniform_int(actions),
                 vec2(2 * rng.uniform() - 1, 2 * rng.uniform() - 1),
                 rng.uniform_int(states), rng.uniform() < 0.2};

    // classic PER TD-error, written with the identical arithmetic path
    double target = t.reward.dot(w.entries());
    if (!t.terminal) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < actions; ++a)
        best = std::max(best, q.q(t.next_state, a).dot(w.entries()));
      target += gamma * best;
    }
    double td_error = std::abs(target - q.q(t.state, t.action).dot(w.entries()));

    CHECK(priority(lib, t, gamma, w, 0) == td_error);  // bit-identical
  }
}

TEST_CASE("gpi dominance over every library policy") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Momdp env = testing::random_momdp(rng);
    const int m = env.objective_count();
    // library of exact q-tables of optimal policies for a few weights
    PolicyLibrary lib;
    for (int k = 0; k < 3; ++k) {
      WeightVector w = testing::random_weight(rng, m);
      ViResult vi = scalarized_value_iteration(env, w);
      lib.add(std::move(vi.q), w, std::move(vi.value_vector));
    }
    for (int check = 0; check < 20; ++check) {
      WeightVector w = testing::random_weight(rng, m);
      // exact evaluation of the stationary GPI policy
      std::vector<int> policy(env.state_count());
      for (int s = 0; s < env.state_count(); ++s)
        policy[s] = gpi_action(lib, s, w);
      MoQTable gpi_q = policy_q_table(env, evaluate_policy(env, policy));
      for (int s = 0; s < env.state_count(); ++s)
        for (int a = 0; a < env.action_count(); ++a) {
          double lhs = gpi_q.q(s, a).dot(w.entries());
          for (int i = 0; i < lib.size(); ++i)
            CHECK(lhs >= gpe(lib, i, s, a, w) - 1e-9);
        }
    }
  }
}

TEST_CASE("duplicate policies never change the gpi action") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    PolicyLibrary lib;
    int policies = 1 + rng.uniform_int(3);
    for (int i = 0; i < policies; ++i) {
      MoQTable q(3, 2, 2);
      for (int s = 0; s < 3; ++s)
        for (int a = 0; a < 2; ++a)
          q.q(s, a) = vec2(2 * rng.uniform() - 1, 2 * rng.uniform() - 1)
                          .transpose();
      lib.add(std::move(q), WeightVector::extremum(2, 0), Vec::Zero(2));
    }
    WeightVector w = testing::random_weight(rng, 2);
    PolicyLibrary dup = lib;
    dup.add(lib.q_tables[rng.uniform_int(lib.size())],
            WeightVector::extremum(2, 1), Vec::Zero(2));
    for (int s = 0; s < 3; ++s)
      CHECK(gpi_action(lib, s, w) == gpi_action(dup, s, w));
  }
}
