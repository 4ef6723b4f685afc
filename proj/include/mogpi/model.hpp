#pragma once

#include <vector>

#include "mogpi/rng.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

/// Empirical tabular model: per (s,a), counts of observed
/// (next state, reward, terminal) outcomes.
class TabularModel {
 public:
  struct Record {
    int next_state;
    Vec reward;
    bool terminal;
    long count;
  };

  TabularModel(int state_count, int action_count);

  void update(const Transition& t);

  bool visited(int s, int a) const;
  long visit_count(int s, int a) const;
  const std::vector<Record>& records(int s, int a) const;

  /// Draws an outcome proportionally to observed counts.
  /// Throws if (s,a) has never been visited.
  Transition sample(int s, int a, Rng& rng) const;

 private:
  int index(int s, int a) const;

  int states_;
  int actions_;
  std::vector<std::vector<Record>> records_;
  std::vector<long> visits_;
};

}  // namespace mogpi
