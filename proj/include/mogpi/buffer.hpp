#pragma once

#include <vector>

#include "mogpi/rng.hpp"
#include "mogpi/types.hpp"

namespace mogpi {

/// Binary tree of partial sums enabling O(log n) proportional sampling.
class SumTree {
 public:
  explicit SumTree(int capacity);

  int capacity() const { return capacity_; }
  double total() const { return nodes_[1]; }
  double mass(int index) const { return nodes_[capacity_ + index]; }

  void set(int index, double mass);

  /// Index of the leaf containing prefix-sum position u, u in [0, total).
  int find(double u) const;

  /// True when every internal node equals the sum of its children within tol.
  bool consistent(double tol) const;

 private:
  int capacity_;
  std::vector<double> nodes_;  // 1-based heap layout, leaves at [capacity, 2*capacity)
};

struct BufferConfig {
  int capacity = 0;
  double alpha_per = 0.6;
  double kappa = 0.001;
};

/// Sum-tree backed transition store. Raw |delta| priorities are kept per
/// entry; the sampling mass is max(|delta|^alpha, kappa) so that
/// P(i) = max(|delta_i|^alpha, kappa) / sum_j max(|delta_j|^alpha, kappa).
/// Pushes evict FIFO once the capacity is reached.
class PrioritizedBuffer {
 public:
  explicit PrioritizedBuffer(const BufferConfig& cfg);

  int size() const { return size_; }
  int capacity() const { return cfg_.capacity; }

  /// Stores the transition and returns its slot index.
  int push(Transition t, double raw_priority);

  void update_priority(int index, double raw_priority);

  /// Draws a slot index with probability proportional to its mass.
  int sample_index(Rng& rng) const;

  const Transition& transition(int index) const;
  double raw_priority(int index) const;
  double probability(int index) const;

  const SumTree& tree() const { return tree_; }

 private:
  void check_live(int index) const;
  double mass_of(double raw) const;

  BufferConfig cfg_;
  std::vector<Transition> items_;
  std::vector<double> raw_;
  SumTree tree_;
  int size_ = 0;
  int next_ = 0;
};

}  // namespace mogpi
