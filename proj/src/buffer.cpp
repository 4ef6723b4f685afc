#include "mogpi/buffer.hpp"

#include <cmath>
#include <stdexcept>

namespace mogpi {

SumTree::SumTree(int capacity) : capacity_(capacity) {
  if (capacity <= 0) throw std::invalid_argument("SumTree: capacity must be positive");
  nodes_.assign(2 * static_cast<std::size_t>(capacity), 0.0);
}

void SumTree::set(int index, double mass) {
  if (index < 0 || index >= capacity_)
    throw std::out_of_range("SumTree: leaf index out of range");
  if (!(mass >= 0.0) || !std::isfinite(mass))
    throw std::invalid_argument("SumTree: mass must be finite and non-negative");
  int node = capacity_ + index;
  nodes_[node] = mass;
  // recompute parents from children to keep partial sums tight
  for (node /= 2; node >= 1; node /= 2)
    nodes_[node] = nodes_[2 * node] + nodes_[2 * node + 1];
}

int SumTree::find(double u) const {
  int node = 1;
  while (node < capacity_) {
    int left = 2 * node;
    if (u < nodes_[left]) {
      node = left;
    } else {
      u -= nodes_[left];
      node = left + 1;
    }
  }
  return node - capacity_;
}

bool SumTree::consistent(double tol) const {
  for (int node = 1; node < capacity_; ++node)
    if (std::abs(nodes_[node] - (nodes_[2 * node] + nodes_[2 * node + 1])) > tol)
      return false;
  return true;
}

PrioritizedBuffer::PrioritizedBuffer(const BufferConfig& cfg)
    : cfg_(cfg), tree_(cfg.capacity > 0 ? cfg.capacity : 1) {
  if (cfg.capacity <= 0)
    throw std::invalid_argument("PrioritizedBuffer: capacity must be positive");
  if (cfg.alpha_per <= 0.0 || cfg.alpha_per > 1.0)
    throw std::invalid_argument("PrioritizedBuffer: alpha must be in (0,1]");
  if (cfg.kappa <= 0.0)
    throw std::invalid_argument("PrioritizedBuffer: kappa must be positive");
  items_.resize(cfg.capacity);
  raw_.assign(cfg.capacity, 0.0);
}

double PrioritizedBuffer::mass_of(double raw) const {
  return std::max(std::pow(std::abs(raw), cfg_.alpha_per), cfg_.kappa);
}

int PrioritizedBuffer::push(Transition t, double raw_priority) {
  if (!(raw_priority >= 0.0) || !std::isfinite(raw_priority))
    throw std::invalid_argument("push: priority must be finite and non-negative");
  int slot = next_;
  items_[slot] = std::move(t);
  raw_[slot] = raw_priority;
  tree_.set(slot, mass_of(raw_priority));
  next_ = (next_ + 1) % cfg_.capacity;
  if (size_ < cfg_.capacity) ++size_;
  return slot;
}

void PrioritizedBuffer::check_live(int index) const {
  if (index < 0 || index >= size_)
    throw std::out_of_range("PrioritizedBuffer: stale or invalid index");
}

void PrioritizedBuffer::update_priority(int index, double raw_priority) {
  check_live(index);
  if (!(raw_priority >= 0.0) || !std::isfinite(raw_priority))
    throw std::invalid_argument("update_priority: priority must be finite and non-negative");
  raw_[index] = raw_priority;
  tree_.set(index, mass_of(raw_priority));
}

int PrioritizedBuffer::sample_index(Rng& rng) const {
  if (size_ == 0) throw std::logic_error("sample_index: buffer is empty");
  double u = rng.uniform() * tree_.total();
  int idx = tree_.find(u);
  // guard against u == total from rounding
  return idx < size_ ? idx : size_ - 1;
}

const Transition& PrioritizedBuffer::transition(int index) const {
  check_live(index);
  return items_[index];
}

double PrioritizedBuffer::raw_priority(int index) const {
  check_live(index);
  return raw_[index];
}

double PrioritizedBuffer::probability(int index) const {
  check_live(index);
  return tree_.mass(index) / tree_.total();
}

}  // namespace mogpi
