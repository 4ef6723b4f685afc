#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace mogpi {

using Vec = Eigen::VectorXd;

constexpr double kSimplexSumTol = 1e-9;
constexpr double kSimplexNegTol = 1e-12;

/// Point on the m-simplex expressing linear preferences over objectives.
class WeightVector {
 public:
  explicit WeightVector(Vec entries) : w_(std::move(entries)) {
    if (w_.size() < 2)
      throw std::invalid_argument("WeightVector: need at least 2 objectives");
    if (std::abs(w_.sum() - 1.0) > kSimplexSumTol)
      throw std::invalid_argument("WeightVector: entries must sum to 1");
    if (w_.minCoeff() < -kSimplexNegTol)
      throw std::invalid_argument("WeightVector: entries must be non-negative");
  }

  const Vec& entries() const { return w_; }
  Eigen::Index dim() const { return w_.size(); }
  double operator[](Eigen::Index i) const { return w_[i]; }

  /// Extremum weight e_i (1 at position i, 0 elsewhere).
  static WeightVector extremum(Eigen::Index m, Eigen::Index i) {
    Vec w = Vec::Zero(m);
    w[i] = 1.0;
    return WeightVector(std::move(w));
  }

 private:
  Vec w_;
};

inline bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

inline bool lex_less(const WeightVector& a, const WeightVector& b) {
  return lex_less(a.entries(), b.entries());
}

inline bool approx_equal(const Vec& a, const Vec& b, double tol) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// u(v, w) = v . w
inline double scalarize(const Vec& v, const WeightVector& w) {
  if (v.size() != w.dim())
    throw std::invalid_argument("scalarize: dimension mismatch");
  return v.dot(w.entries());
}

struct Transition {
  int state;
  int action;
  Vec reward;
  int next_state;
  bool terminal;
};

/// Dense per-policy action-value table, (s,a) -> R^m. Rows are (s,a) pairs.
class MoQTable {
 public:
  MoQTable(int state_count, int action_count, int objective_count)
      : states_(state_count),
        actions_(action_count),
        q_(Eigen::MatrixXd::Zero(
            static_cast<Eigen::Index>(state_count) * action_count,
            objective_count)) {}

  int state_count() const { return states_; }
  int action_count() const { return actions_; }
  int objective_count() const { return static_cast<int>(q_.cols()); }

  Eigen::MatrixXd::ConstRowXpr q(int s, int a) const { return q_.row(row(s, a)); }
  Eigen::MatrixXd::RowXpr q(int s, int a) { return q_.row(row(s, a)); }

  const Eigen::MatrixXd& data() const { return q_; }
  Eigen::MatrixXd& data() { return q_; }

 private:
  Eigen::Index row(int s, int a) const {
    if (s < 0 || s >= states_ || a < 0 || a >= actions_)
      throw std::out_of_range("MoQTable: index out of range");
    return static_cast<Eigen::Index>(s) * actions_ + a;
  }

  int states_;
  int actions_;
  Eigen::MatrixXd q_;
};

}  // namespace mogpi
