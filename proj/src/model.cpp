#include "mogpi/model.hpp"

#include <stdexcept>

namespace mogpi {

TabularModel::TabularModel(int state_count, int action_count)
    : states_(state_count), actions_(action_count) {
  if (states_ <= 0 || actions_ <= 0)
    throw std::invalid_argument("TabularModel: counts must be positive");
  records_.resize(static_cast<std::size_t>(states_) * actions_);
  visits_.assign(records_.size(), 0);
}

int TabularModel::index(int s, int a) const {
  if (s < 0 || s >= states_ || a < 0 || a >= actions_)
    throw std::out_of_range("TabularModel: (s,a) out of range");
  return s * actions_ + a;
}

void TabularModel::update(const Transition& t) {
  int idx = index(t.state, t.action);
  for (auto& rec : records_[idx]) {
    if (rec.next_state == t.next_state && rec.terminal == t.terminal &&
        rec.reward == t.reward) {
      ++rec.count;
      ++visits_[idx];
      return;
    }
  }
  records_[idx].push_back({t.next_state, t.reward, t.terminal, 1});
  ++visits_[idx];
}

bool TabularModel::visited(int s, int a) const { return visits_[index(s, a)] > 0; }

long TabularModel::visit_count(int s, int a) const { return visits_[index(s, a)]; }

const std::vector<TabularModel::Record>& TabularModel::records(int s, int a) const {
  return records_[index(s, a)];
}

Transition TabularModel::sample(int s, int a, Rng& rng) const {
  int idx = index(s, a);
  long total = visits_[idx];
  if (total == 0)
    throw std::logic_error("TabularModel: sampling unvisited (s,a)");
  double u = rng.uniform() * static_cast<double>(total);
  double acc = 0.0;
  const Record* chosen = &records_[idx].back();
  for (const auto& rec : records_[idx]) {
    acc += static_cast<double>(rec.count);
    if (u < acc) {
      chosen = &rec;
      break;
    }
  }
  return Transition{s, a, chosen->reward, chosen->next_state, chosen->terminal};
}

}  // namespace mogpi
