#include "divlab/gillespie.hpp"

#include <bit>

namespace divlab {

GillespieEngine::GillespieEngine(const Graph& g, const Params& p, Configuration initial, Rng rng)
    : g_(&g), p_(p), tasks_(std::move(initial)), n1_(g.vertex_count(), 0),
      tree_(static_cast<std::size_t>(g.vertex_count())), rng_(rng) {
  p_.validate();
  if (static_cast<int>(tasks_.size()) != g.vertex_count())
    throw std::invalid_argument("gillespie: configuration size mismatch");
  for (auto t : tasks_)
    if (t != 1 && t != 2) throw std::invalid_argument("gillespie: tasks must be 1 or 2");
  refresh();
  // a flip touches deg+1 leaves; past this count a full O(N) rebuild is
  // cheaper than per-leaf O(log N) updates
  const int n = g.vertex_count();
  const int logn = std::bit_width(static_cast<unsigned>(n)) + 1;
  bulk_threshold_ = std::max(8, 2 * n / logn);
}

void GillespieEngine::refresh() {
  const int n = g_->vertex_count();
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y : g_->neighbors(x)) count += (tasks_[y] == 1);
    n1_[x] = count;
  }
  for (int x = 0; x < n; ++x)
    tree_.set(x, flip_rate_from_count(tasks_[x], n1_[x], g_->degree(x), p_));
  tree_.rebuild();
}

void GillespieEngine::apply_flip(int x) {
  const Task from = tasks_[x];
  const Task to = other_task(from);
  tasks_[x] = to;
  const int d = to == 1 ? 1 : -1;
  const auto nbrs = g_->neighbors(x);
  if (static_cast<int>(nbrs.size()) + 1 >= bulk_threshold_) {
    for (int y : nbrs) {
      n1_[y] += d;
      tree_.set(y, flip_rate_from_count(tasks_[y], n1_[y], g_->degree(y), p_));
    }
    tree_.set(x, flip_rate_from_count(to, n1_[x], g_->degree(x), p_));
    tree_.rebuild();
  } else {
    for (int y : nbrs) {
      n1_[y] += d;
      tree_.update(y, flip_rate_from_count(tasks_[y], n1_[y], g_->degree(y), p_));
    }
    tree_.update(x, flip_rate_from_count(to, n1_[x], g_->degree(x), p_));
  }
}

StepOutcome GillespieEngine::step(double max_time, Event& ev) {
  const double total = tree_.total();
  if (total == 0.0) return StepOutcome::Absorbed;
  const double t_next = t_ + rng_.exponential(total);
  if (t_next > max_time) {
    t_ = max_time;
    return StepOutcome::ReachedHorizon;
  }
  if (!(t_next > t_)) throw SimulationError("gillespie: event time failed to advance");
  const auto x = static_cast<int>(tree_.sample(rng_.uniform01() * total));
  ev = {t_next, x, tasks_[x], other_task(tasks_[x]), MarkKind::Flip, -1};
  t_ = t_next;
  apply_flip(x);
  if (++steps_ % kRefreshInterval == 0) refresh();
  return StepOutcome::Applied;
}

}  // namespace divlab
