#include "divlab/engine.hpp"

namespace divlab {

ObservableAccumulator::ObservableAccumulator(const Graph& g, const Configuration& initial, double burnin,
                                             const Bipartition* bp, bool track_agreement)
    : g_(&g), tasks_(initial), burnin_(burnin), track_agreement_(track_agreement) {
  if (static_cast<int>(initial.size()) != g.vertex_count())
    throw std::invalid_argument("accumulator: configuration size mismatch");
  for (auto t : tasks_) x1_ += (t == 1);
  if (bp) {
    track_residence_ = true;
    plus_ = xi_plus(*bp);
    for (std::size_t v = 0; v < tasks_.size(); ++v) match_plus_ += (tasks_[v] == plus_[v]);
  }
  if (track_agreement_) {
    for (int x = 0; x < g.vertex_count(); ++x)
      for (int y : g.neighbors(x))
        if (y > x) agree_edges_ += (tasks_[x] == tasks_[y]);
  }
}

void ObservableAccumulator::advance_to(double t) {
  if (t < t_) throw SimulationError("accumulator: time moved backwards");
  double lo = t_;
  t_ = t;
  // split the interval at the burn-in boundary so both windows stay exact
  auto add = [&](double a, double b, bool post) {
    const double dt = b - a;
    if (dt <= 0.0) return;
    const double xdt = static_cast<double>(x1_) * dt;
    int_x_ += xdt;
    if (post) int_x_post_ += xdt;
    if (track_agreement_) {
      const double adt = static_cast<double>(agree_edges_) * dt;
      int_agree_ += adt;
      if (post) int_agree_post_ += adt;
    }
    if (track_residence_) {
      const auto n = static_cast<std::int64_t>(tasks_.size());
      if (match_plus_ == n) res_plus_ += dt;
      if (match_plus_ == 0) res_minus_ += dt;
    }
  };
  if (lo < burnin_ && t > burnin_) {
    add(lo, burnin_, false);
    add(burnin_, t, true);
  } else {
    add(lo, t, lo >= burnin_);
  }
}

void ObservableAccumulator::apply_event(const Event& ev) {
  ++updates_;
  if (ev.old_task == ev.new_task) return;  // logged no-op mark
  const int x = ev.vertex;
  if (track_agreement_) {
    for (int y : g_->neighbors(x)) {
      agree_edges_ += (ev.new_task == tasks_[y]);
      agree_edges_ -= (ev.old_task == tasks_[y]);
    }
  }
  tasks_[x] = ev.new_task;
  x1_ += ev.new_task == 1 ? 1 : -1;
  if (track_residence_) match_plus_ += (ev.new_task == plus_[x]) ? 1 : -1;
}

double ObservableAccumulator::phi() const {
  const double n = static_cast<double>(tasks_.size());
  if (t_ <= 0.0) return static_cast<double>(x1_) / n;
  return int_x_ / (t_ * n);
}

double ObservableAccumulator::phi_postburn() const {
  const double n = static_cast<double>(tasks_.size());
  const double span = t_ - burnin_;
  if (span <= 0.0) return static_cast<double>(x1_) / n;
  return int_x_post_ / (span * n);
}

double ObservableAccumulator::agreement_density() const {
  const double e = static_cast<double>(g_->edge_count());
  if (e == 0.0) return 0.0;
  if (t_ <= 0.0) return static_cast<double>(agree_edges_) / e;
  return int_agree_ / (t_ * e);
}

double ObservableAccumulator::agreement_density_postburn() const {
  const double e = static_cast<double>(g_->edge_count());
  if (e == 0.0) return 0.0;
  const double span = t_ - burnin_;
  if (span <= 0.0) return static_cast<double>(agree_edges_) / e;
  return int_agree_post_ / (span * e);
}

}  // namespace divlab
