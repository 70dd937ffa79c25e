#include "divlab/graphical.hpp"

namespace divlab {

GraphicalEngine::GraphicalEngine(const Graph& g, const Params& p, Configuration initial, Rng rng,
                                 EventLog* log)
    : g_(&g), p_(p), tasks_(std::move(initial)), rng_(rng), log_(log) {
  p_.validate();
  if (static_cast<int>(tasks_.size()) != g.vertex_count())
    throw std::invalid_argument("graphical: configuration size mismatch");
  const double eps = p_.epsilon;
  const double dc = p_.c2 - p_.c1;
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    const int deg = g.degree(x);
    if (deg == 0) {
      // no neighbors to imitate: the whole attempt rate becomes spontaneous
      streams_.push_back({MarkKind::Dot, x, -1, p_.c1});
      if (dc > 0.0) streams_.push_back({MarkKind::Cross, x, -1, dc});
      continue;
    }
    if (eps > 0.0) {
      streams_.push_back({MarkKind::Dot, x, -1, eps * p_.c1});
      if (dc > 0.0) streams_.push_back({MarkKind::Cross, x, -1, eps * dc});
    }
    if (eps < 1.0) {
      const double solid = (1.0 - eps) * p_.c1 / deg;
      const double dashed = (1.0 - eps) * dc / deg;
      for (int y : g.neighbors(x)) {
        streams_.push_back({MarkKind::Solid, x, y, solid});
        if (dashed > 0.0) streams_.push_back({MarkKind::Dashed, x, y, dashed});
      }
    }
  }
  for (std::uint32_t s = 0; s < streams_.size(); ++s)
    queue_.emplace(rng_.exponential(streams_[s].rate), s);
}

std::pair<Task, Task> GraphicalEngine::apply_mark(Configuration& c, MarkKind kind, int x, int y) {
  const Task old = c[x];
  Task next = old;
  switch (kind) {
    case MarkKind::Solid:
      next = other_task(c[y]);  // anti-imitate: flips only if tasks agreed
      break;
    case MarkKind::Dashed:
      if (old == 2) next = other_task(c[y]);
      break;
    case MarkKind::Dot:
      next = other_task(old);
      break;
    case MarkKind::Cross:
      if (old == 2) next = 1;
      break;
    case MarkKind::Flip:
      next = other_task(old);
      break;
  }
  c[x] = next;
  return {old, next};
}

StepOutcome GraphicalEngine::step(double max_time, Event& ev) {
  if (queue_.empty()) return StepOutcome::ReachedHorizon;  // edge case: no streams
  const auto [t_next, sid] = queue_.top();
  if (t_next > max_time) {
    t_ = max_time;
    return StepOutcome::ReachedHorizon;
  }
  if (!(t_next > t_)) throw SimulationError("graphical: mark time failed to advance");
  queue_.pop();
  const Stream& s = streams_[sid];
  const auto [old, next] = apply_mark(tasks_, s.kind, s.target, s.source);
  ev = {t_next, s.target, old, next, s.kind, s.source};
  t_ = t_next;
  ++steps_;
  if (log_) log_->push(ev);
  queue_.emplace(t_next + rng_.exponential(s.rate), sid);
  return StepOutcome::Applied;
}

InfluenceSet influence_set(const EventLog& log, int ring_n, int x, double t, double horizon) {
  const double t_lo = t - horizon;
  if (log.size() == 0 && t_lo < 0.0)
    throw SimulationError("influence_set: log does not cover the window");
  if (log.coverage_start() > std::max(0.0, t_lo))
    throw SimulationError("influence_set: log does not cover the window");

  InfluenceSet out;
  long l = x, r = x + 1;
  double hi = t;
  // walk marks newest -> oldest; an arrow from just outside the interval
  // into its edge extends the interval for all earlier times
  for (std::size_t i = 0; i < log.size(); ++i) {
    const Event& ev = log.from_newest(i);
    if (ev.time >= t) continue;
    if (ev.time < t_lo) break;
    if (ev.kind != MarkKind::Solid && ev.kind != MarkKind::Dashed) continue;
    if (r - l + 1 >= ring_n) break;  // saturated the whole ring
    const auto mod = [ring_n](long v) { return ((v % ring_n) + ring_n) % ring_n; };
    bool grew = false;
    if (ev.vertex == mod(l) && ev.source == mod(l - 1)) {
      out.slabs.push_back({ev.time, hi, l, r});
      --l;
      grew = true;
    } else if (ev.vertex == mod(r) && ev.source == mod(r + 1)) {
      out.slabs.push_back({ev.time, hi, l, r});
      ++r;
      grew = true;
    }
    if (grew) hi = ev.time;
  }
  out.slabs.push_back({t_lo, hi, l, r});
  out.width_at_depth = std::min<long>(r - l + 1, ring_n);
  return out;
}

}  // namespace divlab
