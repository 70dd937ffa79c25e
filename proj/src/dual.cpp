#include "divlab/dual.hpp"

#include <cmath>
#include <stdexcept>

#include "divlab/gillespie.hpp"
#include "divlab/graphical.hpp"

namespace divlab {

namespace {

void require_even_ring(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("dual: need an even ring size >= 4");
}

}  // namespace

EdgeConfiguration project_to_edges(const Configuration& tasks) {
  const int n = static_cast<int>(tasks.size());
  require_even_ring(n);
  EdgeConfiguration zeta;
  zeta.state.resize(n);
  for (int k = 0; k < n; ++k) {
    const Task a = tasks[k];
    const Task b = tasks[(k + 1) % n];
    zeta.state[k] = a == b ? a : 0;
  }
  return zeta;
}

Configuration tasks_from_edges(const EdgeConfiguration& zeta, Task tau0) {
  const int n = static_cast<int>(zeta.state.size());
  require_even_ring(n);
  Configuration tasks(n);
  tasks[0] = tau0;
  for (int k = 0; k + 1 < n; ++k)
    tasks[k + 1] = zeta.state[k] != 0 ? tasks[k] : other_task(tasks[k]);
  // closing edge consistency: occupied iff tasks agree around the ring
  const bool closes = (zeta.state[n - 1] != 0) == (tasks[n - 1] == tasks[0]);
  if (!closes) throw std::invalid_argument("dual: edge state is not realizable on the ring (odd disagreement count)");
  for (int k = 0; k < n; ++k)
    if (zeta.state[k] != 0 && zeta.state[k] != tasks[k])
      throw std::invalid_argument("dual: particle type inconsistent with reference task");
  return tasks;
}

DualShadow::DualShadow(EdgeConfiguration zeta, Task tau0)
    : zeta_(std::move(zeta)), tau0_(tau0), n_(static_cast<int>(zeta_.state.size())) {
  tasks_from_edges(zeta_, tau0_);  // validates realizability
  count_ = zeta_.particle_count();
  if (count_ % 2 != 0) throw std::invalid_argument("dual: particle count must be even");
}

Task DualShadow::task_at(int x) const {
  Task t = tau0_;
  for (int k = 0; k < x; ++k) t = zeta_.state[k] != 0 ? t : other_task(t);
  return t;
}

void DualShadow::flip_incident(int x) {
  const int el = (x + n_ - 1) % n_;
  const int er = x;
  auto& l = zeta_.state[el];
  auto& r = zeta_.state[er];
  if (l != 0 && r != 0) {  // pair death
    l = r = 0;
    count_ -= 2;
  } else if (l == 0 && r == 0) {  // pair birth of the task x switches to
    const Task born = other_task(task_at(x));
    l = r = born;
    count_ += 2;
  } else if (l != 0) {  // particle crosses x and changes type
    r = other_task(l);
    l = 0;
  } else {
    l = other_task(r);
    r = 0;
  }
  if (x == 0) tau0_ = other_task(tau0_);
}

void DualShadow::apply(const Event& mark) {
  const int x = mark.vertex;
  const int y = mark.source;
  switch (mark.kind) {
    case MarkKind::Solid:
    case MarkKind::Dashed: {
      // acting edge is (x,y); the arrow moves its particle across x
      const int e = y == (x + 1) % n_ ? x : y;
      const int land = e == x ? (x + n_ - 1) % n_ : x;
      const auto type = zeta_.state[e];
      if (type == 0) return;                                // endpoints disagreed: no-op
      if (mark.kind == MarkKind::Dashed && type != 2) return;  // dashed needs task 2
      zeta_.state[e] = 0;
      if (zeta_.state[land] != 0) {
        zeta_.state[land] = 0;
        count_ -= 2;
      } else {
        zeta_.state[land] = other_task(type);
      }
      if (x == 0) tau0_ = other_task(tau0_);
      break;
    }
    case MarkKind::Dot:
      flip_incident(x);
      break;
    case MarkKind::Cross: {
      // acts only on a task-2 vertex; an incident particle reveals the task
      const auto l = zeta_.state[(x + n_ - 1) % n_];
      const auto r = zeta_.state[x];
      const Task tx = l != 0 ? l : (r != 0 ? r : task_at(x));
      if (tx == 2) flip_incident(x);
      break;
    }
    case MarkKind::Flip:
      throw std::invalid_argument("dual: plain flips carry no mark semantics");
  }
  if (count_ % 2 != 0) throw SimulationError("dual: particle parity violated");
}

CouplingReport couple_and_verify(int n, const Params& p, const InitialLaw& init,
                                 const RunBudget& budget, std::uint64_t seed) {
  require_even_ring(n);
  budget.validate();
  const Graph ring = Graph::cycle(n);
  Rng rng(seed);
  const Configuration start = draw_initial(init, n, rng);
  GraphicalEngine engine(ring, p, start, rng);
  DualShadow shadow(project_to_edges(start), start[0]);

  CouplingReport report;
  Event ev;
  while (report.events < budget.max_updates) {
    if (engine.step(budget.max_time, ev) != StepOutcome::Applied) break;
    shadow.apply(ev);
    ++report.events;
    const EdgeConfiguration truth = project_to_edges(engine.config());
    if (shadow.edges().state != truth.state || shadow.tau0() != engine.config()[0]) {
      report.ok = false;
      report.first_mismatch_time = ev.time;
      report.detail = "mismatch after mark at vertex " + std::to_string(ev.vertex) +
                      " (kind " + std::to_string(static_cast<int>(ev.kind)) + ", t=" +
                      std::to_string(ev.time) + ")";
      break;
    }
  }
  return report;
}

NativeDualEngine::NativeDualEngine(int n, const Params& p, EdgeConfiguration zeta, Task tau0, Rng rng)
    : p_(p), n_(n), zeta_(std::move(zeta)), tree_(2 * static_cast<std::size_t>(n)), rng_(rng) {
  p_.validate();
  require_even_ring(n);
  if (static_cast<int>(zeta_.state.size()) != n) throw std::invalid_argument("dual: edge state size mismatch");
  tasks_ = tasks_from_edges(zeta_, tau0);
  count_ = zeta_.particle_count();
  if (count_ % 2 != 0) throw std::invalid_argument("dual: particle count must be even");
  for (int e = 0; e < n_; ++e) set_edge_rate(e);
  for (int x = 0; x < n_; ++x) set_vertex_rate(x);
  tree_.rebuild();
}

void NativeDualEngine::set_edge_rate(int e) {
  const auto type = zeta_.state[e];
  const double c = type == 1 ? p_.c1 : p_.c2;
  tree_.set(static_cast<std::size_t>(e), type == 0 ? 0.0 : (1.0 - p_.epsilon) * c);
}

void NativeDualEngine::set_vertex_rate(int x) {
  const double c = tasks_[x] == 1 ? p_.c1 : p_.c2;
  tree_.set(static_cast<std::size_t>(n_ + x), p_.epsilon * c);
}

StepOutcome NativeDualEngine::step(double max_time, DualEvent& ev) {
  const double total = tree_.total();
  if (total == 0.0) return StepOutcome::Absorbed;  // extinct (eps == 0)
  const double t_next = t_ + rng_.exponential(total);
  if (t_next > max_time) {
    t_ = max_time;
    return StepOutcome::ReachedHorizon;
  }
  if (!(t_next > t_)) throw SimulationError("dual: event time failed to advance");
  const auto entity = static_cast<int>(tree_.sample(rng_.uniform01() * total));
  t_ = t_next;
  ++steps_;

  if (entity < n_) {
    // particle jump across one endpoint; same-edge arrival annihilates
    const int e = entity;
    const bool right = rng_.bernoulli(0.5);
    const int x = right ? (e + 1) % n_ : e;
    const int land = right ? (e + 1) % n_ : (e + n_ - 1) % n_;
    const auto type = zeta_.state[e];
    zeta_.state[e] = 0;
    tasks_[x] = other_task(tasks_[x]);
    if (zeta_.state[land] != 0) {
      zeta_.state[land] = 0;
      count_ -= 2;
      ev = {t_next, e, DualEventKind::Annihilation};
    } else {
      zeta_.state[land] = other_task(type);
      ev = {t_next, e, right ? DualEventKind::JumpRight : DualEventKind::JumpLeft};
    }
    set_edge_rate(e);
    set_edge_rate(land);
    set_vertex_rate(x);
    tree_.update(static_cast<std::size_t>(e), tree_.leaf(e));  // cheap path refresh
    tree_.update(static_cast<std::size_t>(land), tree_.leaf(land));
    tree_.update(static_cast<std::size_t>(n_ + x), tree_.leaf(n_ + x));
  } else {
    // spontaneous toggle: both incident edges flip occupancy
    const int x = entity - n_;
    const int el = (x + n_ - 1) % n_;
    const int er = x;
    const auto l = zeta_.state[el];
    const auto r = zeta_.state[er];
    tasks_[x] = other_task(tasks_[x]);
    if (l != 0 && r != 0) {
      zeta_.state[el] = zeta_.state[er] = 0;
      count_ -= 2;
      ev = {t_next, el, DualEventKind::Annihilation};
    } else if (l == 0 && r == 0) {
      zeta_.state[el] = zeta_.state[er] = tasks_[x];
      count_ += 2;
      ev = {t_next, el, DualEventKind::BirthPair};
    } else if (l != 0) {
      zeta_.state[el] = 0;
      zeta_.state[er] = other_task(l);
      ev = {t_next, el, DualEventKind::JumpRight};
    } else {
      zeta_.state[er] = 0;
      zeta_.state[el] = other_task(r);
      ev = {t_next, er, DualEventKind::JumpLeft};
    }
    set_edge_rate(el);
    set_edge_rate(er);
    set_vertex_rate(x);
    tree_.update(static_cast<std::size_t>(el), tree_.leaf(el));
    tree_.update(static_cast<std::size_t>(er), tree_.leaf(er));
    tree_.update(static_cast<std::size_t>(n_ + x), tree_.leaf(n_ + x));
  }
  if (count_ % 2 != 0) throw SimulationError("dual: particle parity violated");
  return StepOutcome::Applied;
}

DualRunStats simulate_dual_native(int n, const Params& p, EdgeConfiguration zeta, Task tau0,
                                  const RunBudget& budget, std::uint64_t seed,
                                  std::vector<DualEvent>* trajectory) {
  NativeDualEngine engine(n, p, std::move(zeta), tau0, Rng(seed));
  DualRunStats stats;
  DualEvent ev;
  while (stats.events < budget.max_updates) {
    const StepOutcome out = engine.step(budget.max_time, ev);
    if (out == StepOutcome::ReachedHorizon) break;
    if (out == StepOutcome::Absorbed) {
      stats.extinct = true;
      stats.extinction_time = engine.time();
      break;
    }
    ++stats.events;
    switch (ev.kind) {
      case DualEventKind::JumpLeft: ++stats.jumps_left; break;
      case DualEventKind::JumpRight: ++stats.jumps_right; break;
      case DualEventKind::BirthPair: ++stats.births; break;
      case DualEventKind::Annihilation: ++stats.annihilations; break;
    }
    if (trajectory) trajectory->push_back(ev);
  }
  stats.final_time = engine.time();
  stats.final_count = engine.particle_count();
  return stats;
}

AgreementEstimate agreement_probability(int n, const Params& p, double bernoulli_p, double horizon,
                                        int replicates, std::uint64_t seed) {
  require_even_ring(n);
  if (replicates < 1) throw std::invalid_argument("agreement: need at least one replicate");
  if (!(horizon > 0.0)) throw std::invalid_argument("agreement: need a positive horizon");
  const Graph ring = Graph::cycle(n);
  const double burnin = horizon / 2.0;
  std::vector<double> values(replicates);
  for (int r = 0; r < replicates; ++r) {
    Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(r)));
    const Configuration start = draw_initial(InitialLaw::bernoulli(bernoulli_p), n, rng);
    GillespieEngine engine(ring, p, start, rng);
    ObservableAccumulator acc(ring, start, burnin, nullptr, true);
    drive(engine, RunBudget::time(horizon), acc);
    values[r] = acc.agreement_density_postburn();
  }
  AgreementEstimate est;
  est.replicates = replicates;
  est.burnin = burnin;
  for (double v : values) est.density += v;
  est.density /= replicates;
  if (replicates > 1) {
    double ss = 0;
    for (double v : values) ss += (v - est.density) * (v - est.density);
    est.se = std::sqrt(ss / (replicates - 1) / replicates);
  }
  return est;
}

}  // namespace divlab
