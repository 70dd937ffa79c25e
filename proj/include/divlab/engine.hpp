#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "divlab/dynamics.hpp"
#include "divlab/graph.hpp"

namespace divlab {

// Update events.  Gillespie runs apply only real flips; the graphical engine
// also applies marks that change nothing (a dashed arrow into a task-1
// vertex, say).  Either way one applied event is one "update".
enum class MarkKind : std::uint8_t { Flip, Solid, Dashed, Dot, Cross };

struct Event {
  double time = 0;
  std::int32_t vertex = -1;
  Task old_task = 0;
  Task new_task = 0;
  MarkKind kind = MarkKind::Flip;
  std::int32_t source = -1;  // arrow tail, -1 for vertex marks
};

enum class StepOutcome { Applied, ReachedHorizon, Absorbed };

struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stopping rule: whichever of the event and time budgets is hit first.
struct RunBudget {
  std::uint64_t max_updates = std::numeric_limits<std::uint64_t>::max();
  double max_time = std::numeric_limits<double>::infinity();

  static RunBudget updates(std::uint64_t n) { return {n, std::numeric_limits<double>::infinity()}; }
  static RunBudget time(double t) { return {std::numeric_limits<std::uint64_t>::max(), t}; }
  void validate() const {
    if (max_updates == std::numeric_limits<std::uint64_t>::max() &&
        !(max_time < std::numeric_limits<double>::infinity()))
      throw std::invalid_argument("budget: need a finite --updates or --time bound");
    if (!(max_time >= 0.0)) throw std::invalid_argument("budget: negative horizon");
  }
};

// Piecewise-exact time averages along a trajectory.  X_t (task-1 count) is
// integrated between events, so phi = int X dt / (s N) carries no
// discretization error.  Optional counters: residence time in the two
// checkerboard configurations, the agreeing-edge count, and a post-burn-in
// window for both.
class ObservableAccumulator {
 public:
  ObservableAccumulator(const Graph& g, const Configuration& initial, double burnin = 0.0,
                        const Bipartition* bp = nullptr, bool track_agreement = false);

  void advance_to(double t);
  void apply_event(const Event& ev);  // call after advance_to(ev.time)

  double time() const { return t_; }
  std::uint64_t updates() const { return updates_; }
  std::int64_t task1_count() const { return x1_; }

  double phi() const;           // over [0, t]
  double phi_postburn() const;  // over [burnin, t]
  double residence_plus() const { return res_plus_; }
  double residence_minus() const { return res_minus_; }
  double agreement_density() const;
  double agreement_density_postburn() const;
  bool tracks_residence() const { return track_residence_; }
  bool tracks_agreement() const { return track_agreement_; }
  double burnin() const { return burnin_; }

 private:
  const Graph* g_;
  Configuration tasks_;  // own copy, kept current by apply_event
  double t_ = 0;
  double burnin_ = 0;
  std::uint64_t updates_ = 0;

  std::int64_t x1_ = 0;
  double int_x_ = 0, int_x_post_ = 0;

  bool track_residence_ = false;
  Configuration plus_;
  std::int64_t match_plus_ = 0;
  double res_plus_ = 0, res_minus_ = 0;

  bool track_agreement_ = false;
  std::int64_t agree_edges_ = 0;
  double int_agree_ = 0, int_agree_post_ = 0;
};

// One finished run, serialized by the CLI as a CSV row.
struct RunSummary {
  std::string graph_spec;
  std::int64_t n = 0;
  double c1 = 0, c2 = 0, epsilon = 0;
  std::string engine;
  std::uint64_t seed = 0;
  std::uint64_t updates = 0;
  double sim_time = 0;
  double phi = 0;
  double residence_xi_plus = 0;
  double residence_xi_minus = 0;
  bool absorbed = false;
  // extras beyond the fixed CSV schema
  double phi_postburn = std::numeric_limits<double>::quiet_NaN();
  double agreement = std::numeric_limits<double>::quiet_NaN();
  double agreement_postburn = std::numeric_limits<double>::quiet_NaN();
};

// Drives any engine exposing step(max_time, Event&) until the budget is
// exhausted or the chain absorbs.  On absorption under a time budget the
// frozen tail is integrated analytically up to the horizon.
template <class Engine>
void drive(Engine& eng, const RunBudget& budget, ObservableAccumulator& acc, bool* absorbed = nullptr) {
  budget.validate();
  if (absorbed) *absorbed = false;
  while (acc.updates() < budget.max_updates) {
    Event ev;
    const StepOutcome out = eng.step(budget.max_time, ev);
    if (out == StepOutcome::Applied) {
      acc.advance_to(ev.time);
      acc.apply_event(ev);
    } else if (out == StepOutcome::ReachedHorizon) {
      acc.advance_to(budget.max_time);
      break;
    } else {
      if (absorbed) *absorbed = true;
      if (budget.max_time < std::numeric_limits<double>::infinity()) acc.advance_to(budget.max_time);
      break;
    }
  }
}

}  // namespace divlab
