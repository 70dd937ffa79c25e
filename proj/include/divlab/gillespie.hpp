#pragma once

#include "divlab/engine.hpp"
#include "divlab/prefix_tree.hpp"
#include "divlab/rng.hpp"

namespace divlab {

// Exact continuous-time simulation: exponential waiting time at the total
// rate, then a flip vertex drawn with probability proportional to its rate
// from a partial-sum tree.  Per-vertex task-1 neighbor counts are integers
// maintained exactly, so rate-table entries always equal flip_rate()
// recomputed from scratch, and a zero total identifies absorbing
// configurations without tolerance.
class GillespieEngine {
 public:
  GillespieEngine(const Graph& g, const Params& p, Configuration initial, Rng rng);

  StepOutcome step(double max_time, Event& ev);

  double time() const { return t_; }
  std::uint64_t steps() const { return steps_; }
  const Configuration& config() const { return tasks_; }
  double total_rate() const { return tree_.total(); }
  double rate_of(int x) const { return tree_.leaf(x); }

  // recount neighbor tallies and rebuild the rate tree from scratch
  void refresh();

  static constexpr std::uint64_t kRefreshInterval = 1ull << 20;

 private:
  void apply_flip(int x);

  const Graph* g_;
  Params p_;
  Configuration tasks_;
  std::vector<std::int32_t> n1_;  // task-1 neighbors of each vertex
  RateTree tree_;
  Rng rng_;
  double t_ = 0;
  std::uint64_t steps_ = 0;
  int bulk_threshold_;  // switch from per-leaf updates to a full rebuild
};

}  // namespace divlab
