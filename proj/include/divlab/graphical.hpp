#pragma once

#include <queue>

#include "divlab/engine.hpp"
#include "divlab/rng.hpp"

namespace divlab {

// Rolling record of applied marks, oldest first, bounded by capacity.
// coverage_start() is the instant from which the window is complete: marks
// before it may have been evicted.
class EventLog {
 public:
  explicit EventLog(std::size_t capacity) : capacity_(capacity), buf_(capacity) {}

  void push(const Event& ev) {
    buf_[head_] = ev;
    head_ = (head_ + 1) % capacity_;
    if (count_ < capacity_) {
      ++count_;
    } else {
      coverage_ = buf_[head_].time;  // oldest retained entry
    }
  }

  std::size_t size() const { return count_; }
  double coverage_start() const { return coverage_; }
  // i = 0 is the most recent entry
  const Event& from_newest(std::size_t i) const {
    return buf_[(head_ + capacity_ - 1 - i) % capacity_];
  }

 private:
  std::size_t capacity_;
  std::vector<Event> buf_;
  std::size_t head_ = 0;
  std::size_t count_ = 0;
  double coverage_ = 0.0;
};

// Harris-style simulation driven by independent Poisson mark streams:
//   solid arrow y->x   rate (1-eps) c1 / deg(x)   x adopts the opposite of y
//   dashed arrow y->x  rate (1-eps)(c2-c1)/deg(x) same, only if x has task 2
//   dot at x           rate eps c1                toggle x
//   cross at x         rate eps (c2-c1)           toggle x only if task 2
// Per-edge rates carry the 1/deg neighbor choice, which is what makes the
// total flip rate at a vertex match the generator.  Isolated vertices get
// their arrow mass folded into dot/cross streams so they still switch at
// rate c_i.  With c1 == c2 no dashed or cross stream exists at all.  Every
// applied mark counts as an update even when it changes nothing.
class GraphicalEngine {
 public:
  GraphicalEngine(const Graph& g, const Params& p, Configuration initial, Rng rng,
                  EventLog* log = nullptr);

  StepOutcome step(double max_time, Event& ev);  // never Absorbed

  double time() const { return t_; }
  std::uint64_t steps() const { return steps_; }
  const Configuration& config() const { return tasks_; }
  std::size_t stream_count() const { return streams_.size(); }

  // mark semantics on a bare configuration; returns (old, new) task of x
  static std::pair<Task, Task> apply_mark(Configuration& c, MarkKind kind, int x, int y);

 private:
  struct Stream {
    MarkKind kind;
    std::int32_t target;
    std::int32_t source;  // -1 for vertex streams
    double rate;
  };
  using QueueEntry = std::pair<double, std::uint32_t>;  // (next time, stream)

  const Graph* g_;
  Params p_;
  Configuration tasks_;
  Rng rng_;
  std::vector<Stream> streams_;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;
  EventLog* log_;
  double t_ = 0;
  std::uint64_t steps_ = 0;
};

// Interval of sites around the window {x, x+1} whose state at time t - s can
// propagate along arrows to (x, t) or (x+1, t), per slab of constant extent.
// Intervals live on the universal cover of the ring: l and r are unwrapped
// integers with r - l + 1 capped at the ring size.
struct InfluenceSlab {
  double t_lo = 0, t_hi = 0;
  long l = 0, r = 0;
};

struct InfluenceSet {
  std::vector<InfluenceSlab> slabs;  // newest (shallowest) first
  long width_at_depth = 0;           // r - l + 1 of the deepest slab
};

// Scans the log backwards over [t-T, t].  Throws SimulationError if the log
// does not cover the window.
InfluenceSet influence_set(const EventLog& log, int ring_n, int x, double t, double horizon);

}  // namespace divlab
