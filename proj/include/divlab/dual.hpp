#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/engine.hpp"
#include "divlab/prefix_tree.hpp"
#include "divlab/rng.hpp"

namespace divlab {

// Edge process on an even ring of N sites.  Edge k joins vertices k and
// k+1 mod N and holds 0 (endpoints disagree) or the shared task 1/2 of its
// endpoints ("particle of type i").  On a ring the particle count is even,
// and together with one reference task (vertex 0) the edge state determines
// the vertex configuration.
struct EdgeConfiguration {
  std::vector<std::uint8_t> state;

  int particle_count() const {
    int c = 0;
    for (auto s : state) c += (s != 0);
    return c;
  }
};

// requires a cycle graph of even size >= 4; enforced by callers below
EdgeConfiguration project_to_edges(const Configuration& tasks);

// vertex tasks reconstructed from (edge state, task of vertex 0)
Configuration tasks_from_edges(const EdgeConfiguration& zeta, Task tau0);

// Shadow edge state evolved purely by edge-level rules from the graphical
// marks: particles jump across the vertex an arrow points to (changing
// type), same-edge arrivals annihilate, and spontaneous dots/crosses flip
// both incident edges (pair birth, pair death, or a jump).  Only the
// reference task rides along; tasks are reconstructed on demand.
class DualShadow {
 public:
  DualShadow(EdgeConfiguration zeta, Task tau0);

  void apply(const Event& mark);  // a graphical-engine mark on the same ring

  const EdgeConfiguration& edges() const { return zeta_; }
  Task tau0() const { return tau0_; }
  int particle_count() const { return count_; }
  Task task_at(int x) const;

 private:
  void flip_incident(int x);  // dot/cross action
  EdgeConfiguration zeta_;
  Task tau0_;
  int n_;
  int count_;
};

struct CouplingReport {
  bool ok = true;
  std::uint64_t events = 0;
  double first_mismatch_time = -1.0;
  std::string detail;
};

// Runs the graphical engine on cycle(n) and the edge rules side by side,
// recomputing the projection after every applied mark.  Any disagreement is
// reported with the offending mark.
CouplingReport couple_and_verify(int n, const Params& p, const InitialLaw& init,
                                 const RunBudget& budget, std::uint64_t seed);

enum class DualEventKind : std::uint8_t { JumpLeft, JumpRight, BirthPair, Annihilation };

struct DualEvent {
  double time = 0;
  std::int32_t edge = -1;
  DualEventKind kind = DualEventKind::JumpLeft;
};

// Event-driven simulation of the edge process itself.  Type-i particles jump
// at rate (1-eps) c_i, left or right with probability 1/2, changing type at
// every jump; jumps onto an occupied edge annihilate both particles.  Each
// vertex toggles spontaneously at rate eps c_task, flipping both incident
// edges.  At eps == 0 this is a system of annihilating random walks and the
// engine reports extinction exactly (total rate hits zero).
class NativeDualEngine {
 public:
  NativeDualEngine(int n, const Params& p, EdgeConfiguration zeta, Task tau0, Rng rng);

  StepOutcome step(double max_time, DualEvent& ev);

  double time() const { return t_; }
  std::uint64_t steps() const { return steps_; }
  int particle_count() const { return count_; }
  const EdgeConfiguration& edges() const { return zeta_; }
  Task task_at(int x) const { return tasks_[x]; }

 private:
  void set_edge_rate(int e);
  void set_vertex_rate(int x);

  Params p_;
  int n_;
  EdgeConfiguration zeta_;
  Configuration tasks_;
  RateTree tree_;  // entities: n_ edges then n_ vertices
  Rng rng_;
  double t_ = 0;
  std::uint64_t steps_ = 0;
  int count_ = 0;
};

struct DualRunStats {
  std::uint64_t events = 0;
  std::uint64_t births = 0;
  std::uint64_t annihilations = 0;
  std::uint64_t jumps_left = 0;
  std::uint64_t jumps_right = 0;
  double final_time = 0;
  int final_count = 0;
  bool extinct = false;
  double extinction_time = -1.0;
};

// budget may be unbounded when eps == 0 (extinction terminates the run)
DualRunStats simulate_dual_native(int n, const Params& p, EdgeConfiguration zeta, Task tau0,
                                  const RunBudget& budget, std::uint64_t seed,
                                  std::vector<DualEvent>* trajectory = nullptr);

struct AgreementEstimate {
  double density = 0;  // time-space average of agreeing-edge fraction, post burn-in
  double se = 0;       // across replicates
  int replicates = 0;
  double burnin = 0;
};

// long-run agreeing-edge density on cycle(n) from Bernoulli(p) starts;
// burn-in is the first half of the horizon
AgreementEstimate agreement_probability(int n, const Params& p, double bernoulli_p, double horizon,
                                        int replicates, std::uint64_t seed);

}  // namespace divlab
