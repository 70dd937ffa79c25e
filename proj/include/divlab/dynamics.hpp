#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "divlab/graph.hpp"
#include "divlab/rng.hpp"

namespace divlab {

using Task = std::uint8_t;  // 1 or 2
using Configuration = std::vector<Task>;

inline Task other_task(Task t) { return static_cast<Task>(3 - t); }

// Model parameters: task switching costs 0 < c1 <= c2 and the defection
// probability epsilon in [0,1].  A vertex performing task i flips at rate
//   c_i * (epsilon + (1 - epsilon) * (1 - f_j)),
// where f_j is the fraction of its neighbors performing the opposite task j
// (zero for isolated vertices, which therefore flip at rate c_i exactly).
struct Params {
  double c1 = 1.0;
  double c2 = 1.0;
  double epsilon = 0.0;
  void validate() const;  // throws std::invalid_argument
};

// fraction of x's neighbors performing `task`; 0 when deg(x) == 0
double neighbor_fraction(const Graph& g, const Configuration& c, int x, Task task);

// switching rate of vertex x, recomputed from scratch
double flip_rate(const Graph& g, const Configuration& c, const Params& p, int x);

// the same rate from x's task and its task-1 neighbor count; the engines keep
// these integer counts incrementally and must agree bit-for-bit with
// flip_rate(), so both funnel through this one formula
double flip_rate_from_count(Task task, int n1_neighbors, int degree, const Params& p);

// sum of all flip rates; exactly zero iff the configuration is absorbing
double total_rate(const Graph& g, const Configuration& c, const Params& p);

struct InitialLaw {
  enum class Kind { All1, All2, Bernoulli, Explicit };
  Kind kind = Kind::All1;
  double p = 0.5;  // probability of task 1 under Bernoulli
  Configuration explicit_config;

  static InitialLaw all1() { return {}; }
  static InitialLaw all2() { return {Kind::All2, 0.0, {}}; }
  static InitialLaw bernoulli(double p) { return {Kind::Bernoulli, p, {}}; }
  static InitialLaw fixed(Configuration c) { return {Kind::Explicit, 0.0, std::move(c)}; }
  // "all1" | "all2" | "bernoulli:p"
  static InitialLaw parse(std::string_view text);
  std::string describe() const;
};

Configuration draw_initial(const InitialLaw& law, int n, Rng& rng);

// the two checkerboard configurations of a bipartition: xi_plus performs
// task 1 on side 1, xi_minus the opposite
Configuration xi_plus(const Bipartition& bp);
Configuration xi_minus(const Bipartition& bp);

}  // namespace divlab
