#pragma once

#include <string>
#include <vector>

#include "divlab/dynamics.hpp"
#include "divlab/graph.hpp"

namespace divlab {

// On the complete graph K_N the process projects to a birth-death chain on
// the task-1 occupancy j in {0,...,N}:
//   beta_j  = c2 (N-j) (eps + (1-eps)(N-j-1)/(N-1))   (j -> j+1)
//   delta_j = c1  j    (eps + (1-eps)(j-1)/(N-1))      (j -> j-1)
struct BirthDeathChain {
  int n = 0;
  Params params;
  std::vector<double> beta;   // beta[j], j = 0..N (beta[N] == 0)
  std::vector<double> delta;  // delta[j], j = 0..N (delta[0] == 0)
};

BirthDeathChain build_birth_death(int n, const Params& p);  // needs N >= 2

// Stationary distribution via the detailed-balance product
// pi_j / pi_0 = prod_{k=1..j} beta_{k-1}/delta_k, accumulated as a
// mantissa-exponent pair so huge dynamic ranges cost no precision.
// At epsilon == 0 the chain is reducible and is rejected; the diagnostic
// names the closed communicating classes.
std::vector<double> stationary(const BirthDeathChain& chain);

// closed communicating classes as inclusive occupancy intervals, e.g. the
// absorbing middle of the chain at epsilon == 0
std::vector<std::pair<int, int>> closed_classes(const BirthDeathChain& chain);

double stationary_mean_fraction(const BirthDeathChain& chain);  // E[j]/N

// interaction strength entering the mean-field fixed point
double b_of(double epsilon, int n);  // (1 - eps) / (1 - 1/N)

// share of task 1 when choices are blind to neighbors
inline double v1_bar(double c1, double c2) { return c2 / (c1 + c2); }

// Mean-field equilibrium share of task 1 on the complete graph.  Root of
//   Q(u) = c2 - (c1+c2) u + B (c1-c2) u - B (c1-c2) u^2
// in [1/2, 1], evaluated in the rationalized form
//   u1 = 1/2 + (c2-c1)(2-B) / (2 (c1+c2 + sqrt((c1+c2)^2 - (c2-c1)^2 B(2-B))))
// which avoids the cancellation of the textbook quadratic formula and yields
// exactly 1/2 when c1 == c2.  Requires B in (0,2]; the B -> 0 limit is
// v1_bar, exposed separately via phi_limit_complete.
double u1_bar(double b, double c1, double c2);

// quadratic Q and its discriminant, for reporting and tests
struct FixedPointReport {
  double b = 0, c1 = 0, c2 = 0;
  double q0 = 0, q1 = 0, q2 = 0;  // Q(u) = q0 + q1 u + q2 u^2
  double discriminant = 0;        // (B-1)^2 (c1-c2)^2 + 4 c1 c2
  double u1 = 0, v1 = 0;
};
FixedPointReport fixed_point_report(double b, double c1, double c2);

// closed-form long-run task-1 share on K_N, with the epsilon -> 1 endpoint
// handled via v1_bar (where B = 0)
double phi_limit_complete(const Params& p, int n);

struct MonotoneReport {
  bool degenerate = false;           // c1 == c2: curve constant at 1/2
  bool strictly_decreasing = false;  // over the supplied grid
  bool ordering_ok = false;          // v1 > u1(1) > u1(2) == 1/2
  double max_step = 0;               // most positive consecutive difference
};
MonotoneReport verify_monotone(double c1, double c2, const std::vector<double>& b_grid);

// All configurations with every switching rate equal to zero; defined only
// at epsilon == 0.  A graph with an isolated vertex has none.  Uses
// exhaustive search for N <= 20 and per-component two-colorings beyond.
// Results are sorted lexicographically.
std::vector<Configuration> absorbing_states(const Graph& g, const Params& p);

}  // namespace divlab
