#pragma once

#include <cstdint>

#include "divlab/dynamics.hpp"
#include "divlab/graph.hpp"

namespace divlab {

// Monte Carlo estimates of the transition times between the disordered bulk
// and the two checkerboard configurations on a connected bipartite graph:
// T_in from an `init` start until the state hits {xi_plus, xi_minus}, T_out
// from a checkerboard until the first flip (replicates alternate between
// xi_plus and xi_minus starts).  T_out requires eps > 0; its exact mean is
// 1/(eps (N1 c1 + N2 c2)).
struct HittingEstimate {
  double t_in_mean = 0;
  double t_in_se = 0;
  double t_out_mean = 0;
  double t_out_se = 0;
  int replicates = 0;
};

HittingEstimate estimate_hitting_times(const Graph& g, const Params& p, const InitialLaw& init,
                                       int replicates, std::uint64_t seed);

}  // namespace divlab
