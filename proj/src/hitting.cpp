#include "divlab/hitting.hpp"

#include <cmath>
#include <stdexcept>

#include "divlab/gillespie.hpp"

namespace divlab {

namespace {

struct Welford {
  double mean = 0, m2 = 0;
  std::int64_t n = 0;
  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }
  double se() const { return n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0; }
};

}  // namespace

HittingEstimate estimate_hitting_times(const Graph& g, const Params& p, const InitialLaw& init,
                                       int replicates, std::uint64_t seed) {
  p.validate();
  if (replicates < 1) throw std::invalid_argument("hitting: need at least one replicate");
  const auto bp = find_bipartition(g);
  if (!bp || !g.is_connected())
    throw std::invalid_argument("hitting: graph must be connected and bipartite");
  if (!(p.epsilon > 0.0)) throw std::invalid_argument("hitting: T_out needs epsilon > 0");
  const Configuration plus = xi_plus(*bp);
  const Configuration minus = xi_minus(*bp);
  const int n = g.vertex_count();

  Welford t_in, t_out;
  constexpr std::uint64_t kMaxEvents = 100'000'000;
  for (int r = 0; r < replicates; ++r) {
    Rng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(r)));
    Configuration start = draw_initial(init, n, rng);
    if (start == plus || start == minus)
      throw std::invalid_argument("hitting: T_in requires a start outside the checkerboards");
    GillespieEngine eng(g, p, start, rng);
    std::uint64_t guard = 0;
    Event ev;
    while (eng.config() != plus && eng.config() != minus) {
      if (eng.step(std::numeric_limits<double>::infinity(), ev) != StepOutcome::Applied)
        throw SimulationError("hitting: absorbed before reaching a checkerboard");
      if (++guard > kMaxEvents) throw SimulationError("hitting: event cap exceeded before T_in");
    }
    t_in.add(eng.time());

    // exit time: the first event out of a checkerboard, alternating sides
    Rng rng_out(derive_stream_seed(seed ^ 0x517cc1b727220a95ull, static_cast<std::uint64_t>(r)));
    GillespieEngine out_eng(g, p, r % 2 == 0 ? plus : minus, rng_out);
    if (out_eng.step(std::numeric_limits<double>::infinity(), ev) != StepOutcome::Applied)
      throw SimulationError("hitting: checkerboard unexpectedly absorbing");
    t_out.add(ev.time);
  }

  HittingEstimate est;
  est.replicates = replicates;
  est.t_in_mean = t_in.mean;
  est.t_in_se = t_in.se();
  est.t_out_mean = t_out.mean;
  est.t_out_se = t_out.se();
  return est;
}

}  // namespace divlab
