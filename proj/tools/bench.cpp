// Benchmark: serial replicate loop vs the OpenMP worker pool, same tasks.
//
//   ./bench [N] [replicates] [updates-per-replicate]
//
// Prints wall-clock time for both paths and cross-checks that the pooled
// results are bit-identical to the serial reference.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "divlab/batch.hpp"
#include "divlab/rng.hpp"

using namespace divlab;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 500;
  const int replicates = argc > 2 ? std::atoi(argv[2]) : 32;
  const std::uint64_t updates = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 200000;

  const Graph g = Graph::complete(n);
  const Params params{1.0, 2.0, 0.1};

  std::vector<ReplicateTask> tasks(replicates);
  for (int r = 0; r < replicates; ++r) {
    auto& t = tasks[r];
    t.graph = &g;
    t.graph_spec = "complete:" + std::to_string(n);
    t.params = params;
    t.init = InitialLaw::parse("bernoulli:0.5");
    t.budget = RunBudget::updates(updates);
    t.stream_seed = derive_stream_seed(12345, r);
  }

  auto t0 = Clock::now();
  const auto serial = run_batch_serial(tasks);
  const double serial_s = seconds_since(t0);

  t0 = Clock::now();
  const auto pooled = run_batch_parallel(tasks);
  const double pooled_s = seconds_since(t0);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  bool identical = serial.size() == pooled.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].phi == pooled[i].phi && serial[i].updates == pooled[i].updates &&
                serial[i].sim_time == pooled[i].sim_time;
  }

  std::printf("complete:%d, %d replicates x %llu updates\n", n, replicates,
              static_cast<unsigned long long>(updates));
  std::printf("serial reference: %8.3f s\n", serial_s);
  std::printf("OpenMP pool (%2d): %8.3f s  (speedup %.2fx)\n", threads, pooled_s,
              serial_s / pooled_s);
  std::printf("results bit-identical: %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
