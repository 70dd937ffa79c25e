#pragma once

#include <span>
#include <string>
#include <vector>

#include "divlab/engine.hpp"
#include "divlab/graph.hpp"

namespace divlab {

enum class EngineKind { Gillespie, Graphical };

EngineKind parse_engine(const std::string& name);  // "gillespie" | "graphical"
std::string engine_name(EngineKind kind);

// One replicate, fully described.  stream_seed is the replicate's own RNG
// stream, so a batch gives identical results whether it runs serially or on
// the OpenMP pool, in any order.
struct ReplicateTask {
  const Graph* graph = nullptr;
  const Bipartition* bipartition = nullptr;  // optional, enables residence times
  std::string graph_spec;
  Params params;
  InitialLaw init;
  EngineKind engine = EngineKind::Gillespie;
  RunBudget budget;
  double burnin = 0;
  bool track_agreement = false;
  std::uint64_t stream_seed = 0;
};

RunSummary run_replicate(const ReplicateTask& task);

// serial reference implementation
std::vector<RunSummary> run_batch_serial(std::span<const ReplicateTask> tasks);

// OpenMP worker pool; bit-identical to the serial runner
std::vector<RunSummary> run_batch_parallel(std::span<const ReplicateTask> tasks, int threads = 0);

}  // namespace divlab
