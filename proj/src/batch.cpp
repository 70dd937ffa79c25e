#include "divlab/batch.hpp"

#include <stdexcept>

#include "divlab/gillespie.hpp"
#include "divlab/graphical.hpp"
#include "divlab/rng.hpp"

namespace divlab {

EngineKind parse_engine(const std::string& name) {
  if (name == "gillespie") return EngineKind::Gillespie;
  if (name == "graphical") return EngineKind::Graphical;
  throw std::invalid_argument("engine: unknown engine '" + name + "' (want gillespie or graphical)");
}

std::string engine_name(EngineKind kind) {
  return kind == EngineKind::Gillespie ? "gillespie" : "graphical";
}

RunSummary run_replicate(const ReplicateTask& task) {
  const Graph& g = *task.graph;
  Rng rng(task.stream_seed);
  Configuration start = draw_initial(task.init, g.vertex_count(), rng);
  ObservableAccumulator acc(g, start, task.burnin, task.bipartition, task.track_agreement);
  bool absorbed = false;
  if (task.engine == EngineKind::Gillespie) {
    GillespieEngine eng(g, task.params, std::move(start), rng);
    drive(eng, task.budget, acc, &absorbed);
  } else {
    GraphicalEngine eng(g, task.params, std::move(start), rng);
    drive(eng, task.budget, acc, &absorbed);
  }

  RunSummary s;
  s.graph_spec = task.graph_spec;
  s.n = g.vertex_count();
  s.c1 = task.params.c1;
  s.c2 = task.params.c2;
  s.epsilon = task.params.epsilon;
  s.engine = engine_name(task.engine);
  s.seed = task.stream_seed;
  s.updates = acc.updates();
  s.sim_time = acc.time();
  s.phi = acc.phi();
  s.absorbed = absorbed;
  if (acc.tracks_residence()) {
    s.residence_xi_plus = acc.residence_plus() / (s.sim_time > 0 ? s.sim_time : 1.0);
    s.residence_xi_minus = acc.residence_minus() / (s.sim_time > 0 ? s.sim_time : 1.0);
  } else {
    s.residence_xi_plus = std::numeric_limits<double>::quiet_NaN();
    s.residence_xi_minus = std::numeric_limits<double>::quiet_NaN();
  }
  if (task.burnin > 0) s.phi_postburn = acc.phi_postburn();
  if (acc.tracks_agreement()) {
    s.agreement = acc.agreement_density();
    s.agreement_postburn = acc.agreement_density_postburn();
  }
  return s;
}

std::vector<RunSummary> run_batch_serial(std::span<const ReplicateTask> tasks) {
  std::vector<RunSummary> out(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run_replicate(tasks[i]);
  return out;
}

std::vector<RunSummary> run_batch_parallel(std::span<const ReplicateTask> tasks, int threads) {
  std::vector<RunSummary> out(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
#ifdef _OPENMP
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) out[i] = run_replicate(tasks[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) out[i] = run_replicate(tasks[i]);
  }
#else
  (void)threads;
  for (std::int64_t i = 0; i < count; ++i) out[i] = run_replicate(tasks[i]);
#endif
  return out;
}

}  // namespace divlab
