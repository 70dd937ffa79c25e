#include "divlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "divlab/dual.hpp"
#include "divlab/hitting.hpp"

namespace divlab {

namespace {

struct SimulateFlags {
  std::string graph;
  double c1 = 1.0, c2 = 1.0;
  std::optional<double> epsilon;
  std::string epsilon_sweep;
  std::optional<std::uint64_t> updates;
  std::optional<double> time;
  double burnin = 0.0;
  std::string engine = "gillespie";
  int replicates = 1;
  std::uint64_t seed = 0;
  std::string init = "all1";
  std::string out;
  bool serial = false;
};

void add_simulate_options(CLI::App& cmd, SimulateFlags& f) {
  cmd.add_option("--graph", f.graph, "graph spec, e.g. complete:1000 or torus2d:32x32")->required();
  cmd.add_option("--c1", f.c1, "cost of task 1 (the cheaper task)");
  cmd.add_option("--c2", f.c2, "cost of task 2");
  auto* eps = cmd.add_option("--epsilon", f.epsilon, "defection probability");
  cmd.add_option("--epsilon-sweep", f.epsilon_sweep, "epsilon grid start:end:steps")->excludes(eps);
  cmd.add_option("--updates", f.updates, "event budget per replicate");
  cmd.add_option("--time", f.time, "time horizon per replicate");
  cmd.add_option("--burnin", f.burnin, "report an additional post-burn-in average from this time");
  cmd.add_option("--engine", f.engine, "gillespie or graphical");
  cmd.add_option("--replicates", f.replicates, "independent replicates per sweep point");
  cmd.add_option("--seed", f.seed, "base seed; replicate r uses a stream derived from (seed, r)");
  cmd.add_option("--init", f.init, "initial law: all1, all2 or bernoulli:p");
  cmd.add_option("--out", f.out, "output CSV path (default stdout)");
  cmd.add_flag("--serial", f.serial, "run replicates on the serial reference path");
}

ExperimentSpec spec_from_flags(const SimulateFlags& f) {
  ExperimentSpec spec;
  spec.graph_spec = f.graph;
  spec.c1 = f.c1;
  spec.c2 = f.c2;
  if (f.epsilon.has_value()) {
    spec.epsilons = {*f.epsilon};
  } else if (!f.epsilon_sweep.empty()) {
    spec.epsilons = SweepRange::parse(f.epsilon_sweep).values();
  } else {
    throw std::invalid_argument("simulate: need --epsilon or --epsilon-sweep");
  }
  if (f.updates) spec.budget.max_updates = *f.updates;
  if (f.time) spec.budget.max_time = *f.time;
  spec.budget.validate();
  spec.burnin = f.burnin;
  spec.engine = parse_engine(f.engine);
  spec.replicates = f.replicates;
  spec.seed = f.seed;
  spec.init = InitialLaw::parse(f.init);
  spec.parallel = !f.serial;
  Params probe{f.c1, f.c2, spec.epsilons.front()};
  probe.validate();
  return spec;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  return file;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (...) {
      throw std::invalid_argument("bad integer '" + tok + "' in list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int do_simulate(const SimulateFlags& flags) {
  const ExperimentSpec spec = spec_from_flags(flags);
  std::ofstream file;
  run_sweep(spec, open_out(flags.out, file));
  return 0;
}

}  // namespace

ExperimentSpec parse_simulate_args(const std::vector<std::string>& args) {
  CLI::App cmd{"simulate"};
  SimulateFlags flags;
  add_simulate_options(cmd, flags);
  try {
    cmd.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return spec_from_flags(flags);
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"divlab: simulation and exact analysis of a two-task anti-voter process on finite graphs"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "run replicated simulations, one CSV row per run");
  add_simulate_options(*simulate, sim);

  struct {
    std::string n_list;
    double c1 = 1.0, c2 = 1.0;
    std::optional<double> epsilon;
    std::string epsilon_sweep;
    std::string out;
  } ex;
  auto* exact = app.add_subcommand("exact", "closed-form complete-graph report");
  exact->add_option("--N", ex.n_list, "comma-separated graph sizes, e.g. 2,8,1000")->required();
  exact->add_option("--c1", ex.c1, "cost of task 1");
  exact->add_option("--c2", ex.c2, "cost of task 2");
  auto* exact_eps = exact->add_option("--epsilon", ex.epsilon, "defection probability (> 0)");
  exact->add_option("--epsilon-sweep", ex.epsilon_sweep, "epsilon grid start:end:steps")->excludes(exact_eps);
  exact->add_option("--out", ex.out, "output CSV path (default stdout)");

  struct {
    int n = 0;
    double c1 = 1.0, c2 = 1.0, epsilon = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> updates;
    std::optional<double> time;
    std::string init = "bernoulli:0.5";
    int replicates = 8;
    double p = 0.5;
    bool verify = false, native = false, agreement = false;
    std::string out;
  } du;
  auto* dual = app.add_subcommand("dual", "edge-particle process on an even ring");
  dual->add_option("--n", du.n, "ring size (even, >= 4)")->required();
  dual->add_option("--c1", du.c1, "cost of task 1");
  dual->add_option("--c2", du.c2, "cost of task 2");
  dual->add_option("--epsilon", du.epsilon, "defection probability");
  dual->add_option("--seed", du.seed, "base seed");
  dual->add_option("--updates", du.updates, "event budget");
  dual->add_option("--time", du.time, "time horizon");
  dual->add_option("--init", du.init, "initial vertex law for coupling/native runs");
  dual->add_option("--replicates", du.replicates, "replicates for --agreement");
  dual->add_option("--p", du.p, "Bernoulli parameter for --agreement starts");
  dual->add_flag("--verify-coupling", du.verify, "check the edge rules against the projected process");
  dual->add_flag("--native", du.native, "simulate the edge process directly");
  dual->add_flag("--agreement", du.agreement, "estimate the long-run agreeing-edge density");
  dual->add_option("--out", du.out, "output CSV path (default stdout)");

  struct {
    std::string graph;
    double c1 = 1.0, c2 = 1.0, epsilon = 0.0;
    int replicates = 100;
    std::uint64_t seed = 0;
    std::string init = "all1";
    std::string out;
  } hit;
  auto* hitting = app.add_subcommand("hitting", "transition times between bulk and checkerboards");
  hitting->add_option("--graph", hit.graph, "graph spec (connected bipartite)")->required();
  hitting->add_option("--c1", hit.c1, "cost of task 1");
  hitting->add_option("--c2", hit.c2, "cost of task 2");
  hitting->add_option("--epsilon", hit.epsilon, "defection probability (> 0)");
  hitting->add_option("--replicates", hit.replicates, "independent replicates");
  hitting->add_option("--seed", hit.seed, "base seed");
  hitting->add_option("--init", hit.init, "initial law for T_in starts");
  hitting->add_option("--out", hit.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (simulate->parsed()) return do_simulate(sim);

    if (exact->parsed()) {
      std::vector<double> eps;
      if (ex.epsilon.has_value())
        eps = {*ex.epsilon};
      else if (!ex.epsilon_sweep.empty())
        eps = SweepRange::parse(ex.epsilon_sweep).values();
      else
        throw std::invalid_argument("exact: need --epsilon or --epsilon-sweep");
      std::ofstream file;
      run_exact_report(parse_int_list(ex.n_list), ex.c1, ex.c2, eps, open_out(ex.out, file));
      return 0;
    }

    if (dual->parsed()) {
      if (int(du.verify) + int(du.native) + int(du.agreement) != 1)
        throw std::invalid_argument("dual: pick exactly one of --verify-coupling, --native, --agreement");
      const Params p{du.c1, du.c2, du.epsilon};
      p.validate();
      std::ofstream file;
      std::ostream& os = open_out(du.out, file);
      RunBudget budget;
      if (du.updates) budget.max_updates = *du.updates;
      if (du.time) budget.max_time = *du.time;
      if (du.verify) {
        budget.validate();
        const auto report = couple_and_verify(du.n, p, InitialLaw::parse(du.init), budget, du.seed);
        os << "# divlab dual verify-coupling ring=" << du.n << '\n';
        os << "n,c1,c2,epsilon,seed,events,ok,first_mismatch_time,detail\n";
        os << du.n << ',' << format_double(du.c1) << ',' << format_double(du.c2) << ','
           << format_double(du.epsilon) << ',' << du.seed << ',' << report.events << ','
           << (report.ok ? 1 : 0) << ',' << format_double(report.first_mismatch_time) << ','
           << csv_field(report.detail) << '\n';
        return report.ok ? 0 : 3;
      }
      if (du.native) {
        if (p.epsilon > 0.0) budget.validate();  // eps == 0 runs until extinction
        Rng rng(du.seed);
        const Configuration start = draw_initial(InitialLaw::parse(du.init), du.n, rng);
        const auto stats = simulate_dual_native(du.n, p, project_to_edges(start), start[0],
                                                budget, derive_stream_seed(du.seed, 1));
        os << "# divlab dual native ring=" << du.n << '\n';
        os << "n,c1,c2,epsilon,seed,events,births,annihilations,jumps_left,jumps_right,"
              "final_time,final_count,extinct,extinction_time\n";
        os << du.n << ',' << format_double(du.c1) << ',' << format_double(du.c2) << ','
           << format_double(du.epsilon) << ',' << du.seed << ',' << stats.events << ','
           << stats.births << ',' << stats.annihilations << ',' << stats.jumps_left << ','
           << stats.jumps_right << ',' << format_double(stats.final_time) << ','
           << stats.final_count << ',' << (stats.extinct ? 1 : 0) << ','
           << format_double(stats.extinction_time) << '\n';
        return 0;
      }
      if (!du.time) throw std::invalid_argument("dual: --agreement needs a --time horizon");
      const auto est = agreement_probability(du.n, p, du.p, *du.time, du.replicates, du.seed);
      os << "# divlab dual agreement ring=" << du.n << '\n';
      os << "n,c1,c2,epsilon,p,horizon,burnin,replicates,density,se\n";
      os << du.n << ',' << format_double(du.c1) << ',' << format_double(du.c2) << ','
         << format_double(du.epsilon) << ',' << format_double(du.p) << ','
         << format_double(*du.time) << ',' << format_double(est.burnin) << ','
         << est.replicates << ',' << format_double(est.density) << ','
         << format_double(est.se) << '\n';
      return 0;
    }

    // hitting
    const Params p{hit.c1, hit.c2, hit.epsilon};
    p.validate();
    const Graph g = parse_graph_spec(hit.graph);
    const auto est = estimate_hitting_times(g, p, InitialLaw::parse(hit.init), hit.replicates, hit.seed);
    std::ofstream file;
    std::ostream& os = open_out(hit.out, file);
    os << "# divlab hitting graph=" << hit.graph << '\n';
    os << "graph_spec,N,c1,c2,epsilon,replicates,seed,t_in_mean,t_in_se,t_out_mean,t_out_se\n";
    os << csv_field(hit.graph) << ',' << g.vertex_count() << ',' << format_double(hit.c1) << ','
       << format_double(hit.c2) << ',' << format_double(hit.epsilon) << ',' << est.replicates
       << ',' << hit.seed << ',' << format_double(est.t_in_mean) << ','
       << format_double(est.t_in_se) << ',' << format_double(est.t_out_mean) << ','
       << format_double(est.t_out_se) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace divlab
