#include "divlab/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace divlab {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

SweepRange SweepRange::parse(const std::string& text) {
  SweepRange r;
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("sweep: want start:end:steps, got '" + text + "'");
  const auto num = [&](std::size_t lo, std::size_t hi, auto& out) {
    const char* b = text.data() + lo;
    const char* e = text.data() + hi;
    const auto [p, ec] = std::from_chars(b, e, out);
    if (ec != std::errc{} || p != e)
      throw std::invalid_argument("sweep: bad number '" + text.substr(lo, hi - lo) + "'");
  };
  num(0, first, r.start);
  num(first + 1, second, r.end);
  num(second + 1, text.size(), r.steps);
  if (r.steps < 1) throw std::invalid_argument("sweep: need steps >= 1");
  if (r.steps == 1 && r.start != r.end)
    throw std::invalid_argument("sweep: one step needs start == end");
  return r;
}

std::vector<double> SweepRange::values() const {
  std::vector<double> v(steps);
  if (steps == 1) {
    v[0] = start;
    return v;
  }
  for (int i = 0; i < steps; ++i)
    v[i] = start + (end - start) * static_cast<double>(i) / (steps - 1);
  v.back() = end;  // exact endpoint
  return v;
}

const char* const kRunSummaryHeader =
    "graph_spec,N,c1,c2,epsilon,engine,seed,updates,sim_time,phi,"
    "residence_xi_plus,residence_xi_minus,absorbed";

void write_summary_row(const RunSummary& s, bool with_postburn, std::ostream& os) {
  os << csv_field(s.graph_spec) << ',' << s.n << ',' << format_double(s.c1) << ','
     << format_double(s.c2) << ',' << format_double(s.epsilon) << ',' << s.engine << ','
     << s.seed << ',' << s.updates << ',' << format_double(s.sim_time) << ','
     << format_double(s.phi) << ',' << format_double(s.residence_xi_plus) << ','
     << format_double(s.residence_xi_minus) << ',' << (s.absorbed ? 1 : 0);
  if (with_postburn) os << ',' << format_double(s.phi_postburn);
  os << '\n';
}

void run_sweep(const ExperimentSpec& spec, std::ostream& os) {
  const Graph graph = parse_graph_spec(spec.graph_spec);
  const auto bp = find_bipartition(graph);
  if (spec.replicates < 1) throw std::invalid_argument("sweep: need at least one replicate");
  if (spec.epsilons.empty()) throw std::invalid_argument("sweep: no epsilon values");

  std::vector<ReplicateTask> tasks;
  tasks.reserve(spec.epsilons.size() * spec.replicates);
  std::uint64_t index = 0;
  for (double eps : spec.epsilons) {
    Params p{spec.c1, spec.c2, eps};
    p.validate();
    for (int r = 0; r < spec.replicates; ++r) {
      ReplicateTask t;
      t.graph = &graph;
      t.bipartition = bp ? &*bp : nullptr;
      t.graph_spec = spec.graph_spec;
      t.params = p;
      t.init = spec.init;
      t.engine = spec.engine;
      t.budget = spec.budget;
      t.burnin = spec.burnin;
      t.track_agreement = spec.track_agreement;
      t.stream_seed = derive_stream_seed(spec.seed, index++);
      tasks.push_back(std::move(t));
    }
  }

  const auto results = spec.parallel ? run_batch_parallel(tasks) : run_batch_serial(tasks);

  const bool with_postburn = spec.burnin > 0;
  os << "# divlab simulate graph=" << spec.graph_spec << " engine=" << engine_name(spec.engine)
     << " init=" << spec.init.describe() << " replicates=" << spec.replicates
     << " seed=" << spec.seed << " burnin=" << format_double(spec.burnin) << '\n';
  os << kRunSummaryHeader;
  if (with_postburn) os << ",phi_postburn";
  os << '\n';
  for (const auto& s : results) write_summary_row(s, with_postburn, os);
}

void run_exact_report(const std::vector<int>& ns, double c1, double c2,
                      const std::vector<double>& epsilons, std::ostream& os) {
  if (ns.empty() || epsilons.empty()) throw std::invalid_argument("exact: empty N or epsilon list");
  for (double eps : epsilons) {
    Params{c1, c2, eps}.validate();
    if (!(eps > 0.0)) throw std::invalid_argument("exact: stationary means need epsilon > 0");
  }
  for (int n : ns)
    if (n < 2) throw std::invalid_argument("exact: need N >= 2");
  os << "# divlab exact c1=" << format_double(c1) << " c2=" << format_double(c2) << '\n';
  os << "N,c1,c2,epsilon,B,u1_bar,v1_bar,stationary_mean,gap\n";
  for (int n : ns) {
    for (double eps : epsilons) {
      Params p{c1, c2, eps};
      const double b = b_of(eps, n);
      const double u1 = phi_limit_complete(p, n);
      const double mean = stationary_mean_fraction(build_birth_death(n, p));
      os << n << ',' << format_double(c1) << ',' << format_double(c2) << ','
         << format_double(eps) << ',' << format_double(b) << ',' << format_double(u1) << ','
         << format_double(v1_bar(c1, c2)) << ',' << format_double(mean) << ','
         << format_double(std::abs(mean - u1)) << '\n';
    }
  }
}

}  // namespace divlab
