#include "divlab/dynamics.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace divlab {

void Params::validate() const {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::invalid_argument("params: costs must be positive");
  if (c1 > c2) throw std::invalid_argument("params: convention requires c1 <= c2 (task 1 is the cheaper task)");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("params: epsilon must lie in [0,1]");
}

double neighbor_fraction(const Graph& g, const Configuration& c, int x, Task task) {
  const int deg = g.degree(x);
  if (deg == 0) return 0.0;
  int count = 0;
  for (int y : g.neighbors(x)) count += (c[y] == task);
  return static_cast<double>(count) / static_cast<double>(deg);
}

double flip_rate_from_count(Task task, int n1_neighbors, int degree, const Params& p) {
  const double cost = task == 1 ? p.c1 : p.c2;
  if (degree == 0) return cost;
  // fraction of neighbors performing the opposite task, as an exact ratio of
  // integer counts so that 1 - f is exactly zero in absorbing configurations
  const int opp = task == 1 ? degree - n1_neighbors : n1_neighbors;
  const double f = static_cast<double>(opp) / static_cast<double>(degree);
  return cost * (p.epsilon + (1.0 - p.epsilon) * (1.0 - f));
}

double flip_rate(const Graph& g, const Configuration& c, const Params& p, int x) {
  int n1 = 0;
  for (int y : g.neighbors(x)) n1 += (c[y] == 1);
  return flip_rate_from_count(c[x], n1, g.degree(x), p);
}

double total_rate(const Graph& g, const Configuration& c, const Params& p) {
  double sum = 0.0;
  for (int x = 0; x < g.vertex_count(); ++x) sum += flip_rate(g, c, p, x);
  return sum;
}

InitialLaw InitialLaw::parse(std::string_view text) {
  if (text == "all1") return all1();
  if (text == "all2") return all2();
  constexpr std::string_view prefix = "bernoulli:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto num = text.substr(prefix.size());
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc{} || ptr != num.data() + num.size() || p < 0.0 || p > 1.0)
      throw std::invalid_argument("init: bad bernoulli probability '" + std::string(num) + "'");
    return bernoulli(p);
  }
  throw std::invalid_argument("init: unknown law '" + std::string(text) + "' (want all1, all2 or bernoulli:p)");
}

std::string InitialLaw::describe() const {
  switch (kind) {
    case Kind::All1: return "all1";
    case Kind::All2: return "all2";
    case Kind::Bernoulli: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "bernoulli:%g", p);
      return buf;
    }
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

Configuration draw_initial(const InitialLaw& law, int n, Rng& rng) {
  Configuration c(n, 1);
  switch (law.kind) {
    case InitialLaw::Kind::All1:
      break;
    case InitialLaw::Kind::All2:
      c.assign(n, 2);
      break;
    case InitialLaw::Kind::Bernoulli:
      for (auto& t : c) t = rng.bernoulli(law.p) ? 1 : 2;
      break;
    case InitialLaw::Kind::Explicit:
      if (static_cast<int>(law.explicit_config.size()) != n)
        throw std::invalid_argument("init: explicit configuration has wrong size");
      c = law.explicit_config;
      break;
  }
  return c;
}

Configuration xi_plus(const Bipartition& bp) {
  Configuration c(bp.side.size());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = bp.side[v] == 1 ? 1 : 2;
  return c;
}

Configuration xi_minus(const Bipartition& bp) {
  Configuration c(bp.side.size());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = bp.side[v] == 1 ? 2 : 1;
  return c;
}

}  // namespace divlab
