#include "divlab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace divlab {

BirthDeathChain build_birth_death(int n, const Params& p) {
  p.validate();
  if (n < 2) throw std::invalid_argument("birth-death: need N >= 2");
  BirthDeathChain chain;
  chain.n = n;
  chain.params = p;
  chain.beta.resize(n + 1);
  chain.delta.resize(n + 1);
  const double nm1 = static_cast<double>(n - 1);
  for (int j = 0; j <= n; ++j) {
    chain.beta[j] = p.c2 * (n - j) * (p.epsilon + (1.0 - p.epsilon) * (n - j - 1) / nm1);
    chain.delta[j] = p.c1 * j * (p.epsilon + (1.0 - p.epsilon) * (j - 1) / nm1);
  }
  chain.beta[n] = 0.0;
  chain.delta[0] = 0.0;
  return chain;
}

std::vector<std::pair<int, int>> closed_classes(const BirthDeathChain& chain) {
  const int n = chain.n;
  // communicating classes of a birth-death chain are maximal intervals
  // linked by two-way transitions
  std::vector<std::pair<int, int>> classes;
  int a = 0;
  for (int j = 0; j <= n; ++j) {
    const bool linked_up = j < n && chain.beta[j] > 0.0 && chain.delta[j + 1] > 0.0;
    if (!linked_up) {
      classes.emplace_back(a, j);
      a = j + 1;
    }
  }
  std::vector<std::pair<int, int>> closed;
  for (auto [lo, hi] : classes) {
    const bool escapes_down = chain.delta[lo] > 0.0;
    const bool escapes_up = chain.beta[hi] > 0.0;
    if (!escapes_down && !escapes_up) closed.emplace_back(lo, hi);
  }
  return closed;
}

std::vector<double> stationary(const BirthDeathChain& chain) {
  const int n = chain.n;
  for (int j = 0; j < n; ++j) {
    if (!(chain.beta[j] > 0.0) || !(chain.delta[j + 1] > 0.0)) {
      std::string msg = "stationary: chain is reducible; closed classes:";
      for (auto [lo, hi] : closed_classes(chain))
        msg += " {" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
      throw std::domain_error(msg);
    }
  }
  // Detailed-balance product w_j = prod beta_{k-1}/delta_k, kept as a
  // mantissa in [1/2, 1) with a separate power-of-two exponent so the range
  // never over- or underflows.  Staying in linear space keeps each adjacent
  // ratio w_{j+1}/w_j exact to a couple of roundings, which a log-exp round
  // trip would smear by ~|log w| ulps.
  std::vector<double> mant(n + 1);
  std::vector<long> ex(n + 1, 0);
  int k = 0;
  mant[0] = std::frexp(1.0, &k);
  ex[0] = k;
  for (int j = 1; j <= n; ++j) {
    mant[j] = std::frexp(mant[j - 1] * (chain.beta[j - 1] / chain.delta[j]), &k);
    ex[j] = ex[j - 1] + k;
  }
  const long emax = *std::max_element(ex.begin(), ex.end());
  std::vector<double> pi(n + 1);
  double z = 0.0;
  for (int j = 0; j <= n; ++j)
    z += (pi[j] = std::ldexp(mant[j], static_cast<int>(std::max(ex[j] - emax, -2000L))));
  for (auto& w : pi) w /= z;
  return pi;
}

double stationary_mean_fraction(const BirthDeathChain& chain) {
  const auto pi = stationary(chain);
  double mean = 0.0;
  for (int j = 0; j <= chain.n; ++j) mean += pi[j] * j;
  return mean / chain.n;
}

double b_of(double epsilon, int n) {
  if (n < 2) throw std::invalid_argument("b_of: need N >= 2");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("b_of: epsilon outside [0,1]");
  return (1.0 - epsilon) / (1.0 - 1.0 / n);
}

double u1_bar(double b, double c1, double c2) {
  if (!(b > 0.0 && b <= 2.0)) throw std::domain_error("u1_bar: B must lie in (0,2]; use v1_bar for the B -> 0 limit");
  if (!(c1 > 0.0) || !(c2 > 0.0) || c1 > c2) throw std::invalid_argument("u1_bar: need 0 < c1 <= c2");
  const double s = c1 + c2;
  const double d = c2 - c1;
  const double w = d * d * b * (2.0 - b);
  return 0.5 + d * (2.0 - b) / (2.0 * (s + std::sqrt(s * s - w)));
}

FixedPointReport fixed_point_report(double b, double c1, double c2) {
  FixedPointReport r;
  r.b = b;
  r.c1 = c1;
  r.c2 = c2;
  r.q0 = c2;
  r.q1 = -(c1 + c2) + b * (c1 - c2);
  r.q2 = -b * (c1 - c2);
  r.discriminant = (b - 1.0) * (b - 1.0) * (c1 - c2) * (c1 - c2) + 4.0 * c1 * c2;
  r.u1 = u1_bar(b, c1, c2);
  r.v1 = v1_bar(c1, c2);
  return r;
}

double phi_limit_complete(const Params& p, int n) {
  p.validate();
  const double b = b_of(p.epsilon, n);
  return b == 0.0 ? v1_bar(p.c1, p.c2) : u1_bar(b, p.c1, p.c2);
}

MonotoneReport verify_monotone(double c1, double c2, const std::vector<double>& b_grid) {
  MonotoneReport r;
  r.degenerate = c1 == c2;
  double prev = 0.0;
  bool first = true;
  bool decreasing = true;
  r.max_step = -1e300;
  for (double b : b_grid) {
    const double u = u1_bar(b, c1, c2);
    if (!first) {
      const double step = u - prev;
      r.max_step = std::max(r.max_step, step);
      if (!(step < 0.0)) decreasing = false;
    }
    prev = u;
    first = false;
  }
  r.strictly_decreasing = !r.degenerate && decreasing;
  const double u_at_1 = u1_bar(1.0, c1, c2);
  const double u_at_2 = u1_bar(2.0, c1, c2);
  r.ordering_ok = r.degenerate ? u_at_2 == 0.5
                               : (v1_bar(c1, c2) > u_at_1 && u_at_1 > u_at_2 && u_at_2 == 0.5);
  return r;
}

namespace {

bool config_absorbing(const Graph& g, const Configuration& c) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) == 0) return false;  // isolated vertices always switch
    for (int y : g.neighbors(x))
      if (c[y] == c[x]) return false;
  }
  return true;
}

}  // namespace

std::vector<Configuration> absorbing_states(const Graph& g, const Params& p) {
  p.validate();
  if (p.epsilon != 0.0) throw std::domain_error("absorbing_states: no absorbing states exist for epsilon > 0");
  const int n = g.vertex_count();
  std::vector<Configuration> out;

  if (n <= 20) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Configuration c(n);
      for (int v = 0; v < n; ++v) c[v] = (mask >> v) & 1 ? 2 : 1;
      if (config_absorbing(g, c)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // absorbing <=> proper two-coloring with tasks as colors: enumerate the
  // two orientations of each component of a bipartite graph
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) return out;
  const auto bp = find_bipartition(g);
  if (!bp) return out;
  std::vector<int> component(n, -1);
  std::vector<int> roots;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    const int id = static_cast<int>(roots.size());
    roots.push_back(start);
    std::vector<int> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (component[u] == -1) {
          component[u] = id;
          stack.push_back(u);
        }
    }
  }
  if (roots.size() > 20) throw std::invalid_argument("absorbing_states: too many components to enumerate");
  for (std::uint32_t mask = 0; mask < (1u << roots.size()); ++mask) {
    Configuration c(n);
    for (int v = 0; v < n; ++v) {
      const bool flipped = (mask >> component[v]) & 1;
      const bool side1 = bp->side[v] == 1;
      c[v] = (side1 != flipped) ? 1 : 2;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace divlab
