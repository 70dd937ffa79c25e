// End-to-end checks of the simulator against the model's known limits and
// couplings.  Each numbered block prints one PASS/FAIL line; the exit code is
// the number of failing blocks.  Runs in a few minutes on one core.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "divlab/batch.hpp"
#include "divlab/dual.hpp"
#include "divlab/exact.hpp"
#include "divlab/gillespie.hpp"
#include "divlab/graphical.hpp"

using namespace divlab;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %2d] %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct MeanSe {
  double mean = 0, se = 0;
};

MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe r;
  r.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  if (xs.size() > 1) {
    double ss = 0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.se = std::sqrt(ss / (xs.size() - 1) / xs.size());
  }
  return r;
}

// ---- 1. closed form on the complete graph -------------------------------

void criterion_1() {
  const int n = 1000;
  const Graph g = Graph::complete(n);
  const double c1 = 1, c2 = 2;
  bool pass = true;
  std::string detail;

  std::vector<double> eps_list{0.02, 0.1, 0.3, 0.7, 1.0};
  for (double eps : eps_list) {
    const Params p{c1, c2, eps};
    const double target = phi_limit_complete(p, n);  // v1_bar at the eps = 1 endpoint
    std::vector<ReplicateTask> tasks(3);
    for (int r = 0; r < 3; ++r) {
      tasks[r].graph = &g;
      tasks[r].graph_spec = "complete:1000";
      tasks[r].params = p;
      tasks[r].init = InitialLaw::all1();
      tasks[r].budget = RunBudget::updates(1000000);
      tasks[r].stream_seed = derive_stream_seed(1001, static_cast<std::uint64_t>(eps * 1000) + r);
    }
    const auto results = run_batch_parallel(tasks);
    double mean = 0;
    for (const auto& s : results) mean += s.phi / 3.0;
    const double err = std::abs(mean - target);
    if (err > 0.01) pass = false;
    detail += fmt("eps=%.2f phi=%.4f target=%.4f |d|=%.4f; ", eps, mean, target, err);
  }
  report(1, pass, detail);
}

// ---- 2. stationary distribution vs dense solve --------------------------

std::vector<double> stationary_dense(const BirthDeathChain& chain) {
  const int m = chain.n + 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (int k = 0; k < m; ++k) {
    if (k > 0) a[k][k - 1] = chain.beta[k - 1];
    if (k < m - 1) a[k][k + 1] = chain.delta[k + 1];
    a[k][k] = -(chain.beta[k] + chain.delta[k]);
  }
  for (int k = 0; k < m; ++k) a[m - 1][k] = 1.0;
  a[m - 1][m] = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == col || a[col][col] == 0.0) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> pi(m);
  for (int k = 0; k < m; ++k) pi[k] = a[k][m] / a[k][k];
  return pi;
}

void criterion_2() {
  bool pass = true;
  double worst_solve = 0, worst_balance = 0;
  for (int n = 2; n <= 8; ++n) {
    for (double eps : {0.05, 0.3, 1.0}) {
      for (auto [c1, c2] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {0.2, 3.0}}) {
        const auto chain = build_birth_death(n, {c1, c2, eps});
        const auto fast = stationary(chain);
        const auto slow = stationary_dense(chain);
        double mf = 0, ms = 0;
        for (int j = 0; j <= n; ++j) {
          mf += fast[j] * j;
          ms += slow[j] * j;
          worst_solve = std::max(worst_solve, std::abs(fast[j] - slow[j]));
        }
        worst_solve = std::max(worst_solve, std::abs(mf - ms) / n);
      }
    }
  }
  if (worst_solve > 1e-10) pass = false;

  const auto big = build_birth_death(10000, {1.0, 2.0, 0.1});
  const auto pi = stationary(big);
  for (int j = 0; j < big.n; ++j) {
    const double lhs = pi[j] * big.beta[j];
    const double rhs = pi[j + 1] * big.delta[j + 1];
    if (lhs < 1e-280 && rhs < 1e-280) continue;
    worst_balance = std::max(worst_balance, std::abs(lhs - rhs) / std::max(lhs, rhs));
  }
  if (worst_balance > 1e-12) pass = false;
  report(2, pass, fmt("dense-solve gap=%.2e (<=1e-10), detailed balance N=10^4 rel=%.2e (<=1e-12)",
                      worst_solve, worst_balance));
}

// ---- 3. special values and monotonicity of the equilibrium share --------

void criterion_3() {
  bool pass = true;
  double worst = 0;
  for (auto [c1, c2] : {std::pair{1.0, 2.0}, {1.0, 9.0}, {0.4, 0.9}, {2.0, 2.0}}) {
    worst = std::max(worst, std::abs(u1_bar(1.0, c1, c2) -
                                     std::sqrt(c2) / (std::sqrt(c1) + std::sqrt(c2))));
    worst = std::max(worst, std::abs(u1_bar(2.0, c1, c2) - 0.5));
  }
  if (worst > 1e-12) pass = false;

  Rng rng(303);
  std::vector<double> grid;
  for (int k = 1; k <= 1000; ++k) grid.push_back(2.0 * k / 1001.0);  // interior of (0,2)
  int monotone_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double c1 = 0.05 + 5.0 * rng.uniform01();
    const double c2 = c1 + 0.05 + 5.0 * rng.uniform01();
    monotone_ok += verify_monotone(c1, c2, grid).strictly_decreasing;
  }
  if (monotone_ok != 100) pass = false;
  report(3, pass, fmt("special-value gap=%.2e (<=1e-12), strict decrease %d/100 cost pairs",
                      worst, monotone_ok));
}

// ---- 4. near-absorption behavior on the even ring ------------------------

void criterion_4() {
  const Graph g = Graph::cycle(100);
  const auto bp = find_bipartition(g);
  bool pass = true;
  std::string detail;

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(derive_stream_seed(404, seed));
    const Params p{1.0, 2.0, 1e-3};
    GillespieEngine eng(g, p, draw_initial(InitialLaw::bernoulli(0.5), 100, rng), rng);
    ObservableAccumulator acc(g, eng.config(), 0.0, &*bp);
    drive(eng, RunBudget::updates(200000), acc);
    const double residence = (acc.residence_plus() + acc.residence_minus()) / acc.time();
    const double phi = acc.phi();
    if (!(residence >= 0.9) || phi < 0.45 || phi > 0.55 || acc.updates() < 100000) pass = false;
    detail += fmt("seed%llu: res=%.3f phi=%.3f; ", static_cast<unsigned long long>(seed), residence, phi);
  }

  // without defection the ring must freeze in a checkerboard, after which
  // the task-1 share sits exactly at the bipartition split
  bool frozen_ok = true;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(derive_stream_seed(405, seed));
    const Params p{1.0, 2.0, 0.0};
    GillespieEngine eng(g, p, draw_initial(InitialLaw::bernoulli(0.5), 100, rng), rng);
    ObservableAccumulator acc(g, eng.config());
    bool absorbed = false;
    drive(eng, RunBudget::updates(100000000), acc, &absorbed);
    const bool at_board = eng.config() == xi_plus(*bp) || eng.config() == xi_minus(*bp);
    ObservableAccumulator after(g, eng.config());
    after.advance_to(1.0);
    frozen_ok = frozen_ok && absorbed && at_board && after.phi() == 0.5;  // N1/N = N2/N = 1/2
  }
  if (!frozen_ok) pass = false;
  detail += frozen_ok ? "eps=0 absorbs in a checkerboard, share exactly 1/2"
                      : "eps=0 absorption check FAILED";
  report(4, pass, detail);
}

// ---- 5. mean escape time from a checkerboard -----------------------------

void criterion_5() {
  const int n = 50;
  const Graph g = Graph::cycle(n);
  const auto bp = find_bipartition(g);
  const Params p{1.0, 2.0, 0.01};
  const Configuration board = xi_plus(*bp);

  std::vector<double> samples;
  samples.reserve(1000);
  for (int r = 0; r < 1000; ++r) {
    GillespieEngine eng(g, p, board, Rng(derive_stream_seed(505, r)));
    Event ev;
    const auto out = eng.step(std::numeric_limits<double>::infinity(), ev);
    if (out != StepOutcome::Applied) {
      report(5, false, "escape event never fired");
      return;
    }
    samples.push_back(ev.time);
  }
  const auto est = mean_se(samples);
  const double target = 1.0 / (p.epsilon * (25 * p.c1 + 25 * p.c2));
  const double floor = 1.0 / (p.epsilon * n * p.c2);
  const bool pass = std::abs(est.mean - target) <= 3.0 * est.se && est.mean >= floor;
  report(5, pass, fmt("mean T_out=%.4f se=%.4f target=%.4f (3se band), floor=%.2f",
                      est.mean, est.se, target, floor));
}

// ---- 6. eventwise coupling of vertex and edge dynamics -------------------

void criterion_6() {
  const Params p{1.0, 2.0, 0.05};
  std::uint64_t events = 0;
  int clean = 0;
  double first_bad = -1;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rep = couple_and_verify(50, p, InitialLaw::bernoulli(0.5),
                                       RunBudget::updates(12000), derive_stream_seed(606, seed));
    events += rep.events;
    clean += rep.ok;
    if (!rep.ok && first_bad < 0) first_bad = rep.first_mismatch_time;
  }
  const bool pass = clean == 10 && events >= 100000;
  report(6, pass, fmt("%llu events across 10 seeds, %d/10 clean%s",
                      static_cast<unsigned long long>(events), clean,
                      first_bad >= 0 ? fmt(", first mismatch t=%.3f", first_bad).c_str() : ""));
}

// ---- 7. annihilating random walks die out --------------------------------

void criterion_7() {
  const Params p{1.0, 2.0, 0.0};
  int extinct = 0, no_births = 0;
  bool parity_ok = true;
  for (int r = 0; r < 100; ++r) {
    Rng rng(derive_stream_seed(707, r));
    const Configuration start = draw_initial(InitialLaw::bernoulli(0.5), 100, rng);
    try {
      const auto stats = simulate_dual_native(100, p, project_to_edges(start), start[0],
                                              RunBudget::updates(100000000),
                                              derive_stream_seed(708, r));
      extinct += stats.extinct && stats.final_count == 0;
      no_births += stats.births == 0;
    } catch (const SimulationError&) {
      parity_ok = false;  // the engine asserts parity on every event
    }
  }
  const bool pass = extinct == 100 && no_births == 100 && parity_ok;
  report(7, pass, fmt("extinct %d/100, birth-free %d/100, parity %s", extinct, no_births,
                      parity_ok ? "held" : "VIOLATED"));
}

// ---- 8. near-critical balance on the long ring ---------------------------

void criterion_8() {
  const int n = 1000;
  const Graph g = Graph::cycle(n);
  const Params p{1.0, 2.0, 1e-3};
  const double horizon = 2000.0, burnin = 1000.0;
  bool phi_ok = true;
  std::vector<double> agreements;
  std::string detail;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Rng rng(derive_stream_seed(808, seed));
    GillespieEngine eng(g, p, draw_initial(InitialLaw::bernoulli(0.5), n, rng), rng);
    ObservableAccumulator acc(g, eng.config(), burnin, nullptr, true);
    drive(eng, RunBudget::time(horizon), acc);
    const double phi = acc.phi_postburn();
    const double agree = acc.agreement_density_postburn();
    agreements.push_back(agree);
    if (phi < 0.475 || phi > 0.525) phi_ok = false;
    detail += fmt("seed%llu: phi=%.4f agree=%.4f; ", static_cast<unsigned long long>(seed), phi, agree);
  }
  const double agree_mean = mean_se(agreements).mean;
  const bool pass = phi_ok && agree_mean <= 0.05;
  report(8, pass, detail + fmt("mean agreement=%.4f (need <=0.05)", agree_mean));
}

// ---- 9. influence sets stay narrow ---------------------------------------

void criterion_9() {
  const int n = 100;
  const Graph g = Graph::cycle(n);
  const Params p{1.0, 2.0, 0.05};
  EventLog log(1 << 19);
  Rng rng(909);
  GraphicalEngine eng(g, p, draw_initial(InitialLaw::bernoulli(0.5), n, rng), rng, &log);

  Event ev;
  auto run_until = [&](double t) {
    while (eng.step(t, ev) == StepOutcome::Applied) {
    }
  };

  const double t0 = 10.0;
  run_until(t0);
  long windows = 0, wide4 = 0, wide8 = 0;
  for (int s = 1; s <= 400; ++s) {
    const double t = t0 + 0.5 * s;
    run_until(t);
    for (int x = 0; x < n; x += 4) {
      ++windows;
      const long w4 = influence_set(log, n, x, t, 4.0).width_at_depth;
      const long w8 = influence_set(log, n, x, t, 8.0).width_at_depth;
      wide4 += w4 > 2 * 8 + 2;   // 2 ceil(c2 T) + 2 with c2 T = 8
      wide8 += w8 > 2 * 16 + 2;  // and c2 T = 16
    }
  }
  const double f4 = double(wide4) / windows, f8 = double(wide8) / windows;
  const bool pass = windows >= 10000 && f4 <= std::exp(-1.0) && f8 <= std::exp(-2.0);
  report(9, pass, fmt("%ld windows per horizon; exceed rate %.4f (<=%.3f) at c2T=8, %.4f (<=%.3f) at c2T=16",
                      windows, f4, std::exp(-1.0), f8, std::exp(-2.0)));
}

// ---- 10. the two engines sample the same law ------------------------------

void criterion_10() {
  const Graph g = Graph::complete(50);
  const Params p{1.0, 2.0, 0.1};
  std::vector<double> phis[2];
  for (int which = 0; which < 2; ++which) {
    std::vector<ReplicateTask> tasks(200);
    for (int r = 0; r < 200; ++r) {
      tasks[r].graph = &g;
      tasks[r].graph_spec = "complete:50";
      tasks[r].params = p;
      tasks[r].init = InitialLaw::all1();
      tasks[r].engine = which == 0 ? EngineKind::Gillespie : EngineKind::Graphical;
      tasks[r].budget = RunBudget::time(50.0);
      tasks[r].stream_seed = derive_stream_seed(1010 + which, r);
    }
    for (const auto& s : run_batch_parallel(tasks)) phis[which].push_back(s.phi);
  }
  const auto a = mean_se(phis[0]);
  const auto b = mean_se(phis[1]);
  const double pooled = std::sqrt(a.se * a.se + b.se * b.se);
  const bool pass = std::abs(a.mean - b.mean) <= 3.0 * pooled;
  report(10, pass, fmt("gillespie %.5f+-%.5f vs graphical %.5f+-%.5f, |d|=%.5f (3se=%.5f)",
                       a.mean, a.se, b.mean, b.se, std::abs(a.mean - b.mean), 3.0 * pooled));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
