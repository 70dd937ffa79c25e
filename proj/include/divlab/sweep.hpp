#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divlab/batch.hpp"
#include "divlab/exact.hpp"

namespace divlab {

// CSV plumbing: '#'-prefixed metadata line, header, then data rows.  Fields
// containing separators are double-quoted; doubles are printed with 17
// significant digits so rows round-trip exactly.
std::string csv_field(const std::string& raw);
std::string format_double(double v);
std::vector<std::string> split_csv_row(const std::string& line);

// "start:end:steps" -> `steps` evenly spaced values, endpoints included
struct SweepRange {
  double start = 0, end = 0;
  int steps = 1;
  static SweepRange parse(const std::string& text);
  std::vector<double> values() const;
};

struct ExperimentSpec {
  std::string graph_spec;
  double c1 = 1, c2 = 1;
  std::vector<double> epsilons;
  EngineKind engine = EngineKind::Gillespie;
  RunBudget budget;
  double burnin = 0;
  InitialLaw init;
  int replicates = 1;
  std::uint64_t seed = 0;
  bool parallel = true;
  bool track_agreement = false;
};

// One row per (epsilon, replicate), written in that order regardless of
// worker scheduling.  Re-running the same spec reproduces the data rows
// byte for byte.
void run_sweep(const ExperimentSpec& spec, std::ostream& os);

extern const char* const kRunSummaryHeader;
void write_summary_row(const RunSummary& s, bool with_postburn, std::ostream& os);

// closed-form complete-graph report: one row per (N, epsilon) with B,
// u1_bar, v1_bar, the stationary occupancy mean and the gap between them
void run_exact_report(const std::vector<int>& ns, double c1, double c2,
                      const std::vector<double>& epsilons, std::ostream& os);

}  // namespace divlab
