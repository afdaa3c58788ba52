#pragma once

// Parameter sweeps over (alpha, m, delta, eps, n): independent solver runs
// executed on a worker pool, merged after all workers join.

#include "fracpm/config.hpp"
#include "fracpm/evolve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracpm::sweep {

struct SweepPoint {
  double alpha = 0.0;
  double m = 0.0;
  double delta = 0.0;
  double eps = 0.0;
  int n = 0;
};

/// Cartesian product of the axes in the order alpha, m, delta, eps, n.
std::vector<SweepPoint> expand(const config::SweepSpec& spec);

struct RunResult {
  SweepPoint point;
  bool ok = false;
  std::string error;  // exception text or abort reason
  long steps = 0;
  double mass_drift = 0.0;  // max relative drift over records
  double min_u = 0.0;
  double final_linf = 0.0;
  double final_l1 = 0.0;
  std::optional<Field> final_state;
};

/// Runs every point; failures are recorded and do not stop the sweep.
/// Results keep the order of expand().
std::vector<RunResult> run_sweep(const config::SweepSpec& spec, unsigned threads);

struct LimitRow {
  std::string axis;  // "eps" or "delta"
  SweepPoint from;
  SweepPoint to;
  double l1_distance = 0.0;
  bool decreasing = true;  // distance below the previous one along this chain
};

/// For every chain of successful runs that differ only in eps (resp. delta),
/// ordered from large to small values, the L1 distance between consecutive
/// final states.
std::vector<LimitRow> limits(const std::vector<RunResult>& results);

std::string sweep_report_csv(const std::vector<RunResult>& results);
std::string limits_csv(const std::vector<LimitRow>& rows);

}  // namespace fracpm::sweep
