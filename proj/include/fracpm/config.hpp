#pragma once

// Experiment configuration: flat key=value text or JSON with the same keys.
//
//   d, n, l, alpha, m, delta, eps, t_end, cfl, save_every, p_list
//   ic.type = barenblatt | gaussian | file | signed_pair
//   ic.R, ic.mass, ic.t0                  (barenblatt)
//   ic.sigma, ic.amplitude, ic.center     (gaussian)
//   ic.path                               (file)
//   ic.sigma, ic.amplitude, ic.separation, ic.ratio   (signed_pair)
//   sweep.name, sweep.alpha, sweep.m, sweep.delta, sweep.eps, sweep.n  (sweep files only)
//
// p_list and sweep axes are comma-separated lists; "inf" is accepted in
// p_list. Lines starting with '#' are comments. JSON objects may nest
// ("ic": {"type": ...}), nested keys are joined with '.'.

#include "fracpm/evolve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fracpm::config {

using KeyValues = std::map<std::string, std::string>;

/// Parses key=value text, or JSON when the first non-blank character is '{'.
/// Throws std::invalid_argument on syntax errors and duplicate keys.
KeyValues parse(const std::string& text);

/// Reads and parses a file; throws std::runtime_error naming the path when
/// it cannot be opened.
KeyValues read_file(const std::string& path);

/// Builds a solver configuration. Unknown keys, and ic.* keys that do not
/// belong to the chosen ic.type, throw std::invalid_argument naming the key.
evolve::SolverConfig solver_config(const KeyValues& kv);

struct SweepAxes {
  // Absent axis: the base value is used. Present but empty: no runs.
  std::optional<std::vector<double>> alpha, m, delta, eps;
  std::optional<std::vector<int>> n;
};

struct SweepSpec {
  std::string name = "sweep";
  evolve::SolverConfig base;
  SweepAxes axes;
};

SweepSpec sweep_spec(const KeyValues& kv);

evolve::SolverConfig load_solver_config(const std::string& path);
SweepSpec load_sweep_spec(const std::string& path);

std::vector<double> parse_list(const std::string& s);

}  // namespace fracpm::config
