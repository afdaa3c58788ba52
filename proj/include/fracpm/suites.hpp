#pragma once

// Verification suites behind `verify {special-functions|profile|operators|
// inequalities|all}`. Every check yields one ReportRow.

#include "fracpm/report.hpp"
#include "fracpm/specfun.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracpm::suites {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  unsigned threads = 1;
  // Profile suite parameters.
  double alpha = 1.0;
  double m = 2.0;
  int d = 1;
};

std::vector<report::ReportRow> special_functions(const SuiteOptions& opt);
std::vector<report::ReportRow> profile(const SuiteOptions& opt);
std::vector<report::ReportRow> operators(const SuiteOptions& opt);
std::vector<report::ReportRow> inequalities(const SuiteOptions& opt);
std::vector<report::ReportRow> all(const SuiteOptions& opt);

/// Dispatch by CLI name; throws std::invalid_argument for unknown names.
std::vector<report::ReportRow> run(const std::string& name, const SuiteOptions& opt);
const std::vector<std::string>& names();

/// Convergent Weber-Schafheitlin parameter sets: mu, nu in [0, 3],
/// lambda in [-0.5, mu + nu + 0.8), a in [0.5, 2], b/a in [0.1, 0.9].
std::vector<specfun::WSParams> ws_battery(std::uint64_t seed, int count);

/// Smallest SV margin over `fields` random smooth fields (half positive,
/// half sign-changing) on a 1-D grid, alpha in {0.5, 1, 1.5}, q in
/// {1.5, 2, 3, 4}.
double sv_battery_min_margin(std::uint64_t seed, int fields);

/// Largest relative |lhs - rhs| at alpha = 2 over positive random fields.
double sv_alpha2_max_relative_gap(std::uint64_t seed, int fields);

/// Sup over |y| <= 0.9 of |grad^{alpha-1}(k Phi_alpha) + lambda y|, spectral,
/// d = 1, L = 16, m = 2.
double pressure_gradient_error(double alpha, int n);

}  // namespace fracpm::suites
