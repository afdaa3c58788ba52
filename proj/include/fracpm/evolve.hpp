#pragma once

// Time integration of the regularized equation
//
//   u_t = delta Lap u + div(|u| grad^{alpha-1} G_eps(u)),
//   G_eps(u) = sgn(u) ((u^2 + eps^2)^{(m-1)/2} - eps^{m-1}),
//
// on a periodic grid (d = 1, 2).

#include "fracpm/grid.hpp"

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace fracpm::evolve {

double g_eps(double u, double m, double eps);

/// Self-similar data u(t0, .) of the given support radius, or of the given
/// mass when mass > 0. The run starts at t0.
struct IcBarenblatt {
  double R = 1.0;
  double mass = 0.0;
  double t0 = 1.0;
};

/// amplitude * exp(-|x - center|^2 / (2 sigma^2)); center applies to every axis.
struct IcGaussian {
  double sigma = 0.5;
  double amplitude = 1.0;
  double center = 0.0;
};

/// Values read from a file: one number per grid node in row-major order
/// (whitespace or comma separated; a trailing column of values is used when
/// rows carry coordinates).
struct IcFile {
  std::string path;
};

/// Positive Gaussian bump at -separation/2 along x plus a negative one of
/// amplitude -ratio*amplitude at +separation/2.
struct IcSignedPair {
  double sigma = 0.3;
  double amplitude = 1.0;
  double separation = 2.0;
  double ratio = 0.5;
};

using InitialCondition = std::variant<IcBarenblatt, IcGaussian, IcFile, IcSignedPair>;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SolverConfig {
  double alpha = 1.0;
  double m = 2.0;
  double delta = 1e-4;
  double eps = 1e-4;
  Grid grid{1, 512, 16.0};
  double t_end = 1.0;  // absolute end time
  double cfl = 0.4;
  double save_every = 0.1;
  /// Explicit save times; overrides save_every when non-empty.
  std::vector<double> save_times;
  std::vector<double> p_list{1.0, 2.0, 4.0, kInf};
  InitialCondition ic = IcGaussian{};
  double dt_min = 1e-12;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
  double start_time() const;
};

/// m > 1 + (1-alpha)/d for alpha <= 1, m > 3 - 2/alpha for alpha in (1, 2).
bool admissible(double alpha, double m, int d);

/// Human-readable warnings (parameter admissibility).
std::vector<std::string> config_warnings(const SolverConfig& cfg);

Field initial_field(const SolverConfig& cfg);

/// Semi-discrete right-hand side used by run(): delta times the 3-point
/// Laplacian plus the conservative upwind (Godunov, MUSCL-minmod) flux
/// difference of |u| V, V = grad^{alpha-1} G_eps(u) evaluated at cell faces.
Field rhs(const Field& u, const SolverConfig& cfg);

/// Pseudospectral right-hand side
///   delta Lap u + div(dealias(|u| grad^{alpha-1} G_eps(u))).
Field rhs_spectral(const Field& u, const SolverConfig& cfg);

double lp_norm(const Field& f, double p);
double mass(const Field& f);

struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  std::vector<double> lp_norms;  // aligned with SolverConfig::p_list
  double min_u = 0.0;
  double max_u = 0.0;
  double dt_used = 0.0;  // last step taken before this record (0 at start)
};

DiagnosticsRecord diagnose(const Field& u, double t, double dt, const std::vector<double>& p_list);

struct Snapshot {
  double t = 0.0;
  Field u;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<DiagnosticsRecord> records;
  std::vector<std::string> warnings;
  bool aborted = false;
  std::string reason;
  long steps = 0;
};

/// Integrates from cfg.start_time() to cfg.t_end. Each step is a Strang
/// splitting: exact half steps of delta times the discrete heat semigroup
/// around an SSP-RK3 step of the flux term. The step size obeys the
/// advective CFL bound and an order-alpha parabolic bound, and lands exactly
/// on save times. A record and snapshot are stored at the start time and at
/// every save time. Non-finite values or dt < dt_min abort the run, keeping
/// the last valid state as the final snapshot.
Trajectory run(const SolverConfig& cfg);

}  // namespace fracpm::evolve
