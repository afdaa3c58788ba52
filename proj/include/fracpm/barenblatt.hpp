#pragma once

// Explicit compactly supported self-similar profiles
//
//   Phi(y) = (k (R^2 - |y|^2)_+^{alpha/2})^{1/(m-1)},
//   u(t, x) = t^{-d lambda} Phi(x t^{-lambda}),   lambda = 1/(d(m-1) + alpha),
//
// the closed-form Riesz potentials of (1 - |y|^2)_+^{gamma/2}, and the
// fractional pressure gradient they induce. Closed forms are dimension
// generic; d = 1, 2, 3 are accepted.

#include <span>
#include <vector>

namespace fracpm::barenblatt {

struct ProfileParams {
  double alpha = 1.0;  // (0, 2]
  double m = 2.0;      // > 1
  int d = 1;           // 1, 2 or 3
  double R = 1.0;      // support radius

  /// Throws std::domain_error when a field is out of range.
  void validate() const;
};

struct ScalingConstants {
  double lambda = 0.0;    // 1/(d(m-1) + alpha)
  double k = 0.0;         // profile constant k_{alpha,d}
  double K_getoor = 0.0;  // K_{alpha,d}: K (-Delta)^{alpha/2}(1-|y|^2)_+^{alpha/2} = 1 in B_1
};

ScalingConstants scaling_constants(double alpha, double m, int d);

/// K_{alpha,d} = Gamma(d/2) / (2^alpha Gamma(1+alpha/2) Gamma((d+alpha)/2)).
double getoor_constant(double alpha, int d);

double profile(std::span<const double> y, const ProfileParams& p);
double profile_radial(double r, const ProfileParams& p);

/// Coefficients of the two-branch formula for I_beta((1-|y|^2)_+^{gamma/2}).
struct RieszClosedForm {
  double gamma = 0.0;
  double beta = 0.0;
  int d = 1;
  double C = 0.0;        // inside coefficient
  double C_tilde = 0.0;  // outside coefficient
};

/// Requires beta in (0,2), beta < d, gamma > 0.
RieszClosedForm riesz_closed_form(double gamma, double beta, int d);

/// I_beta((1-|.|^2)_+^{gamma/2})(y). Inside the unit ball
///   C 2F1((d-beta)/2, -(gamma+beta)/2; d/2; |y|^2),
/// outside
///   C~ |y|^{beta-d} 2F1((d-beta)/2, (2-beta)/2; (d+gamma)/2 + 1; |y|^{-2}).
double riesz_of_profile(std::span<const double> y, double gamma, double beta, int d);
double riesz_of_profile_radial(double r, double gamma, double beta, int d);

/// Normalisation c(d,beta) of the Riesz kernel c |x|^{beta-d} whose Fourier
/// symbol is |xi|^{-beta}.
double riesz_kernel_constant(double beta, int d);

/// -Delta applied to the inside branch of I_beta((1-|y|^2)_+^{gamma/2}) at
/// radius r <= 1, through the 2F1 differentiation formula. Uses the pole-free
/// product C (d-beta)/2 so it stays finite when beta >= d (analytic
/// continuation in beta).
double neg_laplacian_riesz_inside(double r, double gamma, double beta, int d);

struct GetoorCheck {
  double max_residual = 0.0;  // max |K (-Delta)^{alpha/2} Phi_alpha - 1|
  double r_max = 0.0;
  bool hypotheses_hold = true;  // false when beta = 2 - alpha >= d
};

/// Evaluates K_{alpha,d} (-Delta) I_{2-alpha}(Phi_alpha) on `samples` radii
/// in [0, r_max].
GetoorCheck getoor_check(double alpha, int d, double r_max = 0.99, int samples = 199);

/// Radial component of grad^{alpha-1}(Phi^{m-1}) at radius r (the field is
/// this value times y/|y|). Equals -lambda r inside the support.
double frac_grad_pressure_radial(double r, const ProfileParams& p);

/// grad^{alpha-1}(Phi^{m-1})(y) as a d-vector.
std::vector<double> frac_grad_profile_pressure(std::span<const double> y, const ProfileParams& p);

double self_similar(double t, std::span<const double> x, const ProfileParams& p);
double self_similar_radial(double t, double r, const ProfileParams& p);

/// Closed-form time derivative of self_similar at |x| = r (not at the
/// interface).
double self_similar_dt_radial(double t, double r, const ProfileParams& p);

/// div(u grad^{alpha-1}(u^{m-1})) for the self-similar solution, assembled
/// from the closed-form pressure gradient; valid for |x| != R t^lambda.
double self_similar_flux_divergence_radial(double t, double r, const ProfileParams& p);

/// omega = int_{B_1} (1-|y|^2)^{alpha/(2(m-1))} dy by quadrature.
double unit_profile_mass(double alpha, double m, int d);

/// Mass of the profile with parameters p (equal to the conserved mass of
/// the self-similar solution).
double profile_mass(const ProfileParams& p);

/// Unique R with profile_mass({alpha, m, d, R}) = M.
double radius_for_mass(double M, double alpha, double m, int d);

/// Least-squares slope of log Phi against log(R - |y|) for R - |y| in
/// [lo, hi].
double interface_exponent_fit(const ProfileParams& p, double lo = 1e-4, double hi = 1e-2,
                              int samples = 41);

/// min(alpha/(2(m-1)), 1).
double interface_holder_exponent(double alpha, double m);

}  // namespace fracpm::barenblatt
