#pragma once

// Special functions used by the closed-form profile formulas: Gamma, Bessel
// J_nu, the Gauss hypergeometric series 2F1 and the Weber-Schafheitlin
// integral (closed form and quadrature oracle).
//
// All functions are pure and reentrant. Domain violations throw
// std::domain_error.

namespace fracpm::specfun {

/// Euler Gamma function. Throws std::domain_error at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// 1/Gamma(x), which is entire: returns exactly 0 at the poles.
double rgamma(double x);

/// Bessel function of the first kind J_nu(x) for nu >= 0, x >= 0.
double bessel_j(double nu, double x);

/// True when x is (numerically) one of 0, -1, -2, ...
bool is_nonpositive_integer(double x);

struct Hyp2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) for real arguments with
/// |z| <= 1.
///
/// Terminating series (a or b a non-positive integer) are summed exactly as
/// polynomials. Otherwise: direct series for |z| <= 0.5, Pfaff transformation
/// for z < -0.5, the 1 - z connection formula for z > 0.5 (direct series when
/// c - a - b is close to an integer), and Gauss summation at z = 1 when
/// c - a - b > 0.
double hyp2f1(const Hyp2F1Params& p);
double hyp2f1(double a, double b, double c, double z);

/// Parameters of  int_0^inf t^{-lambda} J_mu(a t) J_nu(b t) dt,  0 < b < a.
struct WSParams {
  double lambda_exp = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double a_arg = 1.0;
  double b_arg = 0.5;
};

/// Convergence region enforced for the integral: mu + nu - lambda + 1 > 0
/// (origin) and lambda > -1 (infinity), together with 0 < b < a.
bool ws_convergent(const WSParams& p);

/// Closed form of the Weber-Schafheitlin discontinuous integral for b < a.
double weber_schafheitlin_closed(const WSParams& p);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate (panels + tail truncation)
  double tail = 0.0;   // contribution of [t_max, inf) from the asymptotic form
  bool converged = false;
};

/// Independent quadrature of the Weber-Schafheitlin integral: adaptive
/// Gauss-Kronrod panels on [0, t_max] plus the tail [t_max, inf) integrated
/// term by term from the large-argument Hankel expansion of both Bessel
/// factors.
QuadResult weber_schafheitlin_quad(const WSParams& p, double t_max, double tol);

}  // namespace fracpm::specfun
