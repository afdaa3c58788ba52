#pragma once

// Functional inequalities behind the L^p decay estimates, evaluated on
// periodic grids, and the constants they feed: Stroock-Varopoulos, Nash,
// Gagliardo-Nirenberg, the differential-inequality constant K(p), the
// Moser-Alikakos recursion and the integral Gronwall inequality.
//
// The Nash constant is never assumed. It is measured as the reciprocal of the
// smallest Nash ratio over a fixed battery of test fields, which makes it a
// lower estimate of the true constant.

#include "fracpm/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracpm::inequalities {

/// Dirichlet form <f, (-Delta)^{alpha/2} f> = ||grad^{alpha/2} f||_2^2.
double fractional_energy(const Field& f, double alpha);

struct SVGap {
  double lhs = 0.0;  // int sgn(w)|w|^{q-1} (-Delta)^{alpha/2} w
  double rhs = 0.0;  // 4(q-1)/q^2 ||grad^{alpha/2} |w|^{q/2}||_2^2
  double margin() const { return lhs - rhs; }
};

SVGap stroock_varopoulos_gap(const Field& w, double q, double alpha);

/// ||grad^{alpha/2} v||_2^2 ||v||_1^{2 alpha/d} / ||v||_2^{2(1 + alpha/d)}.
/// Throws std::domain_error for the zero field.
double nash_ratio(const Field& v, double alpha);

struct NamedField {
  std::string name;
  Field field;
};

/// Fixed test battery: Gaussians, bumps (1-|x|^2/s^2)_+^k and two-bump
/// superpositions, all nonnegative and well inside the period.
std::vector<NamedField> nash_battery(const Grid& g);

/// Grid used to measure C_N in dimension d (L = 32 on [-16, 16)^d).
Grid nash_grid(int d);

struct NashMeasurement {
  double C_N = 0.0;        // 1 / min_ratio
  double min_ratio = 0.0;  // infimum of nash_ratio over the battery
  std::string argmin;
};

NashMeasurement measure_nash_constant(double alpha, int d);

struct GNExponents {
  double p = 0.0;
  double m = 0.0;
  int d = 1;
  double alpha = 0.0;
  double r = 0.0;  // p + m - 1
  double a = 0.0;  // (p/(p-1)) (d(r-1) + alpha)/d
  double b = 0.0;  // a - r
};

/// Requires p > 1 and p >= m - 1.
GNExponents gn_exponents(double p, double m, int d, double alpha);

/// (d(m-1) + p alpha)/(d(p-1)), the second printed form of b.
double gn_b_direct(const GNExponents& e);

struct GNGap {
  double lhs = 0.0;  // ||u||_p^a
  double rhs = 0.0;  // C_N ||grad^{alpha/2}|u|^{r/2}||_2^2 ||u||_1^b
};

GNGap gn_gap(const Field& u, const GNExponents& e, double C_N);

/// K = 4(m-1)p(p-1)/(C_N (p+m-1)^2).
double k_opt(double p, double m, double C_N);

/// C_p = (K(a/p - 1))^{-1/(a-p)}: constant of ||u(t)||_p <= C_p t^{-...}
/// for unit mass, obtained by integrating df/dt <= -K f^{a/p}.
double preliminary_constant(double p, double alpha, double m, int d, double C_N);

/// Least k >= 1 with 2^k >= m - 1 (so that p = 2^k > 1).
int moser_start_index(double m);

/// Exponent of t in ||u(t)||_{2^n} <= kappa_n t^{-mu_n}.
double moser_mu(int n, double alpha, double m, int d);

struct MoserState {
  int n = 0;
  double log_kappa = 0.0;
  double kappa = 0.0;
  double mu = 0.0;
  double K = 0.0;  // K(2^{n+1}) used to produce the next state
  double C_N = 0.0;
};

/// Iterates
///   log kappa_{n+1} = e_n [ log(num_n / (K_n q_n)) + 2^n (2 alpha/d + (m-1)/2^n) log kappa_n ],
///   q_n = alpha/d + (m-1)/2^n,  e_n = 2^{-n-1}/q_n,
///   num_n = 2^n (2 alpha/d + (m-1)/2^n) mu_n + 1,
/// from kappa_{k_start} = kappa_start up to n = n_max (logs throughout).
std::vector<MoserState> moser_sequence(double alpha, double m, int d, double C_N, double kappa_start,
                                       int k_start, int n_max);

/// Exponents in ||u(t)||_p <= C ||u_0||_1^{mass_exponent} t^{-time_exponent}.
double decay_time_exponent(double alpha, double m, int d, double p);
double decay_mass_exponent(double alpha, double m, int d, double p);

/// C(d, alpha, m): max(1, sup_n kappa_n) with the recursion started from the
/// preliminary constant at p = 2^k, k = moser_start_index(m). Covers every
/// p in [1, inf] by interpolation with ||u(t)||_1 <= ||u_0||_1.
double decay_constant(double alpha, double m, int d, double C_N, int n_max = 60);

/// t -> (K gamma g(t))^{-1/gamma}, g given as a table and interpolated
/// linearly.
class GronwallBound {
 public:
  GronwallBound(double K, double gamma, std::vector<double> t, std::vector<double> g);
  double operator()(double t) const;
  double g_at(double t) const;
  double K() const { return K_; }
  double gamma() const { return gamma_; }

 private:
  double K_;
  double gamma_;
  std::vector<double> t_;
  std::vector<double> g_;
};

/// Requires K > 0, gamma > 0, t strictly increasing from 0, g strictly
/// increasing with g(0) = 0; throws std::domain_error otherwise.
GronwallBound integral_gronwall_bound(double K, double gamma, std::vector<double> t, std::vector<double> g);

/// max over sample pairs s < t of  f(t) + K int_s^t f^{gamma+1} g' - f(s)
/// (trapezoidal in the table). A value <= 0 means the integral hypothesis
/// holds on the samples.
double gronwall_hypothesis_residual(const std::vector<double>& t, const std::vector<double>& f,
                                    const std::vector<double>& g, double K, double gamma);

/// Largest K for which the sampled f satisfies the integral hypothesis with
/// the given gamma and g.
double gronwall_fit_k(const std::vector<double>& t, const std::vector<double>& f,
                      const std::vector<double>& g, double gamma);

/// Smooth random field: `offset` plus `modes` plane waves (wavelengths
/// log-uniform in [L/32, L/4], amplitudes up to 1/modes), times a centred
/// Gaussian window of width L/16. Deterministic in seed.
Field random_smooth_field(const Grid& g, std::uint64_t seed, int modes, double offset);

}  // namespace fracpm::inequalities
