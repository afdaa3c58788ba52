#include "fracpm/barenblatt.hpp"

#include "fracpm/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracpm::barenblatt {

using specfun::gamma_fn;
using specfun::hyp2f1;
using specfun::rgamma;

namespace {

double norm(std::span<const double> y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return std::sqrt(s);
}

void check_dimension(int d) {
  if (d < 1 || d > 3) throw std::domain_error("dimension must be 1, 2 or 3");
}

// C (d - beta)/2, finite through beta = d.
double inside_coefficient_times_a(double gamma, double beta, int d) {
  const double a = 0.5 * (d - beta);
  return std::pow(2.0, -beta) * gamma_fn(0.5 * gamma + 1.0) * gamma_fn(a + 1.0) /
         (gamma_fn(0.5 * d) * gamma_fn(0.5 * (beta + gamma) + 1.0));
}

// C~ (d - beta)/2; vanishes at beta = 0 through 1/Gamma(beta/2).
double outside_coefficient_times_a(double gamma, double beta, int d) {
  const double a = 0.5 * (d - beta);
  return std::pow(2.0, -beta) * gamma_fn(0.5 * gamma + 1.0) * gamma_fn(a + 1.0) *
         rgamma(0.5 * beta) / gamma_fn(0.5 * (d + gamma) + 1.0);
}

// d/dr of the unit-radius I_{2-alpha}(Phi_alpha), |y| > 1.
double outer_pressure_derivative(double r, double alpha, int d) {
  const double beta = 2.0 - alpha;
  const double a = 0.5 * (d - beta);
  const double b = 0.5 * (2.0 - beta);
  const double c = 0.5 * (d + alpha) + 1.0;
  const double z = 1.0 / (r * r);
  const double ca = outside_coefficient_times_a(alpha, beta, d);
  if (ca == 0.0) return 0.0;
  const double f0 = hyp2f1(a, b, c, z);
  const double f1 = hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
  return -2.0 * ca * (std::pow(r, beta - d - 1.0) * f0 + std::pow(r, beta - d - 3.0) * (b / c) * f1);
}

}  // namespace

void ProfileParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("alpha must lie in (0, 2]");
  if (!(m > 1.0)) throw std::domain_error("m must exceed 1");
  if (!(R > 0.0)) throw std::domain_error("R must be positive");
  check_dimension(d);
}

double getoor_constant(double alpha, int d) {
  return gamma_fn(0.5 * d) /
         (std::pow(2.0, alpha) * gamma_fn(1.0 + 0.5 * alpha) * gamma_fn(0.5 * (d + alpha)));
}

ScalingConstants scaling_constants(double alpha, double m, int d) {
  ProfileParams{alpha, m, d, 1.0}.validate();
  ScalingConstants s;
  s.lambda = 1.0 / (d * (m - 1.0) + alpha);
  s.K_getoor = getoor_constant(alpha, d);
  s.k = d * gamma_fn(0.5 * d) /
        ((d * (m - 1.0) + alpha) * std::pow(2.0, alpha) * gamma_fn(1.0 + 0.5 * alpha) *
         gamma_fn(0.5 * (d + alpha)));
  return s;
}

double profile_radial(double r, const ProfileParams& p) {
  const double gap = p.R * p.R - r * r;
  if (gap <= 0.0) return 0.0;
  const double k = scaling_constants(p.alpha, p.m, p.d).k;
  return std::pow(k * std::pow(gap, 0.5 * p.alpha), 1.0 / (p.m - 1.0));
}

double profile(std::span<const double> y, const ProfileParams& p) {
  p.validate();
  if (static_cast<int>(y.size()) != p.d) throw std::invalid_argument("point dimension mismatch");
  return profile_radial(norm(y), p);
}

RieszClosedForm riesz_closed_form(double gamma, double beta, int d) {
  check_dimension(d);
  if (!(beta > 0.0 && beta < 2.0) || !(beta < d) || !(gamma > 0.0)) {
    throw std::domain_error("riesz closed form requires beta in (0,2), beta < d, gamma > 0");
  }
  RieszClosedForm f;
  f.gamma = gamma;
  f.beta = beta;
  f.d = d;
  const double common = std::pow(2.0, -beta) * gamma_fn(0.5 * gamma + 1.0) * gamma_fn(0.5 * (d - beta));
  f.C = common / (gamma_fn(0.5 * d) * gamma_fn(0.5 * (beta + gamma) + 1.0));
  f.C_tilde = common / (gamma_fn(0.5 * beta) * gamma_fn(0.5 * (d + gamma) + 1.0));
  return f;
}

double riesz_of_profile_radial(double r, double gamma, double beta, int d) {
  const RieszClosedForm f = riesz_closed_form(gamma, beta, d);
  if (r < 0.0) throw std::domain_error("radius must be non-negative");
  if (r <= 1.0) {
    return f.C * hyp2f1(0.5 * (d - beta), -0.5 * (gamma + beta), 0.5 * d, r * r);
  }
  return f.C_tilde * std::pow(r, beta - d) *
         hyp2f1(0.5 * (d - beta), 0.5 * (2.0 - beta), 0.5 * (d + gamma) + 1.0, 1.0 / (r * r));
}

double riesz_of_profile(std::span<const double> y, double gamma, double beta, int d) {
  if (static_cast<int>(y.size()) != d) throw std::invalid_argument("point dimension mismatch");
  return riesz_of_profile_radial(norm(y), gamma, beta, d);
}

double riesz_kernel_constant(double beta, int d) {
  return gamma_fn(0.5 * (d - beta)) /
         (std::pow(2.0, beta) * std::pow(std::numbers::pi, 0.5 * d) * gamma_fn(0.5 * beta));
}

double neg_laplacian_riesz_inside(double r, double gamma, double beta, int d) {
  check_dimension(d);
  if (r < 0.0 || r > 1.0) throw std::domain_error("inside branch needs 0 <= r <= 1");
  // F(z) = 2F1(A, B; c; z), z = |y|^2:  Delta F(|y|^2) = 4 z F'' + 2 d F'.
  const double A = 0.5 * (d - beta);
  const double B = -0.5 * (gamma + beta);
  const double c = 0.5 * d;
  const double z = r * r;
  const double ca = inside_coefficient_times_a(gamma, beta, d);
  const double f1 = hyp2f1(A + 1.0, B + 1.0, c + 1.0, z);
  const double f2 = (B + 1.0 == 0.0) ? 0.0 : hyp2f1(A + 2.0, B + 2.0, c + 2.0, z);
  // C F' = C A (B/c) f1,  C F'' = C A (B/c) ((A+1)(B+1)/(c+1)) f2.
  const double lead = ca * B / c;
  return -lead * (4.0 * z * ((A + 1.0) * (B + 1.0) / (c + 1.0)) * f2 + 2.0 * d * f1);
}

GetoorCheck getoor_check(double alpha, int d, double r_max, int samples) {
  check_dimension(d);
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("alpha must lie in (0, 2]");
  GetoorCheck out;
  out.r_max = r_max;
  const double beta = 2.0 - alpha;
  out.hypotheses_hold = (beta < d) || beta == 0.0;
  const double K = getoor_constant(alpha, d);
  for (int i = 0; i < samples; ++i) {
    const double r = samples > 1 ? r_max * i / (samples - 1.0) : 0.0;
    const double value = K * neg_laplacian_riesz_inside(r, alpha, beta, d);
    out.max_residual = std::max(out.max_residual, std::abs(value - 1.0));
  }
  return out;
}

double frac_grad_pressure_radial(double r, const ProfileParams& p) {
  p.validate();
  const ScalingConstants s = scaling_constants(p.alpha, p.m, p.d);
  if (r < p.R) return -s.lambda * r;
  if (p.alpha == 2.0) return 0.0;
  // Phi^{m-1}(y) = k R^alpha Phi_alpha(y/R) and grad^{alpha-1} has order
  // alpha - 1.
  return s.k * p.R * outer_pressure_derivative(r / p.R, p.alpha, p.d);
}

std::vector<double> frac_grad_profile_pressure(std::span<const double> y, const ProfileParams& p) {
  if (static_cast<int>(y.size()) != p.d) throw std::invalid_argument("point dimension mismatch");
  const double r = norm(y);
  std::vector<double> out(y.size(), 0.0);
  if (r == 0.0) return out;
  const double g = frac_grad_pressure_radial(r, p);
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = g * y[i] / r;
  return out;
}

double self_similar_radial(double t, double r, const ProfileParams& p) {
  if (!(t > 0.0)) throw std::domain_error("self_similar requires t > 0");
  const double lambda = scaling_constants(p.alpha, p.m, p.d).lambda;
  const double scale = std::pow(t, -lambda);
  return std::pow(t, -p.d * lambda) * profile_radial(r * scale, p);
}

double self_similar(double t, std::span<const double> x, const ProfileParams& p) {
  p.validate();
  if (static_cast<int>(x.size()) != p.d) throw std::invalid_argument("point dimension mismatch");
  return self_similar_radial(t, norm(x), p);
}

double self_similar_dt_radial(double t, double r, const ProfileParams& p) {
  if (!(t > 0.0)) throw std::domain_error("self_similar requires t > 0");
  const double lambda = scaling_constants(p.alpha, p.m, p.d).lambda;
  const double y = r * std::pow(t, -lambda);
  const double phi = profile_radial(y, p);
  if (phi == 0.0) return 0.0;
  // y Phi'(y) = Phi * (alpha/(m-1)) * (-y^2)/(R^2 - y^2)
  const double y_dphi = phi * (p.alpha / (p.m - 1.0)) * (-y * y) / (p.R * p.R - y * y);
  return -lambda * std::pow(t, -p.d * lambda - 1.0) * (p.d * phi + y_dphi);
}

double self_similar_flux_divergence_radial(double t, double r, const ProfileParams& p) {
  if (!(t > 0.0)) throw std::domain_error("self_similar requires t > 0");
  const double lambda = scaling_constants(p.alpha, p.m, p.d).lambda;
  const double y = r * std::pow(t, -lambda);
  const double phi = profile_radial(y, p);
  if (phi == 0.0) return 0.0;
  // div(Phi V) with the radial field V(y) = g(|y|) y/|y|:
  //   Phi (g' + (d-1) g/|y|) + Phi'(|y|) g.
  const double h = 1e-6 * p.R;
  const double g = frac_grad_pressure_radial(y, p);
  const double dg = (y + h < p.R && y - h > 0.0)
                        ? (frac_grad_pressure_radial(y + h, p) - frac_grad_pressure_radial(y - h, p)) / (2 * h)
                        : (frac_grad_pressure_radial(y + h, p) - g) / h;
  const double dphi = phi * (p.alpha / (p.m - 1.0)) * (-y) / (p.R * p.R - y * y);
  const double curv = y > 0.0 ? (p.d - 1.0) * g / y : (p.d - 1.0) * dg;
  const double div = phi * (dg + curv) + dphi * g;
  return std::pow(t, -p.d * lambda - 1.0) * div;
}

double unit_profile_mass(double alpha, double m, int d) {
  ProfileParams{alpha, m, d, 1.0}.validate();
  const double s = alpha / (2.0 * (m - 1.0));
  boost::math::quadrature::tanh_sinh<double> ts;
  const double radial =
      ts.integrate([&](double r) { return std::pow(r, d - 1.0) * std::pow((1.0 - r) * (1.0 + r), s); }, 0.0, 1.0);
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * d) / gamma_fn(0.5 * d);
  return sphere * radial;
}

double profile_mass(const ProfileParams& p) {
  p.validate();
  const double k = scaling_constants(p.alpha, p.m, p.d).k;
  const double expo = p.d + p.alpha / (p.m - 1.0);
  return std::pow(k, 1.0 / (p.m - 1.0)) * std::pow(p.R, expo) * unit_profile_mass(p.alpha, p.m, p.d);
}

double radius_for_mass(double M, double alpha, double m, int d) {
  if (!(M > 0.0)) throw std::domain_error("mass must be positive");
  const double unit = profile_mass({alpha, m, d, 1.0});
  return std::pow(M / unit, 1.0 / (d + alpha / (m - 1.0)));
}

double interface_exponent_fit(const ProfileParams& p, double lo, double hi, int samples) {
  p.validate();
  if (!(lo > 0.0 && hi > lo && hi < p.R) || samples < 2) {
    throw std::domain_error("interface_exponent_fit: need 0 < lo < hi < R and samples >= 2");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = lo * std::pow(hi / lo, i / (samples - 1.0));
    const double x = std::log(s);
    const double y = std::log(profile_radial(p.R - s, p));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = samples;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double interface_holder_exponent(double alpha, double m) {
  return std::min(alpha / (2.0 * (m - 1.0)), 1.0);
}

}  // namespace fracpm::barenblatt
