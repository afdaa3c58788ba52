#include "fracpm/specfun.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracpm::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxSeriesTerms = 4'000'000;

bool is_exact_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Plain power series. Terminates exactly when a or b hits zero through the
// Pochhammer factor. Compensated summation keeps the polynomial cases exact
// to rounding.
double hyp_series(double a, double b, double c, double z) {
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const double num = (a + n) * (b + n);
    if (num == 0.0) return sum + comp;
    const double ratio = num / ((c + n) * (n + 1.0)) * z;
    term *= ratio;
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    // Remaining tail is bounded by |term| r / (1 - r) once the ratio has
    // settled below one and is no longer increasing.
    const double next = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * z);
    if (next < 1.0 && next <= std::abs(ratio) + 1e-3) {
      if (std::abs(term) * next / (1.0 - next) <= 0.25 * kEps * std::abs(sum + comp)) {
        return sum + comp;
      }
    }
  }
  throw std::domain_error("hyp2f1: series did not converge");
}

double gauss_sum(double a, double b, double c) {
  return gamma_fn(c) * gamma_fn(c - a - b) * rgamma(c - a) * rgamma(c - b);
}

double hyp2f1_impl(double a, double b, double c, double z, int depth);

double polynomial_case(double a, double b, double c, double z) {
  // b is the terminating parameter; snap it to the integer.
  return hyp_series(a, std::nearbyint(b), c, z);
}

double hyp2f1_impl(double a, double b, double c, double z, int depth) {
  if (depth > 4) throw std::domain_error("hyp2f1: transformation recursion too deep");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw std::domain_error("hyp2f1: non-finite argument");
  }
  if (std::abs(z) > 1.0) throw std::domain_error("hyp2f1: |z| > 1 is not supported");

  const bool a_poly = is_nonpositive_integer(a);
  const bool b_poly = is_nonpositive_integer(b);
  if (is_nonpositive_integer(c)) {
    // Well defined only if the series terminates before (c)_n vanishes.
    const double cn = std::nearbyint(c);
    const bool ok = (b_poly && std::nearbyint(b) > cn) || (a_poly && std::nearbyint(a) > cn);
    if (!ok) throw std::domain_error("hyp2f1: c is a non-positive integer");
  }
  if (b_poly && (!a_poly || std::nearbyint(b) >= std::nearbyint(a))) {
    return polynomial_case(a, b, c, z);
  }
  if (a_poly) return polynomial_case(b, a, c, z);
  if (z == 0.0) return 1.0;

  const double s = c - a - b;
  if (std::abs(z) == 1.0) {
    if (z == 1.0 && s > 0.0) return gauss_sum(a, b, c);
    if (z == -1.0 && s > 0.0) {
      return std::pow(2.0, -a) * hyp2f1_impl(a, c - b, c, 0.5, depth + 1);
    }
    throw std::domain_error("hyp2f1: series diverges on |z| = 1 (need c - a - b > 0)");
  }

  // Euler transformation turns the series into a polynomial when c - a or
  // c - b is a non-positive integer.
  if (is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b)) {
    return std::pow(1.0 - z, s) * hyp2f1_impl(c - a, c - b, c, z, depth + 1);
  }

  if (std::abs(z) <= 0.5) return hyp_series(a, b, c, z);

  if (z < -0.5) {
    // Pfaff: maps z in [-1, -0.5) into (1/3, 1/2].
    return std::pow(1.0 - z, -a) * hyp2f1_impl(a, c - b, c, z / (z - 1.0), depth + 1);
  }

  // 0.5 < z < 1.
  if (std::abs(s - std::nearbyint(s)) < 1e-3) {
    // Degenerate connection coefficients; the direct series still converges.
    return hyp_series(a, b, c, z);
  }
  const double w = 1.0 - z;
  const double gc = gamma_fn(c);
  const double t1 = gc * gamma_fn(s) * rgamma(c - a) * rgamma(c - b);
  const double t2 = gc * gamma_fn(-s) * rgamma(a) * rgamma(b);
  double value = 0.0;
  if (t1 != 0.0) value += t1 * hyp_series(a, b, 1.0 - s, w);
  if (t2 != 0.0) value += t2 * std::pow(w, s) * hyp_series(c - a, c - b, 1.0 + s, w);
  return value;
}

// Hankel coefficients a_k(nu) of the large-argument expansion.
template <std::size_t K>
std::array<double, K> hankel_coefficients(double nu) {
  std::array<double, K> out{};
  out[0] = 1.0;
  const double four_nu2 = 4.0 * nu * nu;
  for (std::size_t k = 1; k < K; ++k) {
    const double odd = 2.0 * static_cast<double>(k) - 1.0;
    out[k] = out[k - 1] * (four_nu2 - odd * odd) / (8.0 * static_cast<double>(k));
  }
  return out;
}

struct OscTail {
  std::complex<double> value;
  double error;
};

// int_T^inf t^{-s} e^{i w t} dt by repeated integration by parts.
OscTail oscillatory_tail(double s, double w, double T) {
  const std::complex<double> iw(0.0, w);
  std::complex<double> sum = 0.0;
  std::complex<double> term = std::pow(T, -s) / iw;
  double last = std::abs(term);
  for (int k = 0; k < 40; ++k) {
    sum += term;
    const std::complex<double> next = term * (s + k) / (T * iw);
    const double mag = std::abs(next);
    if (mag >= last || mag < 1e-18 * std::abs(sum)) {
      last = mag;
      break;
    }
    last = mag;
    term = next;
  }
  return {-std::exp(std::complex<double>(0.0, w * T)) * sum, last};
}

}  // namespace

bool is_nonpositive_integer(double x) {
  if (x > 0.5) return false;
  const double r = std::nearbyint(x);
  return r <= 0.0 && std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x));
}

double gamma_fn(double x) {
  if (std::isnan(x)) throw std::domain_error("gamma_fn: NaN argument");
  if (is_exact_nonpositive_integer(x)) {
    throw std::domain_error("gamma_fn: pole at " + std::to_string(x));
  }
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_exact_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double bessel_j(double nu, double x) {
  if (!(nu >= 0.0) || !(x >= 0.0)) {
    throw std::domain_error("bessel_j: requires nu >= 0 and x >= 0");
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return std::cyl_bessel_j(nu, x);
}

double hyp2f1(const Hyp2F1Params& p) { return hyp2f1_impl(p.a, p.b, p.c, p.z, 0); }

double hyp2f1(double a, double b, double c, double z) { return hyp2f1_impl(a, b, c, z, 0); }

bool ws_convergent(const WSParams& p) {
  return p.b_arg > 0.0 && p.a_arg > p.b_arg && p.mu + p.nu - p.lambda_exp + 1.0 > 0.0 &&
         p.lambda_exp > -1.0;
}

double weber_schafheitlin_closed(const WSParams& p) {
  if (!(p.b_arg > 0.0) || !(p.a_arg > 0.0)) {
    throw std::domain_error("weber_schafheitlin_closed: arguments must be positive");
  }
  if (p.a_arg == p.b_arg) {
    throw std::domain_error("weber_schafheitlin_closed: a = b is the discontinuity point");
  }
  if (p.b_arg > p.a_arg) throw std::domain_error("weber_schafheitlin_closed: requires b < a");
  if (!ws_convergent(p)) throw std::domain_error("weber_schafheitlin_closed: integral diverges");
  if (is_nonpositive_integer(p.nu + 1.0)) {
    throw std::domain_error("weber_schafheitlin_closed: Gamma pole at nu + 1");
  }

  const double lam = p.lambda_exp;
  const double first = 0.5 * (p.nu + p.mu - lam + 1.0);
  const double second = 0.5 * (p.nu - p.mu - lam + 1.0);
  const double ratio = p.b_arg / p.a_arg;
  const double pref = std::pow(p.b_arg, p.nu) * std::pow(2.0, -lam) *
                      std::pow(p.a_arg, lam - p.nu - 1.0) * gamma_fn(first) *
                      rgamma(0.5 * (-p.nu + p.mu + lam + 1.0)) * rgamma(1.0 + p.nu);
  if (pref == 0.0) return 0.0;
  return pref * hyp2f1(first, second, p.nu + 1.0, ratio * ratio);
}

QuadResult weber_schafheitlin_quad(const WSParams& p, double t_max, double tol) {
  if (!ws_convergent(p)) throw std::domain_error("weber_schafheitlin_quad: integral diverges");
  if (p.mu < 0.0 || p.nu < 0.0) {
    throw std::domain_error("weber_schafheitlin_quad: Bessel orders must be non-negative");
  }
  if (!(t_max > 0.0) || !(tol > 0.0)) {
    throw std::domain_error("weber_schafheitlin_quad: t_max and tol must be positive");
  }
  const double a = p.a_arg;
  const double b = p.b_arg;
  const double lam = p.lambda_exp;
  // tanh-sinh nodes crowd the origin, where t^{-lambda} J J is inf * 0 in
  // floating point; there the leading small-argument term is exact to O(t^2).
  const double log_lead = p.mu * std::log(0.5 * a) + p.nu * std::log(0.5 * b) - std::lgamma(p.mu + 1.0) -
                          std::lgamma(p.nu + 1.0);
  auto integrand = [&](double t) {
    if (a * t < 1e-8) return std::exp(log_lead + (p.mu + p.nu - lam) * std::log(t));
    return std::pow(t, -lam) * bessel_j(p.mu, a * t) * bessel_j(p.nu, b * t);
  };

  QuadResult out;
  double total = 0.0;
  double err_sum = 0.0;

  // Near the origin the integrand behaves like t^{mu+nu-lambda}, possibly
  // singular; tanh-sinh never samples the endpoint.
  const double t_head = std::min(t_max, 1.0 / a);
  {
    boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0.0;
    double l1 = 0.0;
    total += ts.integrate(integrand, 0.0, t_head, 1e-14, &err, &l1);
    err_sum += err * std::max(1.0, l1);
  }
  const double panel = 2.0 * std::numbers::pi / (a + b);
  const double panel_tol = 1e-13;
  for (double lo = t_head; lo < t_max;) {
    const double hi = std::min(t_max, lo + panel);
    double err = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, lo, hi, 6,
                                                                           panel_tol, &err);
    err_sum += err;
    lo = hi;
  }

  // Tail: J_mu(at) J_nu(bt) = Re(A) Re(B) = (Re(AB) + Re(A conj B)) / 2 with
  // A ~ sqrt(2/(pi a t)) e^{i(at + phi_mu)} sum_j i^j a_j(mu) (at)^{-j}.
  constexpr std::size_t kTerms = 9;
  const auto hm = hankel_coefficients<kTerms + 1>(p.mu);
  const auto hn = hankel_coefficients<kTerms + 1>(p.nu);
  const std::complex<double> I(0.0, 1.0);
  auto ipow = [&](std::size_t k) { return std::pow(I, static_cast<int>(k)); };
  std::array<std::complex<double>, kTerms> c_plus{};
  std::array<std::complex<double>, kTerms> c_minus{};
  for (std::size_t j = 0; j < kTerms; ++j) {
    for (std::size_t k = 0; j + k < kTerms; ++k) {
      const std::complex<double> am = ipow(j) * hm[j] * std::pow(a, -static_cast<double>(j));
      const double bk = hn[k] * std::pow(b, -static_cast<double>(k));
      c_plus[j + k] += am * ipow(k) * bk;
      c_minus[j + k] += am * std::conj(ipow(k)) * bk;
    }
  }
  const double phi_mu = -0.5 * p.mu * std::numbers::pi - 0.25 * std::numbers::pi;
  const double phi_nu = -0.5 * p.nu * std::numbers::pi - 0.25 * std::numbers::pi;
  const std::complex<double> e_plus = std::exp(I * (phi_mu + phi_nu));
  const std::complex<double> e_minus = std::exp(I * (phi_mu - phi_nu));
  const double scale = 1.0 / (std::numbers::pi * std::sqrt(a * b));
  std::complex<double> acc = 0.0;
  double tail_err = 0.0;
  for (std::size_t n = 0; n < kTerms; ++n) {
    const double s = lam + 1.0 + static_cast<double>(n);
    const OscTail tp = oscillatory_tail(s, a + b, t_max);
    const OscTail tm = oscillatory_tail(s, a - b, t_max);
    acc += e_plus * c_plus[n] * tp.value + e_minus * c_minus[n] * tm.value;
    tail_err += std::abs(c_plus[n]) * tp.error + std::abs(c_minus[n]) * tm.error;
  }
  // First omitted Hankel order, bounded without oscillatory cancellation.
  double omitted = 0.0;
  for (std::size_t j = 0; j <= kTerms; ++j) {
    const std::size_t k = kTerms - j;
    omitted += std::abs(hm[j]) * std::pow(a, -static_cast<double>(j)) * std::abs(hn[k]) *
               std::pow(b, -static_cast<double>(k));
  }
  const double s_omit = lam + 1.0 + static_cast<double>(kTerms);
  tail_err += 2.0 * omitted * std::pow(t_max, 1.0 - s_omit) / (s_omit - 1.0);

  out.tail = scale * acc.real();
  out.value = total + out.tail;
  out.error = err_sum + scale * tail_err;
  out.converged = std::isfinite(out.value) && out.error <= tol;
  return out;
}

}  // namespace fracpm::specfun
