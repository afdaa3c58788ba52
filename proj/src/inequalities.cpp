#include "fracpm/inequalities.hpp"

#include "fracpm/evolve.hpp"
#include "fracpm/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fracpm::inequalities {

double fractional_energy(const Field& f, double alpha) {
  return fracops::inner(f, fracops::frac_laplacian(f, alpha));
}

SVGap stroock_varopoulos_gap(const Field& w, double q, double alpha) {
  if (!(q > 1.0)) throw std::domain_error("Stroock-Varopoulos needs q > 1");
  Field power(w.grid), half(w.grid);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double a = std::abs(w[i]);
    power[i] = (w[i] > 0.0 ? 1.0 : (w[i] < 0.0 ? -1.0 : 0.0)) * std::pow(a, q - 1.0);
    half[i] = std::pow(a, 0.5 * q);
  }
  SVGap gap;
  gap.lhs = fracops::inner(power, fracops::frac_laplacian(w, alpha));
  gap.rhs = 4.0 * (q - 1.0) / (q * q) * fractional_energy(half, alpha);
  return gap;
}

double nash_ratio(const Field& v, double alpha) {
  const double l1 = evolve::lp_norm(v, 1.0);
  if (l1 == 0.0) throw std::domain_error("Nash ratio of the zero field");
  const double l2 = evolve::lp_norm(v, 2.0);
  const double s = alpha / v.grid.d;
  // Normalise by the L2 norm first to keep the powers in range.
  return fractional_energy(v, alpha) / (l2 * l2) * std::pow(l1 / l2, 2.0 * s);
}

Grid nash_grid(int d) { return d == 1 ? Grid{1, 2048, 32.0} : Grid{2, 256, 32.0}; }

std::vector<NamedField> nash_battery(const Grid& g) {
  std::vector<NamedField> out;
  auto radius2 = [](std::span<const double> x, double shift) {
    double r2 = (x[0] - shift) * (x[0] - shift);
    for (std::size_t j = 1; j < x.size(); ++j) r2 += x[j] * x[j];
    return r2;
  };
  for (double sigma : {0.5, 1.0}) {
    out.push_back({"gaussian(sigma=" + std::to_string(sigma).substr(0, 3) + ")",
                   sample(g, [&](std::span<const double> x) { return std::exp(-0.5 * radius2(x, 0) / (sigma * sigma)); })});
  }
  for (double k : {1.0, 1.5, 2.0, 3.0, 4.0}) {
    out.push_back({"bump(s=1,k=" + std::to_string(k).substr(0, 3) + ")",
                   sample(g, [&](std::span<const double> x) { return std::pow(std::max(0.0, 1.0 - radius2(x, 0)), k); })});
  }
  out.push_back({"bump(s=2,k=2)", sample(g, [&](std::span<const double> x) {
                   return std::pow(std::max(0.0, 1.0 - 0.25 * radius2(x, 0)), 2.0);
                 })});
  for (double sep : {1.5, 3.0}) {
    out.push_back({"two-bump(sep=" + std::to_string(sep).substr(0, 3) + ")", sample(g, [&](std::span<const double> x) {
                     return std::pow(std::max(0.0, 1.0 - radius2(x, -0.5 * sep)), 2.0) +
                            0.5 * std::pow(std::max(0.0, 1.0 - radius2(x, 0.5 * sep)), 2.0);
                   })});
  }
  return out;
}

NashMeasurement measure_nash_constant(double alpha, int d) {
  const Grid g = nash_grid(d);
  NashMeasurement m;
  m.min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& item : nash_battery(g)) {
    const double r = nash_ratio(item.field, alpha);
    if (r < m.min_ratio) {
      m.min_ratio = r;
      m.argmin = item.name;
    }
  }
  m.C_N = 1.0 / m.min_ratio;
  return m;
}

GNExponents gn_exponents(double p, double m, int d, double alpha) {
  if (!(p > 1.0) || !(p >= m - 1.0)) throw std::domain_error("Gagliardo-Nirenberg needs p > 1 and p >= m - 1");
  if (!(m > 1.0) || d < 1 || !(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("invalid (m, d, alpha)");
  GNExponents e{p, m, d, alpha, 0.0, 0.0, 0.0};
  e.r = p + m - 1.0;
  e.a = p / (p - 1.0) * (d * (e.r - 1.0) + alpha) / d;
  e.b = e.a - e.r;
  return e;
}

double gn_b_direct(const GNExponents& e) {
  return (e.d * (e.m - 1.0) + e.p * e.alpha) / (e.d * (e.p - 1.0));
}

GNGap gn_gap(const Field& u, const GNExponents& e, double C_N) {
  Field v(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = std::pow(std::abs(u[i]), 0.5 * e.r);
  GNGap gap;
  gap.lhs = std::pow(evolve::lp_norm(u, e.p), e.a);
  gap.rhs = C_N * fractional_energy(v, e.alpha) * std::pow(evolve::lp_norm(u, 1.0), e.b);
  return gap;
}

double k_opt(double p, double m, double C_N) {
  return 4.0 * (m - 1.0) * p * (p - 1.0) / (C_N * (p + m - 1.0) * (p + m - 1.0));
}

double preliminary_constant(double p, double alpha, double m, int d, double C_N) {
  const GNExponents e = gn_exponents(p, m, d, alpha);
  const double K = k_opt(p, m, C_N);
  return std::pow(K * (e.a / p - 1.0), -1.0 / (e.a - p));
}

int moser_start_index(double m) {
  int k = 1;
  while (std::ldexp(1.0, k) < m - 1.0) ++k;
  return k;
}

double moser_mu(int n, double alpha, double m, int d) {
  return (1.0 - std::ldexp(1.0, -n)) / (alpha / d + m - 1.0);
}

std::vector<MoserState> moser_sequence(double alpha, double m, int d, double C_N, double kappa_start,
                                       int k_start, int n_max) {
  if (!(kappa_start > 0.0)) throw std::domain_error("kappa_start must be positive");
  std::vector<MoserState> seq;
  double l = std::log(kappa_start);
  for (int n = k_start; n <= n_max; ++n) {
    MoserState s;
    s.n = n;
    s.log_kappa = l;
    s.kappa = std::exp(l);
    s.mu = moser_mu(n, alpha, m, d);
    s.K = k_opt(std::ldexp(1.0, n + 1), m, C_N);
    s.C_N = C_N;
    seq.push_back(s);

    const double two_n = std::ldexp(1.0, n);
    const double q = alpha / d + (m - 1.0) / two_n;
    const double power = two_n * (2.0 * alpha / d + (m - 1.0) / two_n);
    const double num = power * s.mu + 1.0;
    const double e = std::ldexp(1.0, -n - 1) / q;
    l = e * (std::log(num / (s.K * q)) + power * l);
  }
  return seq;
}

double decay_time_exponent(double alpha, double m, int d, double p) {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return d / (d * (m - 1.0) + alpha) * (1.0 - inv_p);
}

double decay_mass_exponent(double alpha, double m, int d, double p) {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return (d * (m - 1.0) * inv_p + alpha) / (d * (m - 1.0) + alpha);
}

double decay_constant(double alpha, double m, int d, double C_N, int n_max) {
  const int k = moser_start_index(m);
  const double kappa_k = preliminary_constant(std::ldexp(1.0, k), alpha, m, d, C_N);
  double c = 1.0;
  for (const MoserState& s : moser_sequence(alpha, m, d, C_N, kappa_k, k, n_max)) c = std::max(c, s.kappa);
  return c;
}

GronwallBound::GronwallBound(double K, double gamma, std::vector<double> t, std::vector<double> g)
    : K_(K), gamma_(gamma), t_(std::move(t)), g_(std::move(g)) {}

double GronwallBound::g_at(double t) const {
  if (t <= t_.front()) return g_.front();
  if (t >= t_.back()) return g_.back();
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - t_.begin());
  const double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
  return (1.0 - w) * g_[i - 1] + w * g_[i];
}

double GronwallBound::operator()(double t) const {
  return std::pow(K_ * gamma_ * g_at(t), -1.0 / gamma_);
}

GronwallBound integral_gronwall_bound(double K, double gamma, std::vector<double> t, std::vector<double> g) {
  if (!(K > 0.0) || !(gamma > 0.0)) throw std::domain_error("Gronwall bound needs K > 0 and gamma > 0");
  if (t.size() != g.size() || t.size() < 2) throw std::domain_error("Gronwall table needs >= 2 matching samples");
  if (t.front() != 0.0 || g.front() != 0.0) throw std::domain_error("Gronwall table must start at t = 0 with g(0) = 0");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw std::domain_error("Gronwall table times must increase strictly");
    if (!(g[i] > g[i - 1])) throw std::domain_error("Gronwall table g must be increasing");
  }
  return GronwallBound(K, gamma, std::move(t), std::move(g));
}

namespace {

// Cumulative trapezoidal integral of f^{gamma+1} dg.
std::vector<double> cumulative_dissipation(const std::vector<double>& f, const std::vector<double>& g, double gamma) {
  std::vector<double> c(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i) {
    const double a = std::pow(f[i - 1], gamma + 1.0);
    const double b = std::pow(f[i], gamma + 1.0);
    c[i] = c[i - 1] + 0.5 * (a + b) * (g[i] - g[i - 1]);
  }
  return c;
}

void check_table(const std::vector<double>& t, const std::vector<double>& f, const std::vector<double>& g) {
  if (t.size() != f.size() || t.size() != g.size() || t.size() < 2) {
    throw std::domain_error("Gronwall tables must have matching sizes >= 2");
  }
}

}  // namespace

double gronwall_hypothesis_residual(const std::vector<double>& t, const std::vector<double>& f,
                                    const std::vector<double>& g, double K, double gamma) {
  check_table(t, f, g);
  const std::vector<double> c = cumulative_dissipation(f, g, gamma);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < f.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) worst = std::max(worst, f[j] + K * (c[j] - c[i]) - f[i]);
  }
  return worst;
}

double gronwall_fit_k(const std::vector<double>& t, const std::vector<double>& f, const std::vector<double>& g,
                      double gamma) {
  check_table(t, f, g);
  const std::vector<double> c = cumulative_dissipation(f, g, gamma);
  double k = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < f.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double diss = c[j] - c[i];
      if (diss > 0.0) k = std::min(k, (f[i] - f[j]) / diss);
    }
  }
  return k;
}

Field random_smooth_field(const Grid& g, std::uint64_t seed, int modes, double offset) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  struct Mode {
    double k[2];
    double phase;
    double amp;
  };
  std::vector<Mode> ms;
  for (int i = 0; i < modes; ++i) {
    const double wavelength = g.l / 32.0 * std::pow(8.0, uniform());
    const double angle = 2.0 * std::numbers::pi * uniform();
    const double kk = 2.0 * std::numbers::pi / wavelength;
    Mode m{{kk * std::cos(angle), kk * std::sin(angle)}, 2.0 * std::numbers::pi * uniform(), 0.0};
    if (g.d == 1) m.k[0] = kk;
    m.amp = (2.0 * uniform() - 1.0) / modes;
    ms.push_back(m);
  }
  const double width = g.l / 16.0;
  return sample(g, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    double s = offset;
    for (const Mode& m : ms) {
      double ph = m.phase + m.k[0] * x[0];
      if (x.size() > 1) ph += m.k[1] * x[1];
      s += m.amp * std::cos(ph);
    }
    return s * std::exp(-0.5 * r2 / (width * width));
  });
}

}  // namespace fracpm::inequalities
