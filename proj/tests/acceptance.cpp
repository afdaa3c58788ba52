// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include "fracpm/barenblatt.hpp"
#include "fracpm/evolve.hpp"
#include "fracpm/inequalities.hpp"
#include "fracpm/specfun.hpp"
#include "fracpm/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

using namespace fracpm;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what) {
  std::printf("[%s] C%-2d %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct NamedRun {
  std::string name;
  evolve::SolverConfig cfg;
  bool nonnegative = true;
  evolve::Trajectory tr;
  double seconds = 0.0;
};

double barenblatt_l1_error(const NamedRun& r) {
  const Field& u = r.tr.snapshots.back().u;
  const barenblatt::ProfileParams p{r.cfg.alpha, r.cfg.m, r.cfg.grid.d, 1.0};
  const double t = r.tr.snapshots.back().t;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < r.cfg.grid.n; ++i) {
    const double ex = barenblatt::self_similar_radial(t, std::abs(r.cfg.grid.coordinate(i)), p);
    num += std::abs(u[i] - ex);
    den += std::abs(ex);
  }
  return num / den;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int main() {
  // 1. Getoor identity through the closed-form chain.
  {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::vector<std::pair<double, int>> cases{{0.5, 1}, {1.0, 1}};
    for (double a : {0.5, 1.0, 1.5}) {
      for (int d : {2, 3}) cases.emplace_back(a, d);
    }
    for (auto [a, d] : cases) worst = std::max(worst, barenblatt::getoor_check(a, d, 0.99, 199).max_residual);
    const double secs = seconds_since(t0);
    line(1, worst <= 1e-6 && secs < 5.0,
         fmt("Getoor identity: max residual %.3g (tol 1e-6) over 8 (alpha,d) cases, runtime %.3f s (< 5 s)", worst,
             secs));
  }

  // 2. Classical-limit constants and the self-similar ODE.
  {
    const auto s = barenblatt::scaling_constants(2.0, 2.0, 1);
    const double ek = std::abs(s.k - 1.0 / 6.0), el = std::abs(s.lambda - 1.0 / 3.0);
    const barenblatt::ProfileParams p{2.0, 2.0, 1, 1.0};
    double res = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double y = -0.999 + 0.001998 * i;
      // F from the library, derivatives of k(1 - y^2).
      const double F = barenblatt::profile_radial(std::abs(y), p);
      const double F1 = -2.0 * s.k * y, F2 = -2.0 * s.k;
      res = std::max(res, std::abs(-s.lambda * (F + y * F1) - (F1 * F1 + F * F2)));
    }
    line(2, ek <= 1e-12 && el <= 1e-12 && res <= 1e-12,
         fmt("classical limit: |k-1/6| %.3g, |lambda-1/3| %.3g, ODE residual %.3g (tol 1e-12)", ek, el, res));
  }

  // 3. Inside-ball pressure gradient.
  {
    std::vector<double> e;
    for (int n : {256, 512, 1024, 2048}) e.push_back(suites::pressure_gradient_error(1.0, n));
    bool mono = true;
    for (std::size_t i = 1; i < e.size(); ++i) mono = mono && e[i] < e[i - 1];
    line(3, e[2] <= 5e-3 && mono,
         fmt("pressure gradient: sup error %.3g at N=1024 (tol 5e-3); N=256..2048: %.3g %.3g %.3g %.3g, %s", e[2], e[0],
             e[1], e[2], e[3], mono ? "monotone" : "NOT monotone"));
  }

  // Solver runs shared by criteria 4-8.
  std::vector<NamedRun> runs;
  auto add = [&](std::string name, evolve::SolverConfig c, bool nonneg) {
    NamedRun r{std::move(name), c, nonneg, {}, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    r.tr = evolve::run(r.cfg);
    r.seconds = seconds_since(t0);
    runs.push_back(std::move(r));
  };
  {
    evolve::SolverConfig c;
    c.grid = Grid{1, 512, 16.0};
    c.delta = c.eps = 1e-4;
    c.t_end = 2.0;
    c.save_every = 0.1;
    c.ic = evolve::IcBarenblatt{1.0, 0.0, 1.0};
    add("barenblatt N=512", c, true);
    c.grid.n = 1024;
    c.delta = c.eps = 5e-5;
    add("barenblatt N=1024", c, true);
  }
  {
    evolve::SolverConfig c;
    c.grid = Grid{1, 2048, 32.0};
    const double sigma = 0.1;
    c.ic = evolve::IcGaussian{sigma, 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi)), 0.0};
    c.t_end = 10.0;
    for (int k = 0; k <= 20; ++k) c.save_times.push_back(std::pow(10.0, k / 20.0));
    add("gaussian decay", c, true);
  }
  {
    evolve::SolverConfig c;
    c.grid = Grid{1, 512, 16.0};
    c.t_end = 2.0;
    c.save_every = 0.1;
    c.ic = evolve::IcSignedPair{};
    add("signed pair", c, false);
    c.ic = evolve::IcGaussian{};
    c.alpha = 1.5;
    c.m = 2.5;
    add("gaussian alpha=1.5 m=2.5", c, true);
    c.alpha = 0.5;
    c.m = 2.0;
    add("gaussian alpha=0.5 m=2", c, true);
    c.alpha = 1.0;
    c.grid = Grid{2, 64, 8.0};
    c.t_end = 1.0;
    add("gaussian 2-D", c, true);
  }
  bool all_ok = true;
  for (const auto& r : runs) all_ok = all_ok && !r.tr.aborted;

  // 4. Self-similar tracking.
  {
    const double e1 = barenblatt_l1_error(runs[0]), e2 = barenblatt_l1_error(runs[1]);
    line(4, all_ok && e1 <= 1e-2 && e2 < e1 && runs[0].seconds < 60.0,
         fmt("self-similar tracking t=1->2: rel L1 %.3g at N=512 (tol 1e-2), %.3g at N=1024 with delta,eps halved, "
             "runtime %.2f s (< 60 s)",
             e1, e2, runs[0].seconds));
  }

  // 5. Mass conservation.
  {
    double drift = 0.0;
    for (const auto& r : runs) {
      const double m0 = r.tr.records.front().mass;
      const double scale = std::abs(m0) > 0.0 ? std::abs(m0) : evolve::lp_norm(r.tr.snapshots.front().u, 1.0);
      for (const auto& rec : r.tr.records) drift = std::max(drift, std::abs(rec.mass - m0) / scale);
    }
    line(5, drift <= 1e-8, fmt("mass conservation: max relative drift %.3g over %zu runs (tol 1e-8)", drift, runs.size()));
  }

  // 6. L^p monotonicity.
  {
    double worst = 0.0;
    for (const auto& r : runs) {
      for (std::size_t k = 1; k < r.tr.records.size(); ++k) {
        for (std::size_t j = 0; j < r.cfg.p_list.size(); ++j) {
          const double prev = r.tr.records[k - 1].lp_norms[j];
          worst = std::max(worst, (r.tr.records[k].lp_norms[j] - prev) / prev);
        }
      }
    }
    line(6, worst <= 1e-6,
         fmt("L^p monotonicity p=1,2,4,inf: max relative increase %.3g over %zu runs incl. signed data (tol 1e-6)",
             worst, runs.size()));
  }

  // 7. Decay exponents and the assembled constant.
  {
    const NamedRun& r = runs[2];
    std::vector<double> lt, l2, linf;
    const double M = r.tr.records.front().mass;
    const double C_N = inequalities::measure_nash_constant(1.0, 1).C_N;
    const double C = inequalities::decay_constant(1.0, 2.0, 1, C_N);
    const double C2 = inequalities::preliminary_constant(2.0, 1.0, 2.0, 1, C_N);
    double pref_inf = 0.0, pref_2 = 0.0;
    for (const auto& rec : r.tr.records) {
      if (rec.t < 1.0 - 1e-12) continue;
      lt.push_back(std::log(rec.t));
      l2.push_back(std::log(rec.lp_norms[1]));
      linf.push_back(std::log(rec.lp_norms[3]));
    }
    for (const auto& rec : r.tr.records) {
      if (rec.t <= 0.0) continue;
      auto prefactor = [&](double norm, double p) {
        return norm * std::pow(rec.t, inequalities::decay_time_exponent(1.0, 2.0, 1, p)) /
               std::pow(M, inequalities::decay_mass_exponent(1.0, 2.0, 1, p));
      };
      pref_inf = std::max(pref_inf, prefactor(rec.lp_norms[3], evolve::kInf));
      pref_2 = std::max(pref_2, prefactor(rec.lp_norms[1], 2.0));
    }
    const double s_inf = fit_slope(lt, linf), s_2 = fit_slope(lt, l2);
    const bool ok = std::abs(s_inf + 0.5) <= 0.025 && std::abs(s_2 + 0.25) <= 0.0125 && pref_inf <= C && pref_2 <= C2;
    line(7, ok,
         fmt("decay on [1,10]: slope Linf %.4f (-1/2 +-5%%), slope L2 %.4f (-1/4 +-5%%); prefactors Linf %.3f <= C %.3f, "
             "L2 %.3f <= C_2 %.3f (measured C_N %.4f, a lower-bound estimate)",
             s_inf, s_2, pref_inf, C, pref_2, C2, C_N));
  }

  // 8. Positivity.
  {
    double mn = 0.0;
    for (const auto& r : runs) {
      if (!r.nonnegative) continue;
      for (const auto& rec : r.tr.records) mn = std::min(mn, rec.min_u);
    }
    line(8, mn >= -1e-10, fmt("positivity: min u %.3g over runs with nonnegative data (tol -1e-10)", mn));
  }

  // 9. Stroock-Varopoulos.
  {
    const std::uint64_t seed = suites::SuiteOptions{}.seed;
    const double margin = suites::sv_battery_min_margin(seed, 100);
    const double eq = suites::sv_alpha2_max_relative_gap(seed, 20);
    line(9, margin >= -1e-9 && eq <= 1e-8,
         fmt("Stroock-Varopoulos: min margin %.3g on 100 fields (>= -1e-9), alpha=2 relative gap %.3g (tol 1e-8)", margin,
             eq));
  }

  // 10. Moser recursion.
  {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool finite = true;
    for (auto [a, m, d] : {std::tuple{1.0, 2.0, 1}, std::tuple{0.5, 2.0, 1}, std::tuple{1.5, 2.5, 2}}) {
      const double C_N = inequalities::measure_nash_constant(a, d).C_N;
      const int k = inequalities::moser_start_index(m);
      const double k0 = inequalities::preliminary_constant(std::ldexp(1.0, k), a, m, d, C_N);
      const auto seq = inequalities::moser_sequence(a, m, d, C_N, k0, k, 60);
      finite = finite && std::isfinite(seq.back().kappa);
      worst = std::max(worst, std::abs(seq.back().log_kappa - seq[50 - k].log_kappa));
    }
    const double secs = seconds_since(t0);
    line(10, finite && worst <= 1e-6 && secs < 1.0,
         fmt("Moser recursion: kappa_60 finite, max |log k60 - log k50| %.3g (tol 1e-6), runtime %.3f s (< 1 s)", worst,
             secs));
  }

  // 11. Interface exponent.
  {
    double worst = 0.0;
    for (auto [a, m] : {std::pair{1.0, 2.0}, std::pair{0.5, 1.5}, std::pair{1.5, 3.0}}) {
      const double e = barenblatt::interface_holder_exponent(a, m);
      worst = std::max(worst, std::abs(barenblatt::interface_exponent_fit({a, m, 1, 1.0}) - e) / e);
    }
    line(11, worst <= 0.02, fmt("interface exponent: max relative deviation %.3g (tol 2%%)", worst));
  }

  // 12. Weber-Schafheitlin.
  {
    double worst = 0.0;
    for (const auto& p : suites::ws_battery(suites::SuiteOptions{}.seed, 20)) {
      worst = std::max(worst, std::abs(specfun::weber_schafheitlin_closed(p) -
                                       specfun::weber_schafheitlin_quad(p, 200.0, 1e-9).value));
    }
    line(12, worst <= 1e-6, fmt("Weber-Schafheitlin: max |closed - quadrature| %.3g on 20 sets (tol 1e-6)", worst));
  }

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
