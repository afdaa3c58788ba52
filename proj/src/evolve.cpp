#include "fracpm/evolve.hpp"

#include "fracpm/barenblatt.hpp"
#include "fracpm/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace fracpm::evolve {

double g_eps(double u, double m, double eps) {
  if (u == 0.0) return 0.0;
  const double s = u > 0.0 ? 1.0 : -1.0;
  if (eps == 0.0) return s * std::pow(std::abs(u), m - 1.0);
  return s * (std::pow(u * u + eps * eps, 0.5 * (m - 1.0)) - std::pow(eps, m - 1.0));
}

void SolverConfig::validate() const {
  grid.validate();
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("alpha must lie in (0, 2) for the solver");
  if (!(m > 1.0)) throw std::invalid_argument("m must exceed 1");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(save_every > 0.0)) throw std::invalid_argument("save_every must be positive");
  if (!(t_end > start_time())) throw std::invalid_argument("t_end must exceed the start time");
  for (double p : p_list) {
    if (!(p >= 1.0)) throw std::invalid_argument("p_list entries must be >= 1");
  }
  if (const auto* b = std::get_if<IcBarenblatt>(&ic)) {
    if (!(b->t0 > 0.0)) throw std::invalid_argument("ic.t0 must be positive");
    if (!(b->R > 0.0) && !(b->mass > 0.0)) throw std::invalid_argument("ic.R or ic.mass must be positive");
  }
  if (const auto* g = std::get_if<IcGaussian>(&ic)) {
    if (!(g->sigma > 0.0)) throw std::invalid_argument("ic.sigma must be positive");
  }
  if (const auto* s = std::get_if<IcSignedPair>(&ic)) {
    if (!(s->sigma > 0.0)) throw std::invalid_argument("ic.sigma must be positive");
  }
}

double SolverConfig::start_time() const {
  if (const auto* b = std::get_if<IcBarenblatt>(&ic)) return b->t0;
  return 0.0;
}

bool admissible(double alpha, double m, int d) {
  if (alpha <= 1.0) return m > 1.0 + (1.0 - alpha) / d;
  return m > 3.0 - 2.0 / alpha;
}

std::vector<std::string> config_warnings(const SolverConfig& cfg) {
  std::vector<std::string> w;
  if (!admissible(cfg.alpha, cfg.m, cfg.grid.d)) {
    std::ostringstream os;
    os << "m = " << cfg.m << " is outside the existence range for alpha = " << cfg.alpha
       << ", d = " << cfg.grid.d << " (need "
       << (cfg.alpha <= 1.0 ? "m > 1 + (1-alpha)/d" : "m > 3 - 2/alpha") << ")";
    w.push_back(os.str());
  }
  return w;
}

namespace {

Field read_field_file(const Grid& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open initial-condition file: " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::string tok, last;
    while (ls >> tok) last = tok;
    if (last.empty()) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(last, &used);
      if (used == last.size()) values.push_back(v);
    } catch (const std::exception&) {
      // header or comment line
    }
  }
  if (values.size() != g.size()) {
    throw std::runtime_error("initial-condition file " + path + " has " + std::to_string(values.size()) +
                             " values, grid needs " + std::to_string(g.size()));
  }
  return Field(g, std::move(values));
}

}  // namespace

Field initial_field(const SolverConfig& cfg) {
  const Grid& g = cfg.grid;
  return std::visit(
      [&](const auto& ic) -> Field {
        using T = std::decay_t<decltype(ic)>;
        if constexpr (std::is_same_v<T, IcBarenblatt>) {
          barenblatt::ProfileParams p{cfg.alpha, cfg.m, g.d, ic.R};
          if (ic.mass > 0.0) p.R = barenblatt::radius_for_mass(ic.mass, cfg.alpha, cfg.m, g.d);
          return sample(g, [&](std::span<const double> x) { return barenblatt::self_similar(ic.t0, x, p); });
        } else if constexpr (std::is_same_v<T, IcGaussian>) {
          return sample(g, [&](std::span<const double> x) {
            double r2 = 0.0;
            for (double xi : x) r2 += (xi - ic.center) * (xi - ic.center);
            return ic.amplitude * std::exp(-0.5 * r2 / (ic.sigma * ic.sigma));
          });
        } else if constexpr (std::is_same_v<T, IcFile>) {
          return read_field_file(g, ic.path);
        } else {
          return sample(g, [&](std::span<const double> x) {
            auto bump = [&](double c) {
              double r2 = (x[0] - c) * (x[0] - c);
              for (std::size_t j = 1; j < x.size(); ++j) r2 += x[j] * x[j];
              return std::exp(-0.5 * r2 / (ic.sigma * ic.sigma));
            };
            return ic.amplitude * (bump(-0.5 * ic.separation) - ic.ratio * bump(0.5 * ic.separation));
          });
        }
      },
      cfg.ic);
}

namespace {

std::size_t stride(const Grid& g, int axis) {
  return (g.d == 2 && axis == 0) ? static_cast<std::size_t>(g.n) : 1;
}

// Index of the neighbour of node idx shifted by `shift` along `axis`.
std::size_t neighbour(const Grid& g, std::size_t idx, int axis, int shift) {
  const std::size_t s = stride(g, axis);
  const int i = static_cast<int>((idx / s) % static_cast<std::size_t>(g.n));
  const int j = ((i + shift) % g.n + g.n) % g.n;
  return idx + (static_cast<std::ptrdiff_t>(j) - i) * static_cast<std::ptrdiff_t>(s);
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return a > 0.0 ? std::min(a, b) : std::max(a, b);
}

// Godunov flux for f(u) = -v |u| between states ul and ur.
double godunov(double ul, double ur, double v) {
  const double fl = -v * std::abs(ul);
  const double fr = -v * std::abs(ur);
  const bool straddles = std::min(ul, ur) < 0.0 && std::max(ul, ur) > 0.0;
  if (ul <= ur) {
    double f = std::min(fl, fr);
    return straddles ? std::min(f, 0.0) : f;
  }
  double f = std::max(fl, fr);
  return straddles ? std::max(f, 0.0) : f;
}

Field apply_g(const Field& u, const SolverConfig& cfg) {
  Field g(u.grid);
  for (std::size_t i = 0; i < u.size(); ++i) g[i] = g_eps(u[i], cfg.m, cfg.eps);
  return g;
}

// Face velocities: component j lives at x + (h/2) e_j.
VectorField face_velocity(const Field& u, const SolverConfig& cfg) {
  return fracops::frac_gradient_staggered(apply_g(u, cfg), cfg.alpha);
}

Field flux_term(const Field& u, const VectorField& v) {
  const Grid& g = u.grid;
  const double h = g.spacing();
  Field out(g);
  std::vector<double> slope(u.size()), face(u.size());
  for (int axis = 0; axis < g.d; ++axis) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double um = u[neighbour(g, i, axis, -1)];
      const double up = u[neighbour(g, i, axis, 1)];
      slope[i] = minmod(u[i] - um, up - u[i]);
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      const std::size_t ip = neighbour(g, i, axis, 1);
      face[i] = godunov(u[i] + 0.5 * slope[i], u[ip] - 0.5 * slope[ip], v[axis][i]);
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      out[i] -= (face[i] - face[neighbour(g, i, axis, -1)]) / h;
    }
  }
  return out;
}

Field discrete_laplacian(const Field& u) {
  const Grid& g = u.grid;
  const double h2 = g.spacing() * g.spacing();
  Field out(g);
  for (std::size_t i = 0; i < u.size(); ++i) {
    double s = 0.0;
    for (int axis = 0; axis < g.d; ++axis) {
      s += u[neighbour(g, i, axis, 1)] - 2.0 * u[i] + u[neighbour(g, i, axis, -1)];
    }
    out[i] = s / h2;
  }
  return out;
}

// Exact flow of u_t = delta * (3-point Laplacian) u over time tau.
Field heat_step(const Field& u, double delta, double tau) {
  if (delta == 0.0 || tau == 0.0) return u;
  const Grid& g = u.grid;
  const double h = g.spacing();
  Spectrum s = forward(u);
  for_each_mode(g, [&](std::size_t idx, int k0, int k1) {
    double sym = 2.0 - 2.0 * std::cos(g.wavenumber(k0) * h);
    if (g.d == 2) sym += 2.0 - 2.0 * std::cos(g.wavenumber(k1) * h);
    s.coeffs[idx] *= std::exp(-delta * tau * sym / (h * h));
  });
  return inverse(s);
}

bool all_finite(const Field& u) {
  return std::all_of(u.values.begin(), u.values.end(), [](double x) { return std::isfinite(x); });
}

double max_abs(const Field& u) {
  double m = 0.0;
  for (double x : u.values) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> save_schedule(const SolverConfig& cfg) {
  const double t0 = cfg.start_time();
  std::vector<double> s;
  if (!cfg.save_times.empty()) {
    for (double t : cfg.save_times) {
      if (t > t0 && t < cfg.t_end) s.push_back(t);
    }
  } else {
    for (long k = 1;; ++k) {
      const double t = t0 + k * cfg.save_every;
      if (t >= cfg.t_end * (1.0 - 1e-12)) break;
      s.push_back(t);
    }
  }
  s.push_back(cfg.t_end);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Field rhs(const Field& u, const SolverConfig& cfg) {
  Field out = flux_term(u, face_velocity(u, cfg));
  if (cfg.delta > 0.0) {
    const Field lap = discrete_laplacian(u);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += cfg.delta * lap[i];
  }
  return out;
}

Field rhs_spectral(const Field& u, const SolverConfig& cfg) {
  VectorField v = fracops::frac_gradient(apply_g(u, cfg), cfg.alpha);
  for (auto& c : v) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= std::abs(u[i]);
    c = fracops::dealias(c);
  }
  Field out = fracops::divergence(v);
  if (cfg.delta > 0.0) {
    const Field lap = fracops::laplacian(u);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += cfg.delta * lap[i];
  }
  return out;
}

double lp_norm(const Field& f, double p) {
  const double mx = max_abs(f);
  if (std::isinf(p) || mx == 0.0) return mx;
  double s = 0.0;
  for (double x : f.values) s += std::pow(std::abs(x) / mx, p);
  return mx * std::pow(s * f.grid.cell_volume(), 1.0 / p);
}

double mass(const Field& f) {
  double s = 0.0;
  for (double x : f.values) s += x;
  return s * f.grid.cell_volume();
}

DiagnosticsRecord diagnose(const Field& u, double t, double dt, const std::vector<double>& p_list) {
  DiagnosticsRecord r;
  r.t = t;
  r.mass = mass(u);
  for (double p : p_list) r.lp_norms.push_back(lp_norm(u, p));
  const auto [mn, mx] = std::minmax_element(u.values.begin(), u.values.end());
  r.min_u = *mn;
  r.max_u = *mx;
  r.dt_used = dt;
  return r;
}

Trajectory run(const SolverConfig& cfg) {
  cfg.validate();
  Trajectory tr;
  tr.warnings = config_warnings(cfg);

  const Grid& g = cfg.grid;
  const double h = g.spacing();
  const double parabolic =
      cfg.cfl * 2.0 * std::pow(h / std::numbers::pi, cfg.alpha) / std::pow(static_cast<double>(g.d), 0.5 * cfg.alpha);

  Field u = initial_field(cfg);
  double t = cfg.start_time();
  tr.records.push_back(diagnose(u, t, 0.0, cfg.p_list));
  tr.snapshots.push_back({t, u});

  double last_dt = 0.0;
  for (double t_save : save_schedule(cfg)) {
    while (t < t_save - 1e-14 * std::max(1.0, std::abs(t_save))) {
      const VectorField v = face_velocity(u, cfg);
      double vsum = 0.0;
      for (const Field& c : v) vsum += max_abs(c);
      const double umax = max_abs(u);
      const double diffusivity =
          (cfg.m - 1.0) * std::pow(umax * umax + cfg.eps * cfg.eps, 0.5 * (cfg.m - 1.0));
      double dt = std::min(cfg.cfl * h / std::max(vsum, 1e-300), parabolic / std::max(diffusivity, 1e-300));
      if (!(dt >= cfg.dt_min)) {
        tr.aborted = true;
        tr.reason = "time step underflow at t = " + std::to_string(t);
        break;
      }
      dt = std::min(dt, t_save - t);

      Field w = heat_step(u, cfg.delta, 0.5 * dt);
      const Field k1 = flux_term(w, v);
      Field w1(g), w2(g);
      for (std::size_t i = 0; i < w.size(); ++i) w1[i] = w[i] + dt * k1[i];
      const Field k2 = flux_term(w1, face_velocity(w1, cfg));
      for (std::size_t i = 0; i < w.size(); ++i) w2[i] = 0.75 * w[i] + 0.25 * (w1[i] + dt * k2[i]);
      const Field k3 = flux_term(w2, face_velocity(w2, cfg));
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] / 3.0 + 2.0 / 3.0 * (w2[i] + dt * k3[i]);
      w = heat_step(w, cfg.delta, 0.5 * dt);

      if (!all_finite(w)) {
        tr.aborted = true;
        tr.reason = "non-finite values at t = " + std::to_string(t + dt);
        break;
      }
      u = std::move(w);
      t += dt;
      last_dt = dt;
      ++tr.steps;
    }
    if (tr.aborted) break;
    t = t_save;
    tr.records.push_back(diagnose(u, t, last_dt, cfg.p_list));
    tr.snapshots.push_back({t, u});
  }
  if (tr.aborted) {
    tr.records.push_back(diagnose(u, t, last_dt, cfg.p_list));
    tr.snapshots.push_back({t, u});
  }
  return tr;
}

}  // namespace fracpm::evolve
