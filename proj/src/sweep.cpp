#include "fracpm/sweep.hpp"

#include "fracpm/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace fracpm::sweep {

std::vector<SweepPoint> expand(const config::SweepSpec& spec) {
  const auto& b = spec.base;
  const auto& ax = spec.axes;
  const std::vector<double> alphas = ax.alpha.value_or(std::vector<double>{b.alpha});
  const std::vector<double> ms = ax.m.value_or(std::vector<double>{b.m});
  const std::vector<double> deltas = ax.delta.value_or(std::vector<double>{b.delta});
  const std::vector<double> epss = ax.eps.value_or(std::vector<double>{b.eps});
  const std::vector<int> ns = ax.n.value_or(std::vector<int>{b.grid.n});
  std::vector<SweepPoint> pts;
  for (double a : alphas)
    for (double m : ms)
      for (double de : deltas)
        for (double e : epss)
          for (int n : ns) pts.push_back({a, m, de, e, n});
  return pts;
}

namespace {

RunResult run_point(const config::SweepSpec& spec, const SweepPoint& p) {
  RunResult r;
  r.point = p;
  try {
    evolve::SolverConfig c = spec.base;
    c.alpha = p.alpha;
    c.m = p.m;
    c.delta = p.delta;
    c.eps = p.eps;
    c.grid.n = p.n;
    const evolve::Trajectory tr = evolve::run(c);
    r.steps = tr.steps;
    r.ok = !tr.aborted;
    r.error = tr.reason;
    const double m0 = tr.records.front().mass;
    r.min_u = tr.records.front().min_u;
    for (const auto& rec : tr.records) {
      r.mass_drift = std::max(r.mass_drift, std::abs(rec.mass - m0) / std::max(std::abs(m0), 1e-300));
      r.min_u = std::min(r.min_u, rec.min_u);
    }
    const Field& u = tr.snapshots.back().u;
    r.final_linf = evolve::lp_norm(u, evolve::kInf);
    r.final_l1 = evolve::lp_norm(u, 1.0);
    r.final_state = u;
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<RunResult> run_sweep(const config::SweepSpec& spec, unsigned threads) {
  const std::vector<SweepPoint> pts = expand(spec);
  std::vector<RunResult> results(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) results[i] = run_point(spec, pts[i]);
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<LimitRow> limits(const std::vector<RunResult>& results) {
  std::vector<LimitRow> rows;
  for (const std::string axis : {"eps", "delta"}) {
    // Chains share every coordinate except `axis`.
    std::map<std::tuple<double, double, double, int>, std::vector<const RunResult*>> chains;
    for (const auto& r : results) {
      if (!r.ok || !r.final_state) continue;
      const auto& p = r.point;
      const double other = axis == "eps" ? p.delta : p.eps;
      chains[{p.alpha, p.m, other, p.n}].push_back(&r);
    }
    for (auto& [key, chain] : chains) {
      auto value = [&](const RunResult* r) { return axis == "eps" ? r->point.eps : r->point.delta; };
      std::sort(chain.begin(), chain.end(), [&](auto* a, auto* b) { return value(a) > value(b); });
      double prev = INFINITY;
      for (std::size_t i = 1; i < chain.size(); ++i) {
        const Field& a = *chain[i - 1]->final_state;
        const Field& b = *chain[i]->final_state;
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
        LimitRow row{axis, chain[i - 1]->point, chain[i]->point, s * a.grid.cell_volume(), true};
        row.decreasing = row.l1_distance < prev;
        prev = row.l1_distance;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

namespace {

void point_cells(std::ostringstream& os, const SweepPoint& p) {
  using report::format_number;
  os << format_number(p.alpha) << ',' << format_number(p.m) << ',' << format_number(p.delta) << ','
     << format_number(p.eps) << ',' << p.n;
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string sweep_report_csv(const std::vector<RunResult>& results) {
  using report::format_number;
  std::ostringstream os;
  os << "alpha,m,delta,eps,n,status,steps,mass_drift,min_u,final_linf,final_l1,error\n";
  for (const auto& r : results) {
    point_cells(os, r.point);
    os << ',' << (r.ok ? "ok" : "failed") << ',' << r.steps << ',' << format_number(r.mass_drift) << ','
       << format_number(r.min_u) << ',' << format_number(r.final_linf) << ',' << format_number(r.final_l1) << ','
       << csv_safe(r.error) << '\n';
  }
  return os.str();
}

std::string limits_csv(const std::vector<LimitRow>& rows) {
  std::ostringstream os;
  os << "axis,alpha,m,delta_from,eps_from,n,delta_to,eps_to,l1_distance,decreasing\n";
  for (const auto& r : rows) {
    using report::format_number;
    os << r.axis << ',' << format_number(r.from.alpha) << ',' << format_number(r.from.m) << ','
       << format_number(r.from.delta) << ',' << format_number(r.from.eps) << ',' << r.from.n << ','
       << format_number(r.to.delta) << ',' << format_number(r.to.eps) << ',' << format_number(r.l1_distance) << ','
       << (r.decreasing ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace fracpm::sweep
