#include "fracpm/barenblatt.hpp"
#include "fracpm/config.hpp"
#include "fracpm/evolve.hpp"
#include "fracpm/report.hpp"
#include "fracpm/suites.hpp"
#include "fracpm/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace fracpm;

namespace {

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create output directory: " + dir);
}

std::string join(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

int cmd_profile(double alpha, double m, int d, double R, int samples, const std::string& emit) {
  const barenblatt::ProfileParams p{alpha, m, d, R};
  p.validate();
  std::ostringstream os;
  os << "y,phi\n";
  const double ymax = 1.25 * R;
  for (int i = 0; i < samples; ++i) {
    const double y = -ymax + 2.0 * ymax * i / (samples - 1);
    os << report::format_number(y) << ',' << report::format_number(barenblatt::profile_radial(std::abs(y), p)) << '\n';
  }
  if (emit.empty() || emit == "-") {
    std::cout << os.str();
  } else {
    report::write_text(emit, os.str());
  }
  return 0;
}

int cmd_evolve(const std::string& cfg_path, const std::string& out) {
  const evolve::SolverConfig cfg = config::load_solver_config(cfg_path);
  ensure_dir(out);
  const evolve::Trajectory tr = evolve::run(cfg);
  for (const auto& w : tr.warnings) std::cerr << "warning: " << w << '\n';
  report::write_text(join(out, "diag.csv"), report::diag_csv(tr.records, cfg.p_list));
  for (const auto& s : tr.snapshots) report::write_text(join(out, report::snapshot_filename(s.t)), report::field_csv(s.u));
  const auto& last = tr.records.back();
  std::cout << "steps=" << tr.steps << " t=" << report::format_number(last.t)
            << " mass=" << report::format_number(last.mass) << " min=" << report::format_number(last.min_u) << '\n';
  if (tr.aborted) {
    std::cerr << "error: run aborted: " << tr.reason << '\n';
    return 1;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const suites::SuiteOptions& opt, const std::string& out) {
  const auto rows = suites::run(suite, opt);
  std::cout << report::rows_table(rows);
  if (!out.empty()) {
    ensure_dir(out);
    report::write_text(join(out, "verify_report.csv"), report::rows_csv(rows));
  }
  const bool ok = report::all_pass(rows);
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << rows.size() << " rows)\n";
  return ok ? 0 : 1;
}

int cmd_sweep(const std::string& cfg_path, const std::string& out, unsigned threads) {
  const config::SweepSpec spec = config::load_sweep_spec(cfg_path);
  ensure_dir(out);
  const auto results = sweep::run_sweep(spec, threads);
  const auto lim = sweep::limits(results);
  report::write_text(join(out, "sweep_report.csv"), sweep::sweep_report_csv(results));
  report::write_text(join(out, "limits.csv"), sweep::limits_csv(lim));
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.ok; });
  std::cout << spec.name << ": " << results.size() << " runs, " << failed << " failed, " << lim.size()
            << " limit rows\n";
  return 0;
}

int cmd_report(const std::string& out) {
  if (!fs::is_directory(out)) throw std::runtime_error("no such directory: " + out);
  bool ok = true;
  int files = 0;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(out)) {
    if (e.path().filename().string().ends_with("_report.csv")) paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    ++files;
    const std::string name = p.filename().string();
    if (name == "verify_report.csv") {
      const auto rows = report::read_rows(p.string());
      const auto bad = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
      std::cout << name << ": " << rows.size() << " checks, " << bad << " failed\n";
      for (const auto& r : rows) {
        if (!r.pass) std::cout << "  FAIL " << r.check_id << '\n';
      }
      ok = ok && bad == 0;
    } else if (name == "sweep_report.csv") {
      std::ifstream in(p);
      std::string line;
      std::getline(in, line);
      int runs = 0, failed = 0;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++runs;
        if (line.find(",failed,") != std::string::npos) ++failed;
      }
      std::cout << name << ": " << runs << " runs, " << failed << " failed\n";
    } else {
      std::cout << name << ": unrecognised, skipped\n";
    }
  }
  if (files == 0) std::cout << "no *_report.csv files in " << out << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional porous-medium toolkit"};
  app.require_subcommand(1);

  double alpha = 1.0, m = 2.0, R = 1.0;
  int d = 1, samples = 401;
  std::string emit, cfg_path, out = ".", suite;
  std::uint64_t seed = suites::SuiteOptions{}.seed;
  unsigned threads = 1;

  auto* profile = app.add_subcommand("profile", "sample the self-similar profile");
  profile->add_option("--alpha", alpha)->check(CLI::Range(0.0, 2.0));
  profile->add_option("--m", m);
  profile->add_option("--d", d)->check(CLI::Range(1, 3));
  profile->add_option("--R", R);
  profile->add_option("--samples", samples)->check(CLI::Range(2, 10000000));
  profile->add_option("--emit", emit, "CSV path, '-' for stdout");

  auto* ev = app.add_subcommand("evolve", "run the regularized solver");
  ev->add_option("--config", cfg_path)->required();
  ev->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites::names()));
  verify->add_option("--alpha", alpha);
  verify->add_option("--m", m);
  verify->add_option("--d", d);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  auto* verify_out = verify->add_option("--out", out);

  auto* sw = app.add_subcommand("sweep", "run a parameter sweep");
  sw->add_option("--config", cfg_path)->required();
  sw->add_option("--out", out);
  sw->add_option("--threads", threads);

  auto* rep = app.add_subcommand("report", "summarise report files in a directory");
  rep->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*profile) return cmd_profile(alpha, m, d, R, samples, emit);
    if (*ev) return cmd_evolve(cfg_path, out);
    if (*verify) {
      suites::SuiteOptions opt;
      opt.seed = seed;
      opt.threads = std::max(1u, threads);
      opt.alpha = alpha;
      opt.m = m;
      opt.d = d;
      return cmd_verify(suite, opt, verify_out->count() ? out : std::string{});
    }
    if (*sw) return cmd_sweep(cfg_path, out, std::max(1u, threads));
    if (*rep) return cmd_report(out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
