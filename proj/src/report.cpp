#include "fracpm/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracpm::report {

const std::vector<std::string>& anchor_registry() {
  static const std::vector<std::string> anchors{
      "gamma-function",
      "bessel-asymptotics",
      "hypergeometric-series",
      "hypergeometric-differentiation",
      "weber-schafheitlin",
      "scaling-constants",
      "getoor-identity",
      "riesz-potential-of-profile",
      "pressure-gradient-inside-ball",
      "self-similar-solution",
      "interface-regularity",
      "profile-mass",
      "fractional-gradient-symbol",
      "singular-integral",
      "regularized-equation",
      "mass-conservation",
      "lp-monotonicity",
      "positivity",
      "hypercontractive-decay",
      "stroock-varopoulos",
      "nash-inequality",
      "gagliardo-nirenberg",
      "differential-inequality-constant",
      "moser-recursion",
      "integral-gronwall",
      "limit-stability",
  };
  return anchors;
}

ReportRow make_row(std::string check_id, std::string anchor, double measured, double expected, double tolerance,
                   Compare cmp) {
  const auto& reg = anchor_registry();
  if (std::find(reg.begin(), reg.end(), anchor) == reg.end()) {
    throw std::invalid_argument("unregistered report anchor: " + anchor);
  }
  ReportRow r{std::move(check_id), std::move(anchor), measured, expected, tolerance, false};
  if (!std::isnan(measured)) {
    switch (cmp) {
      case Compare::within:
        r.pass = std::isfinite(measured) && std::abs(measured - expected) <= tolerance;
        break;
      case Compare::at_most:
        r.pass = measured <= expected + tolerance;
        break;
      case Compare::at_least:
        r.pass = measured >= expected - tolerance;
        break;
    }
  }
  return r;
}

bool all_pass(const std::vector<ReportRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string rows_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "check_id,paper_anchor,measured,expected,tolerance,pass\n";
  for (const auto& r : rows) {
    // Check ids may carry parameter lists with commas.
    if (r.check_id.find(',') != std::string::npos) {
      os << '"' << r.check_id << '"';
    } else {
      os << r.check_id;
    }
    os << ',' << r.paper_anchor << ',' << format_number(r.measured) << ','
       << format_number(r.expected) << ',' << format_number(r.tolerance) << ',' << (r.pass ? "true" : "false")
       << '\n';
  }
  return os.str();
}

std::string rows_table(const std::vector<ReportRow>& rows) {
  std::size_t w = 8;
  for (const auto& r : rows) w = std::max(w, r.check_id.size());
  std::ostringstream os;
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-*s  measured=%-13.6g expected=%-13.6g tol=%-10.3g %s\n", static_cast<int>(w),
                  r.check_id.c_str(), r.measured, r.expected, r.tolerance, r.pass ? "PASS" : "FAIL");
    os << buf;
  }
  return os.str();
}

std::vector<ReportRow> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report: " + path);
  std::vector<ReportRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string rest = line;
    if (!rest.empty() && rest.front() == '"') {
      const auto close = rest.find('"', 1);
      if (close == std::string::npos) throw std::runtime_error("malformed report row in " + path + ": " + line);
      f.push_back(rest.substr(1, close - 1));
      rest = rest.substr(std::min(close + 2, rest.size()));
    }
    std::istringstream ls(rest);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 6) throw std::runtime_error("malformed report row in " + path + ": " + line);
    ReportRow r;
    r.check_id = f[0];
    r.paper_anchor = f[1];
    r.measured = std::stod(f[2]);
    r.expected = std::stod(f[3]);
    r.tolerance = std::stod(f[4]);
    r.pass = f[5] == "true";
    rows.push_back(r);
  }
  return rows;
}

std::string p_column(double p) {
  if (std::isinf(p)) return "pinf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, p);
  return "p" + std::string(buf, res.ptr);
}

std::string diag_csv(const std::vector<evolve::DiagnosticsRecord>& records, const std::vector<double>& p_list) {
  std::ostringstream os;
  os << "t,mass,min,max,dt";
  for (double p : p_list) os << ',' << p_column(p);
  os << '\n';
  for (const auto& r : records) {
    os << format_number(r.t) << ',' << format_number(r.mass) << ',' << format_number(r.min_u) << ','
       << format_number(r.max_u) << ',' << format_number(r.dt_used);
    for (double v : r.lp_norms) os << ',' << format_number(v);
    os << '\n';
  }
  return os.str();
}

std::string field_csv(const Field& f) {
  const Grid& g = f.grid;
  std::ostringstream os;
  if (g.d == 1) {
    os << "x,u\n";
    for (int i = 0; i < g.n; ++i) os << format_number(g.coordinate(i)) << ',' << format_number(f[i]) << '\n';
  } else {
    os << "x,y,u\n";
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        os << format_number(g.coordinate(i)) << ',' << format_number(g.coordinate(j)) << ','
           << format_number(f[static_cast<std::size_t>(i) * g.n + j]) << '\n';
      }
    }
  }
  return os.str();
}

std::string snapshot_filename(double t) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, t);
  return "u_" + std::string(buf, res.ptr) + ".csv";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("error while writing output file: " + path);
}

}  // namespace fracpm::report
