#include "fracpm/config.hpp"
#include "fracpm/report.hpp"
#include "fracpm/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>

using namespace fracpm;

TEST_CASE("key=value parsing") {
  const auto kv = config::parse("# comment\nalpha = 1.5\n\n m=2 \nic.type = signed_pair\n");
  CHECK(kv.at("alpha") == "1.5");
  CHECK(kv.at("m") == "2");
  CHECK(kv.at("ic.type") == "signed_pair");
  CHECK_THROWS_AS(config::parse("alpha = 1\nalpha = 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(config::parse("alpha 1\n"), std::invalid_argument);
}

TEST_CASE("JSON parsing flattens nested keys") {
  const auto kv = config::parse(R"({"alpha": 0.5, "p_list": [1, 2, "inf"], "ic": {"type": "file", "path": "a.csv"}})");
  CHECK(kv.at("ic.type") == "file");
  CHECK(kv.at("ic.path") == "a.csv");
  const auto c = config::solver_config(kv);
  CHECK(c.alpha == 0.5);
  REQUIRE(c.p_list.size() == 3);
  CHECK(std::isinf(c.p_list[2]));
}

TEST_CASE("solver configuration errors name the key") {
  try {
    config::solver_config(config::parse("alpha = 1\nfoo = 2\n"));
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()) == "unknown config key: foo");
  }
  CHECK_THROWS_WITH(config::solver_config(config::parse("ic.type = gaussian\nic.path = x\n")),
                    "config key ic.path does not apply to ic.type=gaussian");
  CHECK_THROWS_AS(config::solver_config(config::parse("sweep.eps = 1e-3\n")), std::invalid_argument);
  CHECK_THROWS_AS(config::solver_config(config::parse("n = 12.5\n")), std::invalid_argument);
}

TEST_CASE("missing config file names the path") {
  CHECK_THROWS_WITH(config::load_solver_config("missing.cfg"), "cannot open config file: missing.cfg");
}

TEST_CASE("sweep axes") {
  const auto spec = config::sweep_spec(config::parse("n = 64\nsweep.eps = 1e-3, 1e-4\nsweep.n = 64,128\n"));
  const auto pts = sweep::expand(spec);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].eps == 1e-3);
  CHECK(pts[1].n == 128);
  const auto empty = config::sweep_spec(config::parse("sweep.alpha =\n"));
  CHECK(sweep::expand(empty).empty());
  CHECK(sweep::run_sweep(empty, 4).empty());
}

TEST_CASE("sweep records failures and continues") {
  auto spec = config::sweep_spec(config::parse("n = 64\nt_end = 0.05\nsweep.alpha = 1, 2.5\n"));
  const auto res = sweep::run_sweep(spec, 2);
  REQUIRE(res.size() == 2);
  CHECK(res[0].ok);
  CHECK_FALSE(res[1].ok);
  CHECK_FALSE(res[1].error.empty());
  const std::string csv = sweep::sweep_report_csv(res);
  CHECK(csv.find(",failed,") != std::string::npos);
}

TEST_CASE("limits along an eps chain") {
  auto spec = config::sweep_spec(
      config::parse("n = 128\nt_end = 1.2\nic.type = barenblatt\nsweep.eps = 1e-4, 1e-2, 1e-3\n"));
  const auto lim = sweep::limits(sweep::run_sweep(spec, 3));
  REQUIRE(lim.size() == 2);
  CHECK(lim[0].from.eps == 1e-2);
  CHECK(lim[1].to.eps == 1e-4);
  CHECK(lim[1].decreasing);
}

TEST_CASE("report rows") {
  const auto r = report::make_row("a", "nash-inequality", 1.0, 1.1, 0.2);
  CHECK(r.pass);
  CHECK_FALSE(report::make_row("b", "nash-inequality", 2.0, 1.0, 0.5, report::Compare::at_most).pass);
  CHECK(report::make_row("c", "nash-inequality", 2.0, 1.0, 0.0, report::Compare::at_least).pass);
  CHECK_FALSE(report::make_row("d", "nash-inequality", std::nan(""), 0.0, 1.0).pass);
  CHECK_THROWS_AS(report::make_row("e", "Eq. (7)", 0.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("report CSV round trip") {
  const std::vector<report::ReportRow> rows{report::make_row("x.one(a=1,d=2)", "moser-recursion", 0.1, 0.0, 1.0),
                                            report::make_row("x.two", "gamma-function", 1.0 / 3.0, 0.0, 1e-3)};
  const auto path = (std::filesystem::temp_directory_path() / "fracpm_rows.csv").string();
  report::write_text(path, report::rows_csv(rows));
  const auto back = report::read_rows(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].check_id == "x.one(a=1,d=2)");
  CHECK(back[1].measured == 1.0 / 3.0);
  CHECK(back[0].pass);
  CHECK_FALSE(back[1].pass);
  CHECK_THROWS(report::write_text("/nonexistent/dir/x.csv", "x"));
}

TEST_CASE("number formatting and file names") {
  CHECK(report::format_number(0.1) == "0.10000000000000001");
  CHECK(report::format_number(INFINITY) == "inf");
  CHECK(report::p_column(evolve::kInf) == "pinf");
  CHECK(report::p_column(1.5) == "p1.5");
  CHECK(report::snapshot_filename(0.25) == "u_0.25.csv");
}

TEST_CASE("diagnostics CSV header") {
  evolve::DiagnosticsRecord r;
  r.lp_norms = {1.0, 2.0};
  const std::string csv = report::diag_csv({r}, {1.0, evolve::kInf});
  CHECK(csv.substr(0, csv.find('\n')) == "t,mass,min,max,dt,p1,pinf");
}

TEST_CASE("field CSV layout") {
  const Field f(Grid{2, 16, 2.0});
  const std::string csv = report::field_csv(f);
  CHECK(csv.substr(0, 6) == "x,y,u\n");
}
