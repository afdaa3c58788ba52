#include "fracpm/barenblatt.hpp"
#include "fracpm/evolve.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

using namespace fracpm;
using namespace fracpm::evolve;
using doctest::Approx;

TEST_CASE("regularised power") {
  CHECK(g_eps(0.0, 2.0, 0.1) == 0.0);
  CHECK(g_eps(-3.0, 2.5, 0.0) == Approx(-std::pow(3.0, 1.5)));
  CHECK(g_eps(2.0, 2.0, 1e-6) == Approx(2.0 - 1e-6).epsilon(1e-12));
  CHECK(g_eps(-2.0, 3.0, 0.5) == -g_eps(2.0, 3.0, 0.5));
}

TEST_CASE("admissibility") {
  CHECK(admissible(1.0, 2.0, 1));
  CHECK_FALSE(admissible(0.5, 1.2, 1));
  CHECK_FALSE(admissible(1.5, 1.5, 1));
  SolverConfig c;
  c.m = 1.2;
  c.alpha = 0.5;
  CHECK_FALSE(config_warnings(c).empty());
}

TEST_CASE("configuration validation") {
  SolverConfig c;
  c.alpha = 2.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SolverConfig{};
  c.grid.n = 100;
  CHECK_THROWS(c.validate());
  c = SolverConfig{};
  c.p_list = {0.5};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("norms and mass") {
  const Grid g{1, 64, 4.0};
  const Field f = sample(g, [](auto x) { return x[0] < 0.0 ? -2.0 : 1.0; });
  CHECK(mass(f) == Approx(-2.0).epsilon(1e-14));
  CHECK(lp_norm(f, 1.0) == Approx(6.0).epsilon(1e-14));
  CHECK(lp_norm(f, kInf) == 2.0);
  CHECK(lp_norm(f, 2.0) == Approx(std::sqrt(10.0)).epsilon(1e-14));
}

TEST_CASE("Barenblatt data of prescribed mass") {
  SolverConfig c;
  c.ic = IcBarenblatt{1.0, 0.7, 1.0};
  CHECK(mass(initial_field(c)) == Approx(0.7).epsilon(2e-3));
  CHECK(c.start_time() == 1.0);
}

TEST_CASE("file initial data") {
  const Grid g{1, 16, 2.0};
  const auto path = std::filesystem::temp_directory_path() / "fracpm_ic.csv";
  {
    std::ofstream out(path);
    out << "x,u\n";
    for (int i = 0; i < 16; ++i) out << g.coordinate(i) << ',' << i << '\n';
  }
  SolverConfig c;
  c.grid = g;
  c.ic = IcFile{path.string()};
  const Field f = initial_field(c);
  CHECK(f[5] == 5.0);
  c.ic = IcFile{"/nonexistent/ic.csv"};
  CHECK_THROWS(initial_field(c));
}

TEST_CASE("right-hand side conserves mass") {
  SolverConfig c;
  c.grid = Grid{2, 32, 8.0};
  c.ic = IcSignedPair{};
  const Field u = initial_field(c);
  CHECK(std::abs(mass(rhs(u, c))) <= 1e-13);
  CHECK(std::abs(mass(rhs_spectral(u, c))) <= 1e-13);
}

TEST_CASE("short run: conservation, positivity, monotone norms, save times") {
  SolverConfig c;
  c.grid = Grid{1, 256, 16.0};
  c.t_end = 0.4;
  c.save_every = 0.1;
  c.ic = IcGaussian{0.4, 1.0, 0.0};
  const Trajectory tr = run(c);
  REQUIRE_FALSE(tr.aborted);
  REQUIRE(tr.records.size() == 5);
  CHECK(tr.records.back().t == Approx(0.4).epsilon(1e-14));
  CHECK(tr.snapshots.size() == tr.records.size());
  const double m0 = tr.records.front().mass;
  for (std::size_t k = 1; k < tr.records.size(); ++k) {
    CHECK(std::abs(tr.records[k].mass - m0) <= 1e-12 * m0);
    CHECK(tr.records[k].min_u >= -1e-12);
    for (std::size_t j = 0; j < c.p_list.size(); ++j) {
      CHECK(tr.records[k].lp_norms[j] <= tr.records[k - 1].lp_norms[j] * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("explicit save times override the spacing") {
  SolverConfig c;
  c.grid = Grid{1, 128, 16.0};
  c.t_end = 0.3;
  c.save_times = {0.05, 0.2};
  const Trajectory tr = run(c);
  REQUIRE(tr.records.size() == 4);
  CHECK(tr.records[1].t == Approx(0.05));
  CHECK(tr.records[2].t == Approx(0.2));
  CHECK(tr.records[3].t == Approx(0.3));
}

TEST_CASE("tiny dt_min triggers a clean abort") {
  SolverConfig c;
  c.grid = Grid{1, 128, 16.0};
  c.dt_min = 10.0;
  const Trajectory tr = run(c);
  CHECK(tr.aborted);
  CHECK_FALSE(tr.reason.empty());
  CHECK(tr.snapshots.size() >= 1);
}

TEST_CASE("self-similar tracking at moderate resolution") {
  SolverConfig c;
  c.grid = Grid{1, 256, 16.0};
  c.t_end = 1.5;
  c.save_every = 0.5;
  c.ic = IcBarenblatt{1.0, 0.0, 1.0};
  const Trajectory tr = run(c);
  const Field& u = tr.snapshots.back().u;
  const barenblatt::ProfileParams p{1.0, 2.0, 1, 1.0};
  double num = 0.0, den = 0.0;
  for (int i = 0; i < c.grid.n; ++i) {
    const double ex = barenblatt::self_similar_radial(1.5, std::abs(c.grid.coordinate(i)), p);
    num += std::abs(u[i] - ex);
    den += std::abs(ex);
  }
  CHECK(num / den <= 2e-2);
}
