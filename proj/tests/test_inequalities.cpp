#include "fracpm/evolve.hpp"
#include "fracpm/fracops.hpp"
#include "fracpm/inequalities.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace fracpm;
using namespace fracpm::inequalities;
using doctest::Approx;

TEST_CASE("fractional energy is the quadratic form of the fractional Laplacian") {
  const Grid g{1, 256, 16.0};
  const Field f = random_smooth_field(g, 3, 6, 0.0);
  for (double a : {0.5, 1.0, 2.0}) {
    CHECK(fractional_energy(f, a) == Approx(fracops::inner(f, fracops::frac_laplacian(f, a))).epsilon(1e-12));
  }
}

TEST_CASE("Stroock-Varopoulos holds on random fields") {
  const Grid g{1, 512, 16.0};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Field w = random_smooth_field(g, seed, 6, seed % 2 ? 1.0 : 0.0);
    for (double a : {0.5, 1.0, 1.5}) {
      for (double q : {1.5, 3.0}) CHECK(stroock_varopoulos_gap(w, q, a).margin() >= -1e-9);
    }
  }
}

TEST_CASE("Stroock-Varopoulos is an equality at q = 2") {
  const Grid g{1, 256, 16.0};
  const Field w = random_smooth_field(g, 11, 6, 1.5);
  const SVGap s = stroock_varopoulos_gap(w, 2.0, 0.8);
  CHECK(s.lhs == Approx(s.rhs).epsilon(1e-12));
  CHECK_THROWS_AS(stroock_varopoulos_gap(w, 1.0, 0.8), std::domain_error);
}

TEST_CASE("random fields are deterministic in the seed") {
  const Grid g{1, 128, 16.0};
  CHECK(random_smooth_field(g, 5, 4, 0.0).values == random_smooth_field(g, 5, 4, 0.0).values);
  CHECK(random_smooth_field(g, 5, 4, 0.0).values != random_smooth_field(g, 6, 4, 0.0).values);
}

TEST_CASE("Nash ratio is scale invariant in amplitude") {
  const Grid g = nash_grid(1);
  Field v = sample(g, [](auto x) { return std::exp(-x[0] * x[0]); });
  const double r = nash_ratio(v, 1.0);
  for (double& x : v.values) x *= 5.0;
  CHECK(nash_ratio(v, 1.0) == Approx(r).epsilon(1e-12));
  CHECK_THROWS_AS(nash_ratio(Field(g), 1.0), std::domain_error);
}

TEST_CASE("measured Nash constant, frozen") {
  const NashMeasurement n = measure_nash_constant(1.0, 1);
  CHECK(n.C_N == Approx(0.51504).epsilon(1e-4));
  CHECK(n.min_ratio * n.C_N == Approx(1.0));
  CHECK_FALSE(n.argmin.empty());
}

TEST_CASE("Gagliardo-Nirenberg exponents") {
  const GNExponents e = gn_exponents(2.0, 2.0, 1, 1.0);
  CHECK(e.r == 3.0);
  CHECK(e.a == Approx(6.0));
  CHECK(e.b == Approx(3.0));
  CHECK(gn_b_direct(e) == Approx(e.b).epsilon(1e-14));
  CHECK_THROWS_AS(gn_exponents(1.0, 2.0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(gn_exponents(1.5, 3.0, 1, 1.0), std::domain_error);
}

TEST_CASE("Gagliardo-Nirenberg holds with the measured constant") {
  const Grid g = nash_grid(1);
  const double C_N = measure_nash_constant(1.0, 1).C_N;
  for (const auto& item : nash_battery(g)) {
    for (double p : {2.0, 4.0}) {
      const GNGap gap = gn_gap(item.field, gn_exponents(p, 2.0, 1, 1.0), C_N);
      CHECK(gap.lhs <= gap.rhs * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("Moser start index and exponents") {
  CHECK(moser_start_index(2.0) == 1);
  CHECK(moser_start_index(2.5) == 1);
  CHECK(moser_start_index(4.5) == 2);
  CHECK(moser_mu(60, 1.0, 2.0, 1) == Approx(decay_time_exponent(1.0, 2.0, 1, evolve::kInf)).epsilon(1e-15));
  CHECK(decay_time_exponent(1.0, 2.0, 1, 2.0) == Approx(0.25));
  CHECK(decay_mass_exponent(1.0, 2.0, 1, evolve::kInf) == Approx(0.5));
}

TEST_CASE("Moser sequence settles") {
  const double C_N = 0.51504;
  const double k0 = preliminary_constant(2.0, 1.0, 2.0, 1, C_N);
  const auto seq = moser_sequence(1.0, 2.0, 1, C_N, k0, 1, 60);
  REQUIRE(seq.size() == 60);
  CHECK(seq.front().n == 1);
  CHECK(seq.back().n == 60);
  CHECK(std::isfinite(seq.back().log_kappa));
  CHECK(std::abs(seq.back().log_kappa - seq[49].log_kappa) <= 1e-6);
  CHECK(decay_constant(1.0, 2.0, 1, C_N) >= 1.0);
}

TEST_CASE("Gronwall bound") {
  std::vector<double> t, g;
  for (int i = 0; i <= 100; ++i) {
    t.push_back(0.1 * i);
    g.push_back(0.1 * i * 0.1 * i);
  }
  const GronwallBound b = integral_gronwall_bound(2.0, 0.5, t, g);
  CHECK(b.g_at(5.0) == Approx(25.0).epsilon(1e-3));
  CHECK(b(4.0) == Approx(std::pow(2.0 * 0.5 * b.g_at(4.0), -2.0)));
  std::vector<double> bad = t;
  bad[3] = bad[2];
  CHECK_THROWS_AS(integral_gronwall_bound(2.0, 0.5, bad, g), std::domain_error);
  CHECK_THROWS_AS(integral_gronwall_bound(0.0, 0.5, t, g), std::domain_error);
}

TEST_CASE("Gronwall hypothesis on a decaying solution") {
  // f = (1 + t)^{-2} solves f' = -2 f^{3/2}: K = 2, gamma = 1/2, g = t.
  std::vector<double> t, f;
  for (int i = 0; i <= 2000; ++i) {
    t.push_back(0.005 * i);
    f.push_back(std::pow(1.0 + 0.005 * i, -2.0));
  }
  CHECK(gronwall_fit_k(t, f, t, 0.5) == Approx(2.0).epsilon(1e-3));
  CHECK(gronwall_hypothesis_residual(t, f, t, 1.0, 0.5) <= 0.0);
  const GronwallBound b = integral_gronwall_bound(2.0, 0.5, t, t);
  for (std::size_t i = 1; i < t.size(); i += 100) CHECK(f[i] <= b(t[i]));
}
