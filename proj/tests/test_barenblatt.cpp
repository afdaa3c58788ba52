#include "fracpm/barenblatt.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace fracpm::barenblatt;
using doctest::Approx;

TEST_CASE("classical limit constants") {
  const ScalingConstants s = scaling_constants(2.0, 2.0, 1);
  CHECK(std::abs(s.k - 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(s.lambda - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("Getoor constant at alpha = 1, d = 1 is one") {
  CHECK(getoor_constant(1.0, 1) == Approx(1.0).epsilon(1e-14));
  CHECK(getoor_constant(1.0, 3) == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Riesz potential of the profile, frozen values") {
  CHECK(riesz_of_profile_radial(0.3, 1.0, 0.5, 1) == Approx(1.3472036563532346).epsilon(1e-13));
  CHECK(riesz_of_profile_radial(1.5, 1.0, 0.5, 1) == Approx(0.5375384326425167).epsilon(1e-13));
}

TEST_CASE("Riesz potential is continuous across the unit sphere") {
  for (int d : {1, 2, 3}) {
    const double in = riesz_of_profile_radial(1.0 - 1e-9, 1.0, 0.6, d);
    const double out = riesz_of_profile_radial(1.0 + 1e-9, 1.0, 0.6, d);
    CHECK(in == Approx(out).epsilon(1e-6));
  }
}

TEST_CASE("Riesz closed form rejects beta >= d") {
  CHECK_THROWS_AS(riesz_closed_form(1.0, 1.5, 1), std::domain_error);
}

TEST_CASE("Getoor identity on the closed-form chain") {
  for (double a : {0.5, 1.0, 1.5}) {
    for (int d : {1, 2, 3}) {
      const GetoorCheck g = getoor_check(a, d);
      CHECK(g.max_residual <= 1e-6);
    }
  }
}

TEST_CASE("profile is supported in the ball and positive inside") {
  const ProfileParams p{1.0, 2.0, 2, 1.5};
  const std::vector<double> in{0.3, 0.4};
  const std::vector<double> out{1.2, 0.95};
  CHECK(profile(in, p) > 0.0);
  CHECK(profile(out, p) == 0.0);
  CHECK(profile_radial(1.5, p) == 0.0);
}

TEST_CASE("classical profile solves the self-similar ODE") {
  // -lambda (F + y F') - (F^2)''/2 with F = (1 - y^2)/6.
  const ScalingConstants s = scaling_constants(2.0, 2.0, 1);
  const ProfileParams p{2.0, 2.0, 1, 1.0};
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double y = -0.99 + 0.0099 * i;
    const double F = profile_radial(std::abs(y), p);
    const double F1 = -2.0 * s.k * y;
    const double F2 = -2.0 * s.k;
    const double res = -s.lambda * (F + y * F1) - (F1 * F1 + F * F2);
    worst = std::max(worst, std::abs(res));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("pressure gradient is linear inside the support") {
  for (double a : {0.5, 1.0, 1.5}) {
    const ProfileParams p{a, 2.0, 1, 1.0};
    const double lam = scaling_constants(a, 2.0, 1).lambda;
    for (double r : {0.1, 0.5, 0.9}) CHECK(frac_grad_pressure_radial(r, p) == Approx(-lam * r).epsilon(1e-10));
  }
}

TEST_CASE("self-similar solution satisfies the equation pointwise") {
  for (double a : {0.5, 1.0, 1.5}) {
    const ProfileParams p{a, 2.0, 1, 1.0};
    for (double r : {0.2, 0.6, 0.9}) {
      const double dt = self_similar_dt_radial(1.0, r, p);
      CHECK(self_similar_flux_divergence_radial(1.0, r, p) == Approx(dt).epsilon(1e-8));
    }
  }
}

TEST_CASE("classical profile mass and round trip") {
  CHECK(profile_mass({2.0, 2.0, 1, 1.0}) == Approx(2.0 / 9.0).epsilon(1e-10));
  for (double M : {0.3, 1.0, 7.0}) {
    const double R = radius_for_mass(M, 1.0, 2.0, 2);
    CHECK(profile_mass({1.0, 2.0, 2, R}) == Approx(M).epsilon(1e-10));
  }
}

TEST_CASE("interface exponent matches min(alpha/(2(m-1)), 1)") {
  for (auto [a, m] : {std::pair{1.0, 2.0}, std::pair{0.5, 1.5}, std::pair{1.5, 3.0}}) {
    const double e = interface_holder_exponent(a, m);
    CHECK(std::abs(interface_exponent_fit({a, m, 1, 1.0}) - e) <= 0.02 * e);
  }
  CHECK(interface_holder_exponent(1.8, 1.5) == 1.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ProfileParams{2.5, 2.0, 1, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((ProfileParams{1.0, 1.0, 1, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((ProfileParams{1.0, 2.0, 4, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((ProfileParams{1.0, 2.0, 1, -1.0}.validate()), std::domain_error);
}
