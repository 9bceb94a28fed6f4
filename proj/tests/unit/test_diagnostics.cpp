#include <doctest.h>

#include <cmath>
#include <random>

#include "bdf3ns/benchmarks.hpp"
#include "bdf3ns/checks.hpp"
#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/kinematics.hpp"
#include "bdf3ns/spectral.hpp"
#include "helpers.hpp"

using namespace bdf3ns;
using testing::pi;

TEST_CASE("Taylor-Green initial diagnostics") {
  const FlowState s = taylor_green_exact(Grid(32), {1e-3, 0.0});
  CHECK(energy(s) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(enstrophy(s) == doctest::Approx(2 * pi * pi).epsilon(1e-13));
  CHECK(div_error(s) < 1e-12);
  // |grad omega|^2 = 8 pi^2 |omega|^2 for the single mode
  CHECK(hm_norm(s.omega, 1) == doctest::Approx(std::sqrt(8.0) * pi * 2 * pi).epsilon(1e-13));
}

TEST_CASE("zero state gives zero diagnostics") {
  const FlowState s = make_state(ScalarField(Grid(8)), 0.0);
  CHECK(energy(s) == 0.0);
  CHECK(enstrophy(s) == 0.0);
  CHECK(div_error(s) == 0.0);
  CHECK(hm_norm(s.omega, 2) == 0.0);
  const auto& c = telescope_coefficients();
  const History3 h{s.omega, s.omega, s.omega};
  CHECK(stability_F(h, 1e-3, 1e-2, c) == 0.0);
  CHECK(stability_G1(h, 1e-3, 1e-2, c) == 0.0);
}

TEST_CASE("hm_norm: order 0 is the L2 norm, Poincare monotone in m") {
  std::mt19937_64 rng(41);
  for (double L : {1.0, 2.5}) {
    const Grid g(16, L);
    const Grid odd(15, L);
    for (int t = 0; t < 10; ++t) {
      const auto f = random_mean_free_field(g, rng, 1.0);
      CHECK(hm_norm(f, 0) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
      // gradient drops the even-N Nyquist mode, hm_norm keeps it
      CHECK(hm_norm(dealias(f), 1) == doctest::Approx(l2_norm(gradient(dealias(f)))).epsilon(1e-12));
      CHECK(hm_norm(f, 1) >= l2_norm(gradient(f)));
      const auto h = random_mean_free_field(odd, rng, 1.0);
      CHECK(hm_norm(h, 1) == doctest::Approx(l2_norm(gradient(h))).epsilon(1e-12));
      for (int m = 0; m < 3; ++m) CHECK(hm_norm(f, m) <= L / (2 * pi) * hm_norm(f, m + 1) * (1 + 1e-12));
    }
  }
  CHECK_THROWS(hm_norm(ScalarField(Grid(8)), -1));
}

TEST_CASE("stability functionals: equal-history collapse") {
  std::mt19937_64 rng(42);
  const Grid g(16);
  const auto phi = random_mean_free_field(g, rng);
  const auto& c = telescope_coefficients();
  const double nu = 2e-3, dt = 5e-3;
  const History3 h{phi, phi, phi};
  const double l2 = l2_norm(phi), g1 = hm_norm(phi, 1), g2 = hm_norm(phi, 2);
  const double form = c.a(1) * c.a(1) + std::pow(c.a(2) + c.a(3), 2) + std::pow(c.a(4) + c.a(5) + c.a(6), 2);
  const double f_expect = form * l2 * l2 + nu * dt * (7.0 / 4 + 15.0 / 32 + 13.0 / 64) * g1 * g1;
  const double g_expect = form * g1 * g1 + nu * dt * (37.0 / 24 + 17.0 / 48 + 17.0 / 96) * g2 * g2;
  CHECK(stability_F(h, nu, dt, c) == doctest::Approx(f_expect).epsilon(1e-12));
  CHECK(stability_G1(h, nu, dt, c) == doctest::Approx(g_expect).epsilon(1e-12));
}

TEST_CASE("stability functionals are non-negative and dominate alpha_1^2 ||w||^2") {
  std::mt19937_64 rng(43);
  const Grid g(12);
  const auto& c = telescope_coefficients();
  for (int t = 0; t < 20; ++t) {
    const auto a = random_mean_free_field(g, rng, 0.0);
    const auto b = random_mean_free_field(g, rng, 0.0);
    const auto d = random_mean_free_field(g, rng, 0.0);
    const History3 h{a, b, d};
    const double F = stability_F(h, 1e-3, 1e-2, c);
    CHECK(F >= 0.0);
    CHECK(stability_G1(h, 1e-3, 1e-2, c) >= 0.0);
    CHECK(std::pow(l2_norm(a), 2) <= F / (c.a(1) * c.a(1)) * (1 + 1e-12));
  }
}

TEST_CASE("invalid coefficients are a configuration error") {
  const ScalarField z(Grid(8));
  TelescopeCoeffs bad;  // alpha_1 = 0
  CHECK_THROWS_AS(stability_F({z, z, z}, 1e-3, 1e-2, bad), ConfigError);
  CHECK_THROWS_AS(stability_G1({z, z, z}, 1e-3, 1e-2, bad), ConfigError);
  const ScalarField other(Grid(6));
  CHECK_THROWS_AS(stability_F({z, other, z}, 1e-3, 1e-2, telescope_coefficients()), GridMismatch);
}

TEST_CASE("series record fields") {
  const FlowState s = taylor_green_exact(Grid(16), {1e-3, 0.0});
  const auto r = make_series_record(s, {s.omega, s.omega, s.omega}, 1e-3, 1e-2, telescope_coefficients());
  CHECK(r.l2_omega == doctest::Approx(2 * pi).epsilon(1e-13));
  CHECK(r.h1_omega == doctest::Approx(std::sqrt(4 * pi * pi + 32 * std::pow(pi, 4))).epsilon(1e-13));
  CHECK(r.max_omega == doctest::Approx(4 * pi).epsilon(1e-12));
  CHECK(r.enstrophy == doctest::Approx(2 * pi * pi).epsilon(1e-13));
  CHECK(r.F > 0.0);
  CHECK(r.G1 > 0.0);
}
