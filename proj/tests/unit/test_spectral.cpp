#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bdf3ns/checks.hpp"
#include "bdf3ns/spectral.hpp"
#include "helpers.hpp"

using namespace bdf3ns;
using testing::pi;

TEST_CASE("derivatives are exact on resolved trigonometric data") {
  for (int n : {16, 17}) {
    const Grid g(n, 3.0);
    const double k = 2 * pi / 3.0;
    const auto f = ScalarField::sample(g, [k](double x, double y) { return std::sin(2 * k * x) * std::cos(3 * k * y); });
    const auto fx = ScalarField::sample(g, [k](double x, double y) { return 2 * k * std::cos(2 * k * x) * std::cos(3 * k * y); });
    const auto fy = ScalarField::sample(g, [k](double x, double y) { return -3 * k * std::sin(2 * k * x) * std::sin(3 * k * y); });
    const auto lap = ScalarField::sample(g, [k](double x, double y) { return -13 * k * k * std::sin(2 * k * x) * std::cos(3 * k * y); });
    CHECK(testing::max_diff(derivative(f, Axis::x, 1), fx) < 1e-12);
    CHECK(testing::max_diff(derivative(f, Axis::y, 1), fy) < 1e-12);
    CHECK(testing::max_diff(laplacian(f), lap) < 1e-11);
    CHECK(testing::max_diff(divergence(gradient(f)), lap) < 1e-11);
    const auto perp = perp_gradient(f);
    CHECK(testing::max_diff(perp.x_comp, fy) < 1e-12);
    CHECK(testing::max_diff(perp.y_comp, -1.0 * fx) < 1e-12);
  }
  CHECK_THROWS_AS(derivative(ScalarField(Grid(8)), Axis::x, 3), std::invalid_argument);
}

TEST_CASE("first derivative drops the Nyquist mode, second keeps it") {
  const Grid g(8);
  const auto nyq = ScalarField::sample(g, [](double x, double) { return std::cos(8 * pi * x); });
  CHECK(max_abs(derivative(nyq, Axis::x, 1)) < 1e-13);
  CHECK(testing::max_diff(derivative(nyq, Axis::x, 2), -64 * pi * pi * nyq) < 1e-10);
  // so div(grad) and lap differ on Nyquist content for even N
  CHECK(max_abs(divergence(gradient(nyq))) < 1e-13);
  CHECK(max_abs(laplacian(nyq)) > 600.0);
}

TEST_CASE("Parseval: physical and spectral inner products agree") {
  std::mt19937_64 rng(3);
  for (int n : {8, 11, 32}) {
    const Grid g(n, 1.7);
    for (int t = 0; t < 5; ++t) {
      const auto a = random_mean_free_field(g, rng, 0.0);
      const auto b = random_mean_free_field(g, rng, 0.0);
      const double ref = testing::riemann_inner(a, b);
      const double scale = l2_norm(a) * l2_norm(b);
      CHECK(std::abs(inner_product(a, b) - ref) <= 1e-13 * scale);
      CHECK(std::abs(spectral_inner_product(a, b) - ref) <= 1e-13 * scale);
    }
  }
}

TEST_CASE("summation by parts holds exactly for odd N") {
  std::mt19937_64 rng(4);
  const Grid g(15, 2.0);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_mean_free_field(g, rng, 0.0);
    const auto h = random_mean_free_field(g, rng, 0.0);
    const double lhs = inner_product(f, laplacian(h));
    const double rhs = -inner_product(gradient(f), gradient(h));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-12);
    // D_x is skew-adjoint on any grid
    CHECK(std::abs(inner_product(f, derivative(h, Axis::x, 1)) + inner_product(derivative(f, Axis::x, 1), h)) < 1e-11);
  }
  // even N: exact once the Nyquist content is removed
  const Grid e(16);
  const auto f = dealias(random_mean_free_field(e, rng, 0.0));
  const auto h = dealias(random_mean_free_field(e, rng, 0.0));
  CHECK(std::abs(inner_product(f, laplacian(h)) + inner_product(gradient(f), gradient(h))) < 1e-11);
}

TEST_CASE("norms, mean and max") {
  const Grid g(32);
  const auto s = ScalarField::sample(g, [](double x, double y) { return std::sin(2 * pi * x) * std::sin(2 * pi * y) + 0.25; });
  CHECK(mean(s) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(mean(to_spectral(s)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(l2_norm(s) == doctest::Approx(std::sqrt(0.25 + 0.0625)).epsilon(1e-13));
  CHECK(max_abs(s) == doctest::Approx(1.25).epsilon(1e-13));
  VectorField v(s, s);
  CHECK(l2_norm(v) == doctest::Approx(std::sqrt(2.0) * l2_norm(s)).epsilon(1e-14));
}

TEST_CASE("dealias keeps |k| <= N/3 and zeroes the rest") {
  const Grid g(12);
  const auto low = ScalarField::sample(g, [](double x, double y) { return std::cos(2 * pi * 4 * x) * std::sin(2 * pi * 3 * y); });
  const auto high = ScalarField::sample(g, [](double x, double) { return std::cos(2 * pi * 5 * x); });
  CHECK(testing::max_diff(dealias(low), low) < 1e-13);
  CHECK(max_abs(dealias(high)) < 1e-13);
}

TEST_CASE("noise filter removes only coefficients below the relative floor") {
  const Grid g(16);
  auto f = to_spectral(ScalarField::sample(g, [](double x, double y) { return std::sin(2 * pi * x) * std::sin(2 * pi * y); }));
  auto noisy = f;
  noisy.spectral_mut()[static_cast<std::size_t>(3 * g.spectral_cols() + 5)] = Complex(1e-15, 0.0);
  noisy.spectral_mut()[static_cast<std::size_t>(2 * g.spectral_cols() + 2)] = Complex(1e-3, 0.0);
  const auto out = noise_filter(noisy, 1e-13);
  CHECK(out.spectral()[static_cast<std::size_t>(3 * g.spectral_cols() + 5)] == Complex{});
  CHECK(out.spectral()[static_cast<std::size_t>(2 * g.spectral_cols() + 2)] == Complex(1e-3, 0.0));
  const auto same = noise_filter(f, 0.0);
  CHECK(std::equal(same.spectral().begin(), same.spectral().end(), f.spectral().begin()));
  CHECK_THROWS(noise_filter(f, -1.0));
}
