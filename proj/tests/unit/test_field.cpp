#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/field.hpp"
#include "helpers.hpp"

using namespace bdf3ns;
using testing::pi;

TEST_CASE("freshness tracking") {
  const Grid g(8);
  ScalarField z(g);
  CHECK(z.freshness() == ScalarField::Freshness::both);

  auto f = ScalarField::sample(g, [](double x, double) { return std::cos(2 * pi * x); });
  CHECK(f.freshness() == ScalarField::Freshness::physical);
  CHECK_THROWS_AS((void)f.spectral(), std::logic_error);
  f.ensure_spectral();
  CHECK(f.freshness() == ScalarField::Freshness::both);

  f.spectral_mut()[1] = Complex(1.0, 0.0);
  CHECK(f.freshness() == ScalarField::Freshness::spectral);
  CHECK_THROWS_AS((void)f.physical(), std::logic_error);
  f.ensure_physical();
  CHECK(f.at(0, 0) == doctest::Approx(2.0));  // two conjugate halves of cos
}

TEST_CASE("mode() resolves negative x-modes by conjugate symmetry") {
  const Grid g(8);
  auto f = to_spectral(ScalarField::sample(g, [](double x, double y) { return std::sin(2 * pi * (x + 2 * y)); }));
  // sin(t) = (e^{it} - e^{-it}) / 2i
  CHECK(std::abs(f.mode(1, 2) - Complex(0.0, -0.5)) < 1e-14);
  CHECK(std::abs(f.mode(-1, -2) - Complex(0.0, 0.5)) < 1e-14);
  CHECK(std::abs(f.mode(-1, 2)) < 1e-14);
  CHECK_THROWS_AS((void)f.mode(4, 0), std::out_of_range);
  // even-N Nyquist column is its own conjugate partner
  auto nyq = to_spectral(ScalarField::sample(g, [](double x, double) { return std::cos(8 * pi * x); }));
  CHECK(std::abs(nyq.mode(-4, 0) - Complex(1.0, 0.0)) < 1e-14);
}

TEST_CASE("arithmetic works across different fresh views") {
  const Grid g(12);
  auto a = ScalarField::sample(g, [](double x, double y) { return std::sin(2 * pi * x) + y; });
  auto b = to_spectral(ScalarField::sample(g, [](double x, double y) { return std::cos(2 * pi * y) * x; }));
  b.physical_mut();  // leaves only physical fresh
  b = to_spectral(std::move(b));
  ScalarField only_spec = ScalarField::from_spectral(g, std::vector<Complex>(b.spectral().begin(), b.spectral().end()));

  ScalarField sum = a;
  sum.add_scaled(2.0, only_spec);
  const auto expect = ScalarField::sample(g, [](double x, double y) {
    return std::sin(2 * pi * x) + y + 2.0 * std::cos(2 * pi * y) * x;
  });
  CHECK(testing::max_diff(sum, expect) < 1e-13);

  ScalarField d = 3.0 * a - a;
  CHECK(testing::max_diff(d, 2.0 * a) < 1e-14);
  CHECK(testing::max_diff(-a + a, ScalarField(g)) == 0.0);
  CHECK_THROWS_AS(a += ScalarField(Grid(8)), GridMismatch);
}

TEST_CASE("constant and from_* validate sizes") {
  const Grid g(6);
  CHECK(ScalarField::constant(g, 2.5).at(3, 4) == 2.5);
  CHECK_THROWS(ScalarField::from_physical(g, std::vector<double>(5)));
  CHECK_THROWS(ScalarField::from_spectral(g, std::vector<Complex>(5)));
}

TEST_CASE("vector fields share one grid") {
  CHECK_THROWS_AS(VectorField(ScalarField(Grid(8)), ScalarField(Grid(6))), GridMismatch);
  VectorField v(Grid(8));
  CHECK(v.grid().n() == 8);
}
