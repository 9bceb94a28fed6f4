#include "bdf3ns/kinematics.hpp"

#include <cmath>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"
#include "views.hpp"

namespace bdf3ns {

ScalarField solve_poisson(const ScalarField& omega) {
  const Grid& g = omega.grid();
  detail::SpectralOf s(omega);
  const double m = s[0].real();
  if (std::abs(m) > kMeanTolerance) throw MeanViolation(m);

  std::vector<Complex> out(g.spectral_size());
  const int cols = g.spectral_cols();
  const auto kx2 = g.kx_second();
  const auto ky2 = g.ky_second();
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      const double symbol = -(kx2[static_cast<std::size_t>(c)] + ky2[static_cast<std::size_t>(r)]);
      out[idx] = symbol > 0.0 ? s[idx] / symbol : Complex{};
    }
  return ScalarField::from_spectral(g, std::move(out));
}

VectorField velocity_from_stream(const ScalarField& psi) {
  VectorField u = perp_gradient(psi);
  u.sync();
  return u;
}

FlowState make_state(ScalarField omega, double time) {
  omega.ensure_spectral();
  const double m = mean(omega);
  if (std::abs(m) > kMeanTolerance) throw MeanViolation(m);
  omega.spectral_mut()[0] = Complex{};
  omega.sync();

  ScalarField psi = solve_poisson(omega);
  VectorField vel = velocity_from_stream(psi);
  psi.sync();
  return FlowState{std::move(omega), std::move(psi), std::move(vel), time};
}

double poincare_ratio(const ScalarField& f) {
  const double grad = l2_norm(gradient(f));
  return grad > 0.0 ? l2_norm(f) / grad : 0.0;
}

}  // namespace bdf3ns
