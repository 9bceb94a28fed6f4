#include "bdf3ns/convection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"
#include "views.hpp"

namespace bdf3ns {
namespace {

// sum over modes of |kappa|^2 |fhat|^2 L^2, i.e. ||grad_N f||^2 with the Nyquist mode kept.
double gradient_energy(const ScalarField& f) {
  const Grid& g = f.grid();
  detail::SpectralOf s(f);
  const int cols = g.spectral_cols();
  double sum = 0.0;
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      const double k2 = -(g.kx_second()[static_cast<std::size_t>(c)] + g.ky_second()[static_cast<std::size_t>(r)]);
      sum += g.column_weight(c) * k2 * std::norm(s[idx]);
    }
  return g.length() * g.length() * sum;
}

}  // namespace

ScalarField skew_convection(const VectorField& velocity, const ScalarField& omega, bool dealias_products) {
  const Grid& g = omega.grid();
  require_same_grid(g, velocity.grid());

  const double div = l2_norm(divergence(velocity));
  const double scale = std::max(l2_norm(omega),
                                std::sqrt(gradient_energy(velocity.x_comp) + gradient_energy(velocity.y_comp)));
  if (!(div <= kDivergencePrecondition * scale)) {
    throw ContractViolation("skew_convection: velocity is not divergence-free (||div u|| = " + std::to_string(div) +
                            ")");
  }

  const ScalarField w = dealias_products ? dealias(omega) : omega;
  const ScalarField ux = dealias_products ? dealias(velocity.x_comp) : velocity.x_comp;
  const ScalarField uy = dealias_products ? dealias(velocity.y_comp) : velocity.y_comp;

  detail::PhysicalOf wp(w);
  detail::PhysicalOf up(ux);
  detail::PhysicalOf vp(uy);
  const ScalarField wx = derivative(w, Axis::x, 1);
  const ScalarField wy = derivative(w, Axis::y, 1);
  detail::PhysicalOf wxp(wx);
  detail::PhysicalOf wyp(wy);

  const std::size_t size = g.size();
  std::vector<double> advective(size);
  std::vector<double> flux_x(size);
  std::vector<double> flux_y(size);
  for (std::size_t i = 0; i < size; ++i) {
    advective[i] = up[i] * wxp[i] + vp[i] * wyp[i];
    flux_x[i] = up[i] * wp[i];
    flux_y[i] = vp[i] * wp[i];
  }

  ScalarField result = to_spectral(ScalarField::from_physical(g, std::move(advective)));
  // Subtracting the mean of the advective part; the flux divergence has no (0,0) mode.
  result.spectral_mut()[0] = Complex{};
  const VectorField flux(ScalarField::from_physical(g, std::move(flux_x)),
                         ScalarField::from_physical(g, std::move(flux_y)));
  result += divergence(flux);
  if (dealias_products) return dealias(result);
  return result;
}

}  // namespace bdf3ns
