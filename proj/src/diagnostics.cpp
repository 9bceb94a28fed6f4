#include "bdf3ns/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"
#include "views.hpp"

namespace bdf3ns {

double hm_norm(const ScalarField& f, int m) {
  if (m < 0) throw std::invalid_argument("hm_norm: order must be non-negative");
  const Grid& g = f.grid();
  detail::SpectralOf s(f);
  const int cols = g.spectral_cols();
  double sum = 0.0;
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      const double k2 = -(g.kx_second()[static_cast<std::size_t>(c)] + g.ky_second()[static_cast<std::size_t>(r)]);
      sum += g.column_weight(c) * std::pow(k2, m) * std::norm(s[idx]);
    }
  return g.length() * std::sqrt(sum);
}

double energy(const FlowState& s) {
  const double u = l2_norm(s.velocity.x_comp);
  const double v = l2_norm(s.velocity.y_comp);
  return 0.5 * (u * u + v * v);
}

double enstrophy(const FlowState& s) {
  const double w = l2_norm(s.omega);
  return 0.5 * w * w;
}

double div_error(const FlowState& s) { return l2_norm(divergence(s.velocity)); }

namespace {

struct FunctionalWeights {
  double diffusion_newest;
  double diffusion_previous;
  double diffusion_oldest;
  double diff_newer;
  double diff_older;
};

// The L^2 functional at derivative level m = 0 and the H^1 one at m = 1 share
// one shape: telescope quadratic forms in ||grad^m .||, viscous terms in
// ||grad^{m+1} .||, and increment terms in ||grad^m .||.
double functional(const History3& h, int m, double nu, double dt, const TelescopeCoeffs& c,
                  const FunctionalWeights& w) {
  if (!c.valid()) throw ConfigError("stability functional needs solved telescope coefficients");
  require_same_grid(h.newest.grid(), h.previous.grid());
  require_same_grid(h.newest.grid(), h.oldest.grid());
  auto sq = [m](const ScalarField& f) {
    const double v = hm_norm(f, m);
    return v * v;
  };
  auto sq_up = [m](const ScalarField& f) {
    const double v = hm_norm(f, m + 1);
    return v * v;
  };

  const ScalarField form2 = c.a(2) * h.newest + c.a(3) * h.previous;
  ScalarField form3 = c.a(4) * h.newest + c.a(5) * h.previous;
  form3.add_scaled(c.a(6), h.oldest);

  double total = c.a(1) * c.a(1) * sq(h.newest) + sq(form2) + sq(form3);
  total += nu * dt * (w.diffusion_newest * sq_up(h.newest) + w.diffusion_previous * sq_up(h.previous) +
                      w.diffusion_oldest * sq_up(h.oldest));
  total += w.diff_newer * sq(h.newest - h.previous) + w.diff_older * sq(h.previous - h.oldest);
  return total;
}

}  // namespace

double stability_F(const History3& h, double nu, double dt, const TelescopeCoeffs& c) {
  return functional(h, 0, nu, dt, c, {7.0 / 4.0, 15.0 / 32.0, 13.0 / 64.0, 7.0 / 8.0, 5.0 / 24.0});
}

double stability_G1(const History3& h, double nu, double dt, const TelescopeCoeffs& c) {
  return functional(h, 1, nu, dt, c, {37.0 / 24.0, 17.0 / 48.0, 17.0 / 96.0, 5.0 / 6.0, 1.0 / 6.0});
}

SeriesRecord make_series_record(const FlowState& s, const History3& h, double nu, double dt,
                                const TelescopeCoeffs& c) {
  SeriesRecord r;
  r.t = s.time;
  r.l2_omega = l2_norm(s.omega);
  const double grad = hm_norm(s.omega, 1);
  r.h1_omega = std::sqrt(r.l2_omega * r.l2_omega + grad * grad);
  r.energy = energy(s);
  r.enstrophy = 0.5 * r.l2_omega * r.l2_omega;
  r.div_error = div_error(s);
  r.max_omega = max_abs(s.omega);
  r.F = stability_F(h, nu, dt, c);
  r.G1 = stability_G1(h, nu, dt, c);
  return r;
}

}  // namespace bdf3ns
