#include "bdf3ns/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"

namespace bdf3ns {

using std::numbers::pi;

double taylor_green_decay(const TaylorGreenSpec& spec) { return std::exp(-8.0 * spec.nu * pi * pi * spec.t); }

FlowState taylor_green_exact(const Grid& grid, const TaylorGreenSpec& spec) {
  if (!(spec.nu > 0.0)) throw ConfigError("Taylor-Green viscosity must be positive");
  if (grid.length() != 1.0) throw ConfigError("Taylor-Green data is defined on the unit square");
  const double e = taylor_green_decay(spec);
  auto u = ScalarField::sample(grid, [e](double x, double y) { return std::sin(2 * pi * x) * std::cos(2 * pi * y) * e; });
  auto v = ScalarField::sample(grid, [e](double x, double y) { return -std::cos(2 * pi * x) * std::sin(2 * pi * y) * e; });
  auto w = ScalarField::sample(grid, [e](double x, double y) { return 4 * pi * std::sin(2 * pi * x) * std::sin(2 * pi * y) * e; });
  auto psi = ScalarField::sample(grid, [e](double x, double y) { return std::sin(2 * pi * x) * std::sin(2 * pi * y) * e / (2 * pi); });
  return FlowState{std::move(w).sync(), std::move(psi).sync(), VectorField(std::move(u).sync(), std::move(v).sync()),
                   spec.t};
}

ScalarField shear_layer_init(const Grid& grid, const ShearLayerSpec& spec) {
  if (!(spec.rho > 0.0) || !(spec.delta >= 0.0)) throw ConfigError("shear layer needs rho > 0 and delta >= 0");
  const double rho = spec.rho;
  const double delta = spec.delta;
  const double shift = grid.length();
  auto u = ScalarField::sample(grid, [rho, shift](double, double y) {
    const double yy = y / shift;
    return yy <= 0.5 ? std::tanh(rho * (yy - 0.25)) : std::tanh(rho * (0.75 - yy));
  });
  auto v = ScalarField::sample(grid, [delta, shift](double x, double) { return delta * std::sin(2 * pi * x / shift); });
  ScalarField w = derivative(v, Axis::x, 1) - derivative(u, Axis::y, 1);
  w.spectral_mut()[0] = Complex{};
  return std::move(w).sync();
}

namespace {

class ErrorTracker : public RunObserver {
 public:
  ErrorTracker(const Grid& grid, double nu) : nu_(nu), shapes_(taylor_green_exact(grid, {nu, 0.0})) {}

  void on_step(const SolverState& s) override {
    const double e = taylor_green_decay({nu_, s.time()});
    const FlowState& f = s.latest;

    ScalarField ew = f.omega;
    ew.add_scaled(-e, shapes_.omega);
    ScalarField ep = f.psi;
    ep.add_scaled(-e, shapes_.psi);
    ScalarField eu = f.velocity.x_comp;
    eu.add_scaled(-e, shapes_.velocity.x_comp);
    ScalarField ev = f.velocity.y_comp;
    ev.add_scaled(-e, shapes_.velocity.y_comp);

    const double l2[3] = {l2_norm(ew), l2_norm(ep), std::hypot(l2_norm(eu), l2_norm(ev))};
    const double grad_sq[3] = {sq(hm(ew)), sq(hm(ep)), sq(hm(eu)) + sq(hm(ev))};
    for (int v = 0; v < 3; ++v) {
      linf_l2[v] = std::max(linf_l2[v], l2[v]);
      if (s.step_index > 0) sum_h1[v] += s.dt * grad_sq[v];
    }
  }

  double linf_l2[3] = {0.0, 0.0, 0.0};
  double sum_h1[3] = {0.0, 0.0, 0.0};

 private:
  static double sq(double x) { return x * x; }
  static double hm(ScalarField& f) {
    f.ensure_spectral();
    return hm_norm(f, 1);
  }
  double nu_;
  FlowState shapes_;
};

}  // namespace

std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& cfg) {
  if (cfg.levels < 3) throw ConfigError("convergence study needs at least 3 step sizes");
  const Grid grid(cfg.n);
  const ScalarField omega0 = taylor_green_exact(grid, {cfg.nu, 0.0}).omega;
  static constexpr const char* kNames[3] = {"omega", "psi", "u"};

  std::vector<ConvergenceRow> rows;
  for (int level = 0; level < cfg.levels; ++level) {
    RunConfig rc;
    rc.n = cfg.n;
    rc.dt = cfg.dt0 * std::ldexp(1.0, -level);
    rc.nu = cfg.nu;
    rc.t_final = cfg.t_final;
    rc.scheme = cfg.scheme;
    rc.series_every = 0;
    rc.noise_floor = cfg.noise_floor;
    ErrorTracker tracker(grid, cfg.nu);
    RunObserver* observers[] = {&tracker};
    run(omega0, rc, observers);

    for (int v = 0; v < 3; ++v) {
      ConvergenceRow row;
      row.dt = rc.dt;
      row.variable = kNames[v];
      row.err_linf_l2 = tracker.linf_l2[v];
      row.err_l2_h1 = std::sqrt(tracker.sum_h1[v]);
      row.order_linf_l2 = std::numeric_limits<double>::quiet_NaN();
      row.order_l2_h1 = std::numeric_limits<double>::quiet_NaN();
      if (level > 0) {
        const ConvergenceRow& prev = rows[rows.size() - 3];
        row.order_linf_l2 = std::log2(prev.err_linf_l2 / row.err_linf_l2);
        row.order_l2_h1 = std::log2(prev.err_l2_h1 / row.err_l2_h1);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace bdf3ns
