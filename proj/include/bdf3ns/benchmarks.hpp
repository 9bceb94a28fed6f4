#pragma once

#include <string>
#include <vector>

#include "bdf3ns/integrators.hpp"
#include "bdf3ns/kinematics.hpp"

namespace bdf3ns {

/// Exact Taylor-Green vortex on [0,1]^2 decaying as exp(-8 nu pi^2 t).
struct TaylorGreenSpec {
  double nu = 1e-3;
  double t = 0.0;
};

/// Decay factor exp(-8 nu pi^2 t).
double taylor_green_decay(const TaylorGreenSpec& spec);

/// u = sin(2 pi x) cos(2 pi y) e, v = -cos(2 pi x) sin(2 pi y) e,
/// omega = 4 pi sin(2 pi x) sin(2 pi y) e, psi = omega / (8 pi^2), sampled pointwise.
/// Requires a unit-length grid.
FlowState taylor_green_exact(const Grid& grid, const TaylorGreenSpec& spec);

/// Double shear layer: u = tanh(rho (y - 1/4)) for y <= 1/2, tanh(rho (3/4 - y))
/// otherwise, v = delta sin(2 pi x).
struct ShearLayerSpec {
  double rho = 30.0;
  double delta = 0.05;
  double nu = 1e-4;
};

/// Initial vorticity D_x v - D_y u (spectral derivatives), projected to zero mean.
ScalarField shear_layer_init(const Grid& grid, const ShearLayerSpec& spec);

struct ConvergenceConfig {
  int n = 64;
  double nu = 1e-3;
  double t_final = 1.0;
  double dt0 = 0.02;
  int levels = 5;  // dt_i = dt0 * 2^-i
  Scheme scheme = Scheme::imex_bdf3;
  double noise_floor = 1e-13;  // see RunConfig
};

/// Errors of one variable at one step size. Orders compare with the previous
/// (coarser) row of the same variable and are NaN on the first row.
struct ConvergenceRow {
  double dt = 0.0;
  std::string variable;  // "omega", "psi" or "u"
  double err_linf_l2 = 0.0;
  double order_linf_l2 = 0.0;
  double err_l2_h1 = 0.0;
  double order_l2_h1 = 0.0;
};

/// Taylor-Green runs at dt0 * 2^-i. The l-infinity(L2) error is the max over
/// all time levels of ||e||_2; the l2(H1) error is (dt sum_{k>=1} ||grad_N e^k||^2)^{1/2}.
/// Velocity errors combine both components. Rows are grouped by step size,
/// in the order omega, psi, u. Throws ConfigError for fewer than 3 levels.
std::vector<ConvergenceRow> convergence_study(const ConvergenceConfig& cfg);

}  // namespace bdf3ns
