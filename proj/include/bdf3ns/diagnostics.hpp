#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "bdf3ns/field.hpp"
#include "bdf3ns/kinematics.hpp"

namespace bdf3ns {

/// One row of the monitored time series.
struct SeriesRecord {
  double t = 0.0;
  double l2_omega = 0.0;
  double h1_omega = 0.0;  // sqrt(||w||^2 + ||grad_N w||^2)
  double energy = 0.0;
  double enstrophy = 0.0;
  double div_error = 0.0;
  double max_omega = 0.0;
  double F = 0.0;
  double G1 = 0.0;
};

/// ||grad_N^m f||_2 evaluated spectrally: (sum |kappa|^{2m} |fhat|^2 L^2)^{1/2}.
double hm_norm(const ScalarField& f, int m);

/// 1/2 ||u||_2^2.
double energy(const FlowState& s);
/// 1/2 ||omega||_2^2.
double enstrophy(const FlowState& s);
/// ||div_N u||_2.
double div_error(const FlowState& s);

// ---------------------------------------------------------------------------
// Telescope decomposition of the BDF3 stencil
// ---------------------------------------------------------------------------

/// Coefficients alpha_1..alpha_10 of the identity
///
///   <11/6 f3 - 3 f2 + 3/2 f1 - 1/3 f0, 2 f3 - f2>
///     = P(f3, f2, f1) - P(f2, f1, f0) + ||a7 f3 + a8 f2 + a9 f1 + a10 f0||^2,
///   P(x, y, z) = ||a1 x||^2 + ||a2 x + a3 y||^2 + ||a4 x + a5 y + a6 z||^2.
///
/// Stored zero-based: alpha[0] is alpha_1.
struct TelescopeCoeffs {
  std::array<double, 10> alpha{};
  /// Largest absolute monomial-coefficient residual at the accepted solution.
  double residual = 0.0;
  /// Number of distinct canonical solutions seen across all starts.
  int distinct_solutions = 0;

  double a(int i) const { return alpha.at(static_cast<std::size_t>(i - 1)); }
  double composite1() const { return a(1) * a(1) + 2 * a(2) * a(2) + 3 * a(4) * a(4); }
  double composite2() const { return 2 * a(3) * a(3) + 3 * a(5) * a(5); }
  double composite3() const { return 3 * a(6) * a(6); }
  /// Usable for the stability functionals: finite with alpha_1 != 0.
  bool valid() const noexcept;
};

struct TelescopeOptions {
  int starts = 64;
  double box = 3.0;  // starts drawn uniformly from [-box, box]^10
  double accept_residual = 1e-12;
  double fail_residual = 1e-10;
  int max_iterations = 500;
  std::uint64_t seed = 20240611;
};

/// Multi-start damped Newton (Levenberg-Marquardt) solve of the 10 monomial
/// equations, with alpha_10 = -(alpha_7 + alpha_8 + alpha_9) eliminated. Returns the first accepted root, canonicalized so that the
/// leading entry of each sign-symmetric group (alpha_1, (alpha_2, alpha_3),
/// (alpha_4..alpha_6), (alpha_7..alpha_10)) is positive.
/// Throws SolverFailure if no start reaches options.fail_residual.
TelescopeCoeffs solve_telescope_coefficients(const TelescopeOptions& options = {});

/// Solved once per process and shared.
const TelescopeCoeffs& telescope_coefficients();

/// Left minus right side of the scalar identity at (a, b, c, d) = (f3, f2, f1, f0).
double telescope_identity_defect(const TelescopeCoeffs& c, double f3, double f2, double f1, double f0);

struct TelescopeVerification {
  double scalar_residual = 0.0;  // max relative defect of the scalar identity
  double field_residual = 0.0;   // max relative defect of the inner-product form on grid functions
  double split_residual = 0.0;   // max relative defect of the 2/3, 7/6, 1/3 stencil rearrangement
  double combined_slack = 0.0;   // min (lhs - rhs) / scale of the combined lower bound; must be >= 0
  double max_residual() const;
};

TelescopeVerification verify_telescope_report(const TelescopeCoeffs& c, int trials, std::uint64_t seed = 7);
/// Maximum relative residual over `trials` random scalar tuples and grid functions.
double verify_telescope(const TelescopeCoeffs& c, int trials);

// ---------------------------------------------------------------------------
// Stability functionals
// ---------------------------------------------------------------------------

/// Vorticity history newest first: (w^n, w^{n-1}, w^{n-2}).
struct History3 {
  const ScalarField& newest;
  const ScalarField& previous;
  const ScalarField& oldest;
};

/// L^2-level functional F^n. Throws ConfigError for invalid coefficients.
double stability_F(const History3& h, double nu, double dt, const TelescopeCoeffs& c);
/// H^1-level functional G_1^n.
double stability_G1(const History3& h, double nu, double dt, const TelescopeCoeffs& c);

/// Full series row. `h` must start with s.omega.
SeriesRecord make_series_record(const FlowState& s, const History3& h, double nu, double dt,
                                const TelescopeCoeffs& c);

}  // namespace bdf3ns
