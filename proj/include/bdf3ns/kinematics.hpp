#pragma once

#include "bdf3ns/field.hpp"

namespace bdf3ns {

/// Largest |mean| accepted (and projected away) on fields that must be mean-free.
inline constexpr double kMeanTolerance = 1e-10;

/// Vorticity, stream function and velocity at one time level.
///
/// Invariants: mean(omega) = mean(psi) = 0, -Lap_N psi = omega,
/// div_N velocity = 0 up to roundoff. Fields are kept with both views fresh.
struct FlowState {
  ScalarField omega;
  ScalarField psi;
  VectorField velocity;
  double time = 0.0;
};

/// Solves -Lap_N psi = omega mode by mode with psi_hat(0,0) = 0.
/// Throws MeanViolation when |mean(omega)| > kMeanTolerance.
ScalarField solve_poisson(const ScalarField& omega);

/// u = (D_y psi, -D_x psi), returned with both views fresh.
VectorField velocity_from_stream(const ScalarField& psi);

/// Projects the mean of omega to exactly zero (after checking it is within
/// kMeanTolerance) and builds the full kinematic state.
FlowState make_state(ScalarField omega, double time);

/// ||f||_2 / ||grad_N f||_2, the empirical discrete Poincare ratio (0 for a zero field).
double poincare_ratio(const ScalarField& f);

}  // namespace bdf3ns
