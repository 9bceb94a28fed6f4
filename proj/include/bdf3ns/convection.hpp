#pragma once

#include "bdf3ns/field.hpp"

namespace bdf3ns {

/// Relative tolerance of the divergence-free precondition of skew_convection.
inline constexpr double kDivergencePrecondition = 1e-8;

/// Skew-symmetric convection term
///
///   N(u, w) = u . grad_N w + div_N(u w) - mean(u . grad_N w).
///
/// Products are formed pointwise in physical space, derivatives spectrally.
/// For divergence-free u the result is mean-free and discretely orthogonal to
/// w; it approximates 2 u . grad w. With `dealias` the inputs and the
/// result are truncated by the 2/3 rule. The result is spectral-fresh.
///
/// Throws ContractViolation when ||div_N u||_2 exceeds kDivergencePrecondition
/// times max(||w||_2, ||grad_N u||_2).
ScalarField skew_convection(const VectorField& velocity, const ScalarField& omega, bool dealias = false);

}  // namespace bdf3ns
