#pragma once

#include "bdf3ns/field.hpp"

namespace bdf3ns {

enum class Axis { x, y };

/// Spectral derivative of order 1 or 2 along `axis`.
/// Order 1 applies i*kappa with the Nyquist mode zeroed (even N); order 2
/// applies -kappa^2 and keeps the Nyquist mode. Result is spectral-fresh.
ScalarField derivative(const ScalarField& f, Axis axis, int order);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
/// Sum of the two second derivatives.
ScalarField laplacian(const ScalarField& f);
/// (D_y f, -D_x f).
VectorField perp_gradient(const ScalarField& f);

/// h^2 * sum_ij f_ij g_ij, evaluated in physical space.
double inner_product(const ScalarField& f, const ScalarField& g);
/// L^2 * sum_k fhat_k conj(ghat_k) over all modes (Parseval form).
double spectral_inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField& f, const VectorField& g);

double l2_norm(const ScalarField& f);
double l2_norm(const VectorField& v);
/// Average value of f (the (0,0) coefficient), not the integral.
double mean(const ScalarField& f);
double max_abs(const ScalarField& f);

/// Zeroes every mode with |k| > N/3 or |l| > N/3 (2/3-rule truncation). Result is spectral-fresh.
ScalarField dealias(const ScalarField& f);

/// Zeroes every coefficient with |fhat_k| < relative * max_k |fhat_k|
/// (Krasny-type filter). Keeps roundoff from seeding modes that explicit
/// convection amplifies. Result is spectral-fresh.
ScalarField noise_filter(const ScalarField& f, double relative);

}  // namespace bdf3ns
