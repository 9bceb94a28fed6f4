#pragma once

#include <iosfwd>
#include <random>

#include "bdf3ns/field.hpp"

namespace bdf3ns {

/// Random real field with zero mean. Coefficients are uniform in a disc of
/// radius (1 + |k|^2)^(-decay/2); decay = 0 gives a rough, full-spectrum field.
ScalarField random_mean_free_field(const Grid& grid, std::mt19937_64& rng, double decay = 2.0);

/// Divergence-free velocity built as perp_gradient of a random stream function.
VectorField random_solenoidal_velocity(const Grid& grid, std::mt19937_64& rng, double decay = 2.0);

/// Runs the built-in property checks, one "PASS name ..." / "FAIL name ..."
/// line each. Returns true when all pass.
bool run_invariant_suite(std::ostream& out);

}  // namespace bdf3ns
