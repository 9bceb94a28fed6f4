#pragma once

#include <complex>
#include <span>

#include "bdf3ns/grid.hpp"

namespace bdf3ns {

using Complex = std::complex<double>;

namespace fft {

/// Real-to-complex forward transform, normalized by 1/N^2 so that
/// f_{ij} = sum_{k,l} fhat_{k,l} exp(2 pi i (k x_i + l y_j) / L).
/// `physical` has grid.size() entries (row j holds y_j), `spectral` has grid.spectral_size().
void forward(const Grid& grid, std::span<const double> physical, std::span<Complex> spectral);

/// Inverse of forward(); `spectral` is left untouched.
void inverse(const Grid& grid, std::span<const Complex> spectral, std::span<double> physical);

}  // namespace fft
}  // namespace bdf3ns
