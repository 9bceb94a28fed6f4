#pragma once

#include <span>
#include <vector>

#include "bdf3ns/field.hpp"

namespace bdf3ns::detail {

// Read-only view of a field's spectral coefficients, transforming into a
// private buffer only when the field's own spectral view is stale.
class SpectralOf {
 public:
  explicit SpectralOf(const ScalarField& f) {
    if (f.spectral_fresh()) {
      view_ = f.spectral();
    } else {
      owned_.resize(f.grid().spectral_size());
      fft::forward(f.grid(), f.physical(), owned_);
      view_ = owned_;
    }
  }
  SpectralOf(const SpectralOf&) = delete;
  SpectralOf& operator=(const SpectralOf&) = delete;

  std::span<const Complex> operator*() const noexcept { return view_; }
  const Complex& operator[](std::size_t i) const noexcept { return view_[i]; }

 private:
  std::vector<Complex> owned_;
  std::span<const Complex> view_;
};

class PhysicalOf {
 public:
  explicit PhysicalOf(const ScalarField& f) {
    if (f.physical_fresh()) {
      view_ = f.physical();
    } else {
      owned_.resize(f.grid().size());
      fft::inverse(f.grid(), f.spectral(), owned_);
      view_ = owned_;
    }
  }
  PhysicalOf(const PhysicalOf&) = delete;
  PhysicalOf& operator=(const PhysicalOf&) = delete;

  std::span<const double> operator*() const noexcept { return view_; }
  double operator[](std::size_t i) const noexcept { return view_[i]; }

 private:
  std::vector<double> owned_;
  std::span<const double> view_;
};

}  // namespace bdf3ns::detail
