#include "bdf3ns/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "bdf3ns/errors.hpp"

namespace bdf3ns {

ScalarField::ScalarField(Grid grid)
    : grid_(std::move(grid)),
      physical_(grid_.size(), 0.0),
      spectral_(grid_.spectral_size(), Complex{}),
      physical_fresh_(true),
      spectral_fresh_(true) {}

ScalarField::ScalarField(Grid grid, std::vector<double> phys, std::vector<Complex> spec, bool pf, bool sf)
    : grid_(std::move(grid)),
      physical_(std::move(phys)),
      spectral_(std::move(spec)),
      physical_fresh_(pf),
      spectral_fresh_(sf) {}

ScalarField ScalarField::from_physical(Grid grid, std::vector<double> values) {
  if (values.size() != grid.size()) throw std::invalid_argument("from_physical: expected N*N values");
  return ScalarField(std::move(grid), std::move(values), {}, true, false);
}

ScalarField ScalarField::from_spectral(Grid grid, std::vector<Complex> coeffs) {
  if (coeffs.size() != grid.spectral_size()) throw std::invalid_argument("from_spectral: expected N*(N/2+1) coefficients");
  return ScalarField(std::move(grid), {}, std::move(coeffs), false, true);
}

ScalarField ScalarField::constant(Grid grid, double value) {
  ScalarField f(std::move(grid));
  std::fill(f.physical_.begin(), f.physical_.end(), value);
  f.spectral_[0] = value;
  return f;
}

ScalarField::Freshness ScalarField::freshness() const noexcept {
  if (physical_fresh_ && spectral_fresh_) return Freshness::both;
  return physical_fresh_ ? Freshness::physical : Freshness::spectral;
}

std::span<const double> ScalarField::physical() const {
  if (!physical_fresh_) throw std::logic_error("physical view is stale; call ensure_physical()");
  return physical_;
}

std::span<const Complex> ScalarField::spectral() const {
  if (!spectral_fresh_) throw std::logic_error("spectral view is stale; call ensure_spectral()");
  return spectral_;
}

std::span<double> ScalarField::physical_mut() {
  ensure_physical();
  spectral_fresh_ = false;
  return physical_;
}

std::span<Complex> ScalarField::spectral_mut() {
  ensure_spectral();
  physical_fresh_ = false;
  return spectral_;
}

Complex ScalarField::mode(int k, int l) const {
  const int n = grid_.n();
  grid_.index_of_mode(k);  // range check
  grid_.index_of_mode(l);
  const auto spec = spectral();
  const int cols = grid_.spectral_cols();
  auto wrap = [n](int m) { return ((m % n) + n) % n; };
  if (k >= 0) return spec[static_cast<std::size_t>(wrap(l)) * cols + k];
  if (n % 2 == 0 && k == -n / 2) return spec[static_cast<std::size_t>(wrap(l)) * cols + n / 2];
  return std::conj(spec[static_cast<std::size_t>(wrap(-l)) * cols + (-k)]);
}

void ScalarField::ensure_physical() {
  if (physical_fresh_) return;
  physical_.resize(grid_.size());
  fft::inverse(grid_, spectral_, physical_);
  physical_fresh_ = true;
}

void ScalarField::ensure_spectral() {
  if (spectral_fresh_) return;
  spectral_.resize(grid_.spectral_size());
  fft::forward(grid_, physical_, spectral_);
  spectral_fresh_ = true;
}

ScalarField& ScalarField::sync() & {
  ensure_physical();
  ensure_spectral();
  return *this;
}

ScalarField&& ScalarField::sync() && {
  ensure_physical();
  ensure_spectral();
  return std::move(*this);
}

ScalarField& ScalarField::add_scaled(double s, const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  const bool phys = physical_fresh_ && other.physical_fresh_;
  const bool spec = spectral_fresh_ && other.spectral_fresh_;
  if (!phys && !spec) {
    ScalarField tmp = other;
    if (physical_fresh_) tmp.ensure_physical();
    else tmp.ensure_spectral();
    return add_scaled(s, tmp);
  }
  if (phys) {
    for (std::size_t i = 0; i < physical_.size(); ++i) physical_[i] += s * other.physical_[i];
  }
  if (spec) {
    for (std::size_t i = 0; i < spectral_.size(); ++i) spectral_[i] += s * other.spectral_[i];
  }
  physical_fresh_ = phys;
  spectral_fresh_ = spec;
  return *this;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) { return add_scaled(1.0, other); }
ScalarField& ScalarField::operator-=(const ScalarField& other) { return add_scaled(-1.0, other); }

ScalarField& ScalarField::operator*=(double s) {
  if (physical_fresh_)
    for (auto& v : physical_) v *= s;
  if (spectral_fresh_)
    for (auto& c : spectral_) c *= s;
  return *this;
}

ScalarField to_spectral(ScalarField f) {
  f.ensure_spectral();
  return f;
}

ScalarField to_physical(ScalarField f) {
  f.ensure_physical();
  return f;
}

VectorField::VectorField(ScalarField x, ScalarField y) : x_comp(std::move(x)), y_comp(std::move(y)) {
  require_same_grid(x_comp.grid(), y_comp.grid());
}

VectorField::VectorField(const Grid& grid) : x_comp(grid), y_comp(grid) {}

VectorField& VectorField::sync() & {
  x_comp.sync();
  y_comp.sync();
  return *this;
}

}  // namespace bdf3ns
