#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bdf3ns/fft.hpp"
#include "bdf3ns/grid.hpp"

namespace bdf3ns {

/// Real grid function with a physical view (N x N values, row j = y_j) and a
/// spectral view (half-plane Fourier coefficients, see Grid).
///
/// Either view may be stale; operations bring the view they need up to date.
/// Storing only the non-negative x-modes makes every field real-valued by
/// construction, so conjugate symmetry never has to be repaired.
class ScalarField {
 public:
  enum class Freshness { physical, spectral, both };

  /// Zero field, both views fresh.
  explicit ScalarField(Grid grid);

  static ScalarField from_physical(Grid grid, std::vector<double> values);
  static ScalarField from_spectral(Grid grid, std::vector<Complex> coeffs);
  static ScalarField constant(Grid grid, double value);

  /// Samples fn(x, y) on the grid points.
  template <class Fn>
  static ScalarField sample(Grid grid, Fn&& fn) {
    std::vector<double> v(grid.size());
    const int n = grid.n();
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(j) * n + i] = fn(grid.x(i), grid.y(j));
    return from_physical(std::move(grid), std::move(v));
  }

  const Grid& grid() const noexcept { return grid_; }
  Freshness freshness() const noexcept;
  bool physical_fresh() const noexcept { return physical_fresh_; }
  bool spectral_fresh() const noexcept { return spectral_fresh_; }

  /// Throws std::logic_error when the requested view is stale.
  std::span<const double> physical() const;
  std::span<const Complex> spectral() const;

  /// Mutable access marks the other view stale.
  std::span<double> physical_mut();
  std::span<Complex> spectral_mut();

  double at(int i, int j) const { return physical()[static_cast<std::size_t>(j) * grid_.n() + i]; }

  /// Coefficient of signed mode (k, l), recovered through conjugate symmetry when needed.
  Complex mode(int k, int l) const;

  void ensure_physical();
  void ensure_spectral();
  /// Makes both views fresh.
  ScalarField& sync() &;
  ScalarField&& sync() &&;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);
  /// this += s * other
  ScalarField& add_scaled(double s, const ScalarField& other);

  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return std::move(a += b); }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return std::move(a -= b); }
  friend ScalarField operator*(double s, ScalarField a) { return std::move(a *= s); }
  friend ScalarField operator*(ScalarField a, double s) { return std::move(a *= s); }
  friend ScalarField operator-(ScalarField a) { return std::move(a *= -1.0); }

 private:
  ScalarField(Grid grid, std::vector<double> phys, std::vector<Complex> spec, bool pf, bool sf);

  Grid grid_;
  std::vector<double> physical_;
  std::vector<Complex> spectral_;
  bool physical_fresh_ = false;
  bool spectral_fresh_ = false;
};

ScalarField to_spectral(ScalarField f);
ScalarField to_physical(ScalarField f);

/// Velocity-like pair of fields on a common grid.
struct VectorField {
  VectorField(ScalarField x, ScalarField y);
  explicit VectorField(const Grid& grid);

  const Grid& grid() const noexcept { return x_comp.grid(); }
  VectorField& sync() &;

  ScalarField x_comp;
  ScalarField y_comp;
};

}  // namespace bdf3ns
