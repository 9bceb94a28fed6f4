#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace bdf3ns {

/// Uniform periodic N x N collocation grid over [0, L]^2.
///
/// Grid points are x_i = i h, y_j = j h for 0 <= i, j < N with h = L / N.
/// Grid index i maps to the signed mode k in {-floor(N/2), ..., ceil(N/2) - 1};
/// for odd N = 2K + 1 this is the symmetric range {-K, ..., K}.
///
/// Spectral data uses the half-plane layout of a real-to-complex transform:
/// N rows indexed by the y-mode and N/2 + 1 columns holding the non-negative
/// x-modes. For even N the last column is the x-Nyquist mode.
///
/// Copies are cheap and share the precomputed multiplier tables.
class Grid {
 public:
  explicit Grid(int n, double length = 1.0);

  int n() const noexcept { return data_->n; }
  double length() const noexcept { return data_->length; }
  double spacing() const noexcept { return data_->spacing; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n()) * n(); }

  int spectral_cols() const noexcept { return n() / 2 + 1; }
  std::size_t spectral_size() const noexcept { return static_cast<std::size_t>(n()) * spectral_cols(); }

  bool has_nyquist() const noexcept { return n() % 2 == 0; }

  /// Signed mode for grid index `index`.
  int wavenumber(int index) const { return data_->wavenumbers[static_cast<std::size_t>(index)]; }
  std::span<const int> wavenumbers() const noexcept { return data_->wavenumbers; }

  /// Grid index holding signed mode `k` (inverse of wavenumber()).
  int index_of_mode(int k) const;

  double x(int i) const noexcept { return i * spacing(); }
  double y(int j) const noexcept { return j * spacing(); }

  /// 2 pi / L.
  double base_wavenumber() const noexcept { return data_->base; }

  // First-derivative multipliers (real part of i*kappa, i.e. kappa); Nyquist is 0.
  std::span<const double> kx_first() const noexcept { return data_->kx_first; }
  std::span<const double> ky_first() const noexcept { return data_->ky_first; }
  // Second-derivative multipliers -kappa^2, Nyquist retained.
  std::span<const double> kx_second() const noexcept { return data_->kx_second; }
  std::span<const double> ky_second() const noexcept { return data_->ky_second; }

  /// Parseval weight of a half-plane column: 1 for self-conjugate columns, 2 otherwise.
  double column_weight(int col) const noexcept {
    return (col == 0 || (has_nyquist() && col == n() / 2)) ? 1.0 : 2.0;
  }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.data_ == b.data_ || (a.n() == b.n() && a.length() == b.length());
  }

 private:
  struct Data {
    int n;
    double length;
    double spacing;
    double base;
    std::vector<int> wavenumbers;
    std::vector<double> kx_first, ky_first, kx_second, ky_second;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws GridMismatch when the two grids differ.
void require_same_grid(const Grid& a, const Grid& b);

}  // namespace bdf3ns
