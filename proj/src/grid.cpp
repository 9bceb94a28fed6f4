#include "bdf3ns/grid.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "bdf3ns/errors.hpp"

namespace bdf3ns {

Grid::Grid(int n, double length) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points per axis, got " + std::to_string(n));
  if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");

  auto d = std::make_shared<Data>();
  d->n = n;
  d->length = length;
  d->spacing = length / n;
  d->base = 2.0 * std::numbers::pi / length;

  const int positive = (n + 1) / 2;  // ceil(N/2) non-negative modes
  d->wavenumbers.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d->wavenumbers[static_cast<std::size_t>(i)] = i < positive ? i : i - n;

  const bool even = n % 2 == 0;
  const int cols = n / 2 + 1;
  d->kx_first.resize(static_cast<std::size_t>(cols));
  d->kx_second.resize(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) {
    const double kappa = d->base * c;
    d->kx_first[static_cast<std::size_t>(c)] = (even && c == n / 2) ? 0.0 : kappa;
    d->kx_second[static_cast<std::size_t>(c)] = -kappa * kappa;
  }
  d->ky_first.resize(static_cast<std::size_t>(n));
  d->ky_second.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const int k = d->wavenumbers[static_cast<std::size_t>(r)];
    const double kappa = d->base * k;
    d->ky_first[static_cast<std::size_t>(r)] = (even && k == -n / 2) ? 0.0 : kappa;
    d->ky_second[static_cast<std::size_t>(r)] = -kappa * kappa;
  }
  data_ = std::move(d);
}

int Grid::index_of_mode(int k) const {
  const int lo = -(n() / 2);
  const int hi = (n() + 1) / 2 - 1;
  if (k < lo || k > hi) throw std::out_of_range("mode " + std::to_string(k) + " not representable on this grid");
  return k >= 0 ? k : k + n();
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) {
    throw GridMismatch("grid mismatch: N=" + std::to_string(a.n()) + " vs N=" + std::to_string(b.n()));
  }
}

}  // namespace bdf3ns
