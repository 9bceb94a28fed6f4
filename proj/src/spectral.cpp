#include "bdf3ns/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "views.hpp"

namespace bdf3ns {
namespace {

constexpr Complex kI{0.0, 1.0};

// out = (i kx) a + (i ky) b, with either operand optional.
ScalarField first_derivative_combination(const Grid& g, const ScalarField* a, const ScalarField* b) {
  std::vector<Complex> out(g.spectral_size(), Complex{});
  const int rows = g.n();
  const int cols = g.spectral_cols();
  const auto kx = g.kx_first();
  const auto ky = g.ky_first();
  if (a) {
    detail::SpectralOf s(*a);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const auto idx = static_cast<std::size_t>(r) * cols + c;
        out[idx] += kI * kx[static_cast<std::size_t>(c)] * s[idx];
      }
  }
  if (b) {
    detail::SpectralOf s(*b);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const auto idx = static_cast<std::size_t>(r) * cols + c;
        out[idx] += kI * ky[static_cast<std::size_t>(r)] * s[idx];
      }
  }
  return ScalarField::from_spectral(g, std::move(out));
}

}  // namespace

ScalarField derivative(const ScalarField& f, Axis axis, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  const Grid& g = f.grid();
  if (order == 1) {
    return axis == Axis::x ? first_derivative_combination(g, &f, nullptr)
                           : first_derivative_combination(g, nullptr, &f);
  }
  detail::SpectralOf s(f);
  std::vector<Complex> out(g.spectral_size());
  const int cols = g.spectral_cols();
  const auto kx2 = g.kx_second();
  const auto ky2 = g.ky_second();
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      const double m = axis == Axis::x ? kx2[static_cast<std::size_t>(c)] : ky2[static_cast<std::size_t>(r)];
      out[idx] = m * s[idx];
    }
  return ScalarField::from_spectral(g, std::move(out));
}

VectorField gradient(const ScalarField& f) {
  return {derivative(f, Axis::x, 1), derivative(f, Axis::y, 1)};
}

ScalarField divergence(const VectorField& v) {
  return first_derivative_combination(v.grid(), &v.x_comp, &v.y_comp);
}

ScalarField laplacian(const ScalarField& f) {
  const Grid& g = f.grid();
  detail::SpectralOf s(f);
  std::vector<Complex> out(g.spectral_size());
  const int cols = g.spectral_cols();
  const auto kx2 = g.kx_second();
  const auto ky2 = g.ky_second();
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      out[idx] = (kx2[static_cast<std::size_t>(c)] + ky2[static_cast<std::size_t>(r)]) * s[idx];
    }
  return ScalarField::from_spectral(g, std::move(out));
}

VectorField perp_gradient(const ScalarField& f) {
  return {derivative(f, Axis::y, 1), -derivative(f, Axis::x, 1)};
}

double inner_product(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid());
  detail::PhysicalOf a(f);
  detail::PhysicalOf b(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.grid().size(); ++i) sum += a[i] * b[i];
  const double h = f.grid().spacing();
  return h * h * sum;
}

double spectral_inner_product(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid());
  const Grid& grid = f.grid();
  detail::SpectralOf a(f);
  detail::SpectralOf b(g);
  const int cols = grid.spectral_cols();
  double sum = 0.0;
  for (int r = 0; r < grid.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      sum += grid.column_weight(c) * (a[idx] * std::conj(b[idx])).real();
    }
  return grid.length() * grid.length() * sum;
}

double inner_product(const VectorField& f, const VectorField& g) {
  return inner_product(f.x_comp, g.x_comp) + inner_product(f.y_comp, g.y_comp);
}

double l2_norm(const ScalarField& f) {
  const double sq = f.physical_fresh() ? inner_product(f, f) : spectral_inner_product(f, f);
  return std::sqrt(std::max(sq, 0.0));
}

double l2_norm(const VectorField& v) {
  const double a = l2_norm(v.x_comp);
  const double b = l2_norm(v.y_comp);
  return std::sqrt(a * a + b * b);
}

double mean(const ScalarField& f) {
  if (f.spectral_fresh()) return f.spectral()[0].real();
  double sum = 0.0;
  for (double v : f.physical()) sum += v;
  return sum / static_cast<double>(f.grid().size());
}

double max_abs(const ScalarField& f) {
  detail::PhysicalOf p(f);
  double m = 0.0;
  for (double v : *p) m = std::max(m, std::abs(v));
  return m;
}

ScalarField dealias(const ScalarField& f) {
  const Grid& g = f.grid();
  detail::SpectralOf s(f);
  std::vector<Complex> out(s.operator*().begin(), s.operator*().end());
  const int n = g.n();
  const int cols = g.spectral_cols();
  for (int r = 0; r < n; ++r) {
    const int l = g.wavenumber(r);
    for (int c = 0; c < cols; ++c) {
      if (3 * std::abs(l) > n || 3 * c > n) out[static_cast<std::size_t>(r) * cols + c] = Complex{};
    }
  }
  return ScalarField::from_spectral(g, std::move(out));
}

}  // namespace bdf3ns

namespace bdf3ns {

ScalarField noise_filter(const ScalarField& f, double relative) {
  if (!(relative >= 0.0)) throw std::invalid_argument("noise_filter: threshold must be non-negative");
  detail::SpectralOf s(f);
  std::vector<Complex> out(s.operator*().begin(), s.operator*().end());
  double peak = 0.0;
  for (const auto& c : out) peak = std::max(peak, std::abs(c));
  const double cut = relative * peak;
  for (auto& c : out)
    if (std::abs(c) < cut) c = Complex{};
  return ScalarField::from_spectral(f.grid(), std::move(out));
}

}  // namespace bdf3ns
