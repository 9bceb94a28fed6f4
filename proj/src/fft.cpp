#include "bdf3ns/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace bdf3ns::fft {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan p) const noexcept { fftw_destroy_plan(p); }
};
using PlanHandle = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

struct PlanPair {
  PlanHandle r2c;
  PlanHandle c2r;
};

// FFTW planning is not thread-safe; execution of an existing plan on new arrays is.
const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const auto real_size = static_cast<std::size_t>(n) * n;
  const auto cplx_size = static_cast<std::size_t>(n) * (n / 2 + 1);
  std::vector<double> real(real_size);
  std::vector<Complex> cplx(cplx_size);
  auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
  // ESTIMATE keeps plans (and therefore results) reproducible run to run.
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair pair{PlanHandle(fftw_plan_dft_r2c_2d(n, n, real.data(), c, flags)),
                PlanHandle(fftw_plan_dft_c2r_2d(n, n, c, real.data(), flags | FFTW_DESTROY_INPUT))};
  if (!pair.r2c || !pair.c2r) throw std::runtime_error("FFTW planning failed");
  return cache.emplace(n, std::move(pair)).first->second;
}

}  // namespace

void forward(const Grid& grid, std::span<const double> physical, std::span<Complex> spectral) {
  if (physical.size() != grid.size() || spectral.size() != grid.spectral_size()) {
    throw std::invalid_argument("fft::forward: buffer sizes do not match the grid");
  }
  const auto& p = plans_for(grid.n());
  // r2c preserves its input.
  fftw_execute_dft_r2c(p.r2c.get(), const_cast<double*>(physical.data()),
                       reinterpret_cast<fftw_complex*>(spectral.data()));
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : spectral) c *= scale;
}

void inverse(const Grid& grid, std::span<const Complex> spectral, std::span<double> physical) {
  if (physical.size() != grid.size() || spectral.size() != grid.spectral_size()) {
    throw std::invalid_argument("fft::inverse: buffer sizes do not match the grid");
  }
  const auto& p = plans_for(grid.n());
  thread_local std::vector<Complex> scratch;
  scratch.assign(spectral.begin(), spectral.end());
  fftw_execute_dft_c2r(p.c2r.get(), reinterpret_cast<fftw_complex*>(scratch.data()), physical.data());
}

}  // namespace bdf3ns::fft
