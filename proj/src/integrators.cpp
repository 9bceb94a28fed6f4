#include "bdf3ns/integrators.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "bdf3ns/convection.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/spectral.hpp"
#include "views.hpp"

namespace bdf3ns {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::imex_euler: return "euler";
    case Scheme::imex_bdf2: return "bdf2";
    case Scheme::imex_bdf3: return "bdf3";
  }
  return "bdf3";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "euler") return Scheme::imex_euler;
  if (name == "bdf2") return Scheme::imex_bdf2;
  if (name == "bdf3") return Scheme::imex_bdf3;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (n < 4) throw ConfigError("grid size n must be at least 4");
  if (!(length > 0.0)) throw ConfigError("domain length must be positive");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(nu > 0.0)) throw ConfigError("nu must be positive");
  if (!(t_final >= dt * (1.0 - 1e-12))) throw ConfigError("t_final must be at least dt");
  if (snapshot_every < 0 || series_every < 0) throw ConfigError("output cadences must be non-negative");
  if (!(noise_floor >= 0.0) || noise_floor >= 1.0) throw ConfigError("noise floor must lie in [0, 1)");
}

long RunConfig::step_count() const { return std::lround(t_final / dt); }

ScalarField helmholtz_solve(const ScalarField& rhs, double a, double dt, double nu) {
  if (!(a > 0.0) || !(dt > 0.0) || !(nu >= 0.0)) {
    throw ContractViolation("helmholtz_solve needs a > 0, dt > 0 and nu >= 0");
  }
  const Grid& g = rhs.grid();
  detail::SpectralOf s(rhs);
  std::vector<Complex> out(g.spectral_size());
  const int cols = g.spectral_cols();
  const double shift = a / dt;
  for (int r = 0; r < g.n(); ++r)
    for (int c = 0; c < cols; ++c) {
      const auto idx = static_cast<std::size_t>(r) * cols + c;
      const double k2 = -(g.kx_second()[static_cast<std::size_t>(c)] + g.ky_second()[static_cast<std::size_t>(r)]);
      out[idx] = s[idx] / (shift + nu * k2);
    }
  return ScalarField::from_spectral(g, std::move(out));
}

namespace {

void require_levels(const SolverState& state, int needed) {
  const int have = static_cast<int>(state.history.size());
  if (have < needed) throw StartupRequired(needed, have);
}

// Level from a freshly computed vorticity: kinematics, then its convection term.
HistoryLevel make_level(const ScalarField& omega, double t, bool dealias, FlowState& flow_out) {
  flow_out = make_state(omega, t);
  ScalarField conv = skew_convection(flow_out.velocity, flow_out.omega, dealias);
  return HistoryLevel{flow_out.omega, std::move(conv)};
}

void push_level(SolverState& state, const ScalarField& omega) {
  if (!std::isfinite(l2_norm(omega))) {
    throw NonFiniteField("non-finite vorticity at step " + std::to_string(state.step_index + 1));
  }
  ++state.step_index;
  FlowState flow{ScalarField(omega.grid()), ScalarField(omega.grid()), VectorField(omega.grid()), 0.0};
  HistoryLevel level = state.noise_floor > 0.0
                           ? make_level(noise_filter(omega, state.noise_floor), state.time(), state.dealias, flow)
                           : make_level(omega, state.time(), state.dealias, flow);
  state.latest = std::move(flow);
  state.history.insert(state.history.begin(), std::move(level));
  if (state.history.size() > 3) state.history.pop_back();
}

// f_N(t) made exactly mean-free, or nothing when unforced.
std::optional<ScalarField> forcing_at(const SolverState& state, double t) {
  if (!state.forcing) return std::nullopt;
  ScalarField f = to_spectral(state.forcing(t));
  require_same_grid(f.grid(), state.latest.omega.grid());
  const double m = mean(f);
  if (std::abs(m) > kMeanTolerance) throw MeanViolation(m);
  f.spectral_mut()[0] = Complex{};
  return f;
}

// -1/2 N + nu Lap w + f: the continuous right-hand side with N ~ 2 u.grad w.
ScalarField explicit_rhs(const ScalarField& omega, const ScalarField& convection, double nu,
                         const std::optional<ScalarField>& forcing) {
  ScalarField rhs = nu * laplacian(omega);
  rhs.add_scaled(-0.5, convection);
  if (forcing) rhs += *forcing;
  return rhs;
}

SolverState implicit_step(SolverState state, double a, ScalarField rhs) {
  const double t_next = state.time() + state.dt;
  if (auto f = forcing_at(state, t_next)) rhs += *f;
  const ScalarField next = helmholtz_solve(rhs, a, state.dt, state.nu);
  push_level(state, next);
  return state;
}

}  // namespace

SolverState initial_state(ScalarField omega0, double dt, double nu, Forcing forcing, bool dealias,
                          double noise_floor) {
  if (!(dt > 0.0) || !(nu > 0.0)) throw ConfigError("dt and nu must be positive");
  if (!(noise_floor >= 0.0) || noise_floor >= 1.0) throw ConfigError("noise floor must lie in [0, 1)");
  const Grid grid = omega0.grid();
  SolverState state{{}, FlowState{ScalarField(grid), ScalarField(grid), VectorField(grid), 0.0}, 0, dt, nu,
                    std::move(forcing), dealias, noise_floor};
  if (noise_floor > 0.0) omega0 = noise_filter(omega0, noise_floor);
  FlowState flow = state.latest;
  HistoryLevel level = make_level(omega0, 0.0, dealias, flow);
  state.latest = std::move(flow);
  state.history.push_back(std::move(level));
  return state;
}

SolverState rk2_step(SolverState state) {
  require_levels(state, 1);
  const double dt = state.dt;
  const double t0 = state.time();
  const HistoryLevel& now = state.history.front();

  const ScalarField k1 = explicit_rhs(now.omega, now.convection, state.nu, forcing_at(state, t0));
  ScalarField mid_omega = now.omega;
  mid_omega.add_scaled(0.5 * dt, k1);
  FlowState mid{ScalarField(mid_omega.grid()), ScalarField(mid_omega.grid()), VectorField(mid_omega.grid()), 0.0};
  const HistoryLevel mid_level = make_level(mid_omega, t0 + 0.5 * dt, state.dealias, mid);

  const ScalarField k2 =
      explicit_rhs(mid_level.omega, mid_level.convection, state.nu, forcing_at(state, t0 + 0.5 * dt));
  ScalarField next = now.omega;
  next.add_scaled(dt, k2);
  push_level(state, next);
  return state;
}

SolverState euler_step(SolverState state) {
  require_levels(state, 1);
  const auto& h = state.history;
  ScalarField rhs = (1.0 / state.dt) * h[0].omega;
  rhs.add_scaled(-0.5, h[0].convection);
  return implicit_step(std::move(state), 1.0, std::move(rhs));
}

SolverState bdf2_step(SolverState state) {
  require_levels(state, 2);
  const auto& h = state.history;
  const double dt = state.dt;
  ScalarField rhs = (2.0 / dt) * h[0].omega;
  rhs.add_scaled(-0.5 / dt, h[1].omega);
  rhs.add_scaled(-1.0, h[0].convection);
  rhs.add_scaled(0.5, h[1].convection);
  return implicit_step(std::move(state), 1.5, std::move(rhs));
}

SolverState bdf3_step(SolverState state) {
  require_levels(state, 3);
  const auto& h = state.history;
  const double dt = state.dt;
  ScalarField rhs = (3.0 / dt) * h[0].omega;
  rhs.add_scaled(-1.5 / dt, h[1].omega);
  rhs.add_scaled(1.0 / (3.0 * dt), h[2].omega);
  rhs.add_scaled(-1.5, h[0].convection);
  rhs.add_scaled(1.5, h[1].convection);
  rhs.add_scaled(-0.5, h[2].convection);
  return implicit_step(std::move(state), 11.0 / 6.0, std::move(rhs));
}

SolverState step(Scheme scheme, SolverState state) {
  switch (scheme) {
    case Scheme::imex_euler: return euler_step(std::move(state));
    case Scheme::imex_bdf2: return bdf2_step(std::move(state));
    case Scheme::imex_bdf3: return bdf3_step(std::move(state));
  }
  return bdf3_step(std::move(state));
}

SolverState startup(const ScalarField& omega0, const RunConfig& cfg, Forcing forcing) {
  cfg.validate();
  SolverState state = initial_state(omega0, cfg.dt, cfg.nu, std::move(forcing), cfg.dealias, cfg.noise_floor);
  state = rk2_step(std::move(state));
  return bdf2_step(std::move(state));
}

namespace {

constexpr std::array<double SeriesRecord::*, 9> kSeriesFields{
    &SeriesRecord::t,         &SeriesRecord::l2_omega,  &SeriesRecord::h1_omega,
    &SeriesRecord::energy,    &SeriesRecord::enstrophy, &SeriesRecord::div_error,
    &SeriesRecord::max_omega, &SeriesRecord::F,         &SeriesRecord::G1,
};

SeriesRecord record_for(const SolverState& s, const TelescopeCoeffs& coeffs) {
  const auto& h = s.history;
  const ScalarField& previous = h.size() > 1 ? h[1].omega : h.back().omega;
  const ScalarField& oldest = h.size() > 2 ? h[2].omega : h.back().omega;
  return make_series_record(s.latest, History3{h[0].omega, previous, oldest}, s.nu, s.dt, coeffs);
}

}  // namespace

RunSummary run(const ScalarField& omega0, const RunConfig& cfg, std::span<RunObserver* const> observers,
               Forcing forcing) {
  cfg.validate();
  if (omega0.grid().n() != cfg.n || omega0.grid().length() != cfg.length) {
    throw ConfigError("initial vorticity grid does not match the run configuration");
  }
  const TelescopeCoeffs& coeffs = telescope_coefficients();
  const long total = cfg.step_count();

  SolverState state = initial_state(omega0, cfg.dt, cfg.nu, std::move(forcing), cfg.dealias, cfg.noise_floor);
  const double norm0 = l2_norm(state.latest.omega);

  RunSummary summary{state.latest, 0, 0.0, {}, {}};
  SeriesRecord last_good = record_for(state, coeffs);
  bool have_range = false;

  auto emit = [&](const SolverState& s) {
    const long n = s.step_index;
    for (auto* o : observers) o->on_step(s);
    const bool final_level = n == total;
    if (cfg.series_every > 0 && (n % cfg.series_every == 0 || final_level)) {
      const SeriesRecord rec = record_for(s, coeffs);
      last_good = rec;
      summary.last = rec;
      if (!have_range) {
        summary.range = {rec, rec};
        have_range = true;
      }
      for (auto m : kSeriesFields) {
        summary.range.min.*m = std::min(summary.range.min.*m, rec.*m);
        summary.range.max.*m = std::max(summary.range.max.*m, rec.*m);
      }
      for (auto* o : observers) o->on_series(rec);
    }
    if (cfg.snapshot_every > 0 && (n % cfg.snapshot_every == 0 || final_level)) {
      for (auto* o : observers) o->on_snapshot(s.latest, n);
    }
  };

  auto check = [&](const SolverState& s) {
    const double norm = l2_norm(s.latest.omega);
    const bool runaway = norm0 > 0.0 && norm > kBlowUpGrowth * norm0;
    if (!std::isfinite(norm) || runaway || !std::isfinite(max_abs(s.latest.omega))) {
      throw BlowUp(s.step_index, last_good);
    }
  };

  emit(state);
  double seconds = 0.0;
  for (long n = 1; n <= total; ++n) {
    const auto start = std::chrono::steady_clock::now();
    try {
      if (n == 1) state = rk2_step(std::move(state));
      else if (n == 2) state = bdf2_step(std::move(state));
      else state = step(cfg.scheme, std::move(state));
    } catch (const NonFiniteField&) {
      throw BlowUp(n, last_good);
    }
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(state);
    emit(state);
  }

  summary.final_state = state.latest;
  summary.steps = total;
  summary.seconds_per_step = total > 0 ? seconds / static_cast<double>(total) : 0.0;
  if (!have_range) {
    summary.last = record_for(state, coeffs);
    summary.range = {summary.last, summary.last};
  }
  return summary;
}

}  // namespace bdf3ns
