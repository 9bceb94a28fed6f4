#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/field.hpp"
#include "bdf3ns/kinematics.hpp"

namespace bdf3ns {

enum class Scheme { imex_euler, imex_bdf2, imex_bdf3 };

/// History levels consumed by one step of `scheme`.
constexpr int history_levels(Scheme scheme) {
  switch (scheme) {
    case Scheme::imex_euler: return 1;
    case Scheme::imex_bdf2: return 2;
    case Scheme::imex_bdf3: return 3;
  }
  return 3;
}

/// "euler", "bdf2", "bdf3".
std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// Forcing f_N(t); must return a mean-free field on the solver grid.
using Forcing = std::function<ScalarField(double t)>;

/// One stored time level: vorticity and its cached skew convection term.
struct HistoryLevel {
  ScalarField omega;
  ScalarField convection;
};

/// Rolling multistep state. `history` is newest first and holds at most three
/// levels; `latest` is the full kinematic state of history.front().
struct SolverState {
  std::vector<HistoryLevel> history;
  FlowState latest;
  long step_index = 0;
  double dt = 0.0;
  double nu = 0.0;
  Forcing forcing;
  bool dealias = false;
  double noise_floor = 0.0;  // relative threshold of noise_filter; 0 disables

  double time() const noexcept { return static_cast<double>(step_index) * dt; }
};

struct RunConfig {
  int n = 64;
  double length = 1.0;
  double dt = 0.01;
  double nu = 1e-3;
  double t_final = 1.0;
  Scheme scheme = Scheme::imex_bdf3;
  int snapshot_every = 0;  // 0 disables snapshots
  int series_every = 1;    // 0 disables the series
  bool dealias = false;
  /// Relative spectral noise floor applied to every new level (0 disables).
  /// Explicit convection amplifies roundoff in well-resolved high modes once
  /// |kappa| |u| dt exceeds about 0.6; the floor keeps that roundoff at zero.
  double noise_floor = 1e-13;

  /// Throws ConfigError on dt <= 0, t_final < dt, n < 4 or nu <= 0.
  void validate() const;
  /// Number of steps to reach t_final.
  long step_count() const;
};

/// Solves (a/dt - nu Lap_N) w = rhs mode by mode. Result is spectral-fresh.
/// The (0,0) mode becomes rhs_hat(0,0) dt / a, so a mean-free rhs gives a
/// mean-free result. Throws ContractViolation unless a > 0, dt > 0, nu >= 0.
ScalarField helmholtz_solve(const ScalarField& rhs, double a, double dt, double nu);

/// Wraps a mean-free vorticity level into a single-level solver state.
SolverState initial_state(ScalarField omega0, double dt, double nu, Forcing forcing = {}, bool dealias = false,
                          double noise_floor = 0.0);

/// One explicit-midpoint RK2 step on dw/dt = -1/2 N(u, w) + nu Lap_N w + f.
SolverState rk2_step(SolverState state);
/// IMEX Euler: (w+ - w)/dt + 1/2 N = nu Lap w+ + f.
SolverState euler_step(SolverState state);
/// IMEX BDF2: (3 w+ - 4 w + w-)/(2 dt) + N - 1/2 N- = nu Lap w+ + f.
SolverState bdf2_step(SolverState state);
/// IMEX BDF3: (11/6 w+ - 3 w + 3/2 w- - 1/3 w--)/dt + 3/2 N - 3/2 N- + 1/2 N-- = nu Lap w+ + f.
SolverState bdf3_step(SolverState state);
SolverState step(Scheme scheme, SolverState state);

/// w^0 := omega0, w^1 by RK2, w^2 by BDF2. Returns a three-level state at n = 2.
SolverState startup(const ScalarField& omega0, const RunConfig& cfg, Forcing forcing = {});

/// Receives output from a run. All callbacks default to no-ops.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  /// Every accepted time level, including n = 0.
  virtual void on_step(const SolverState& /*state*/) {}
  virtual void on_series(const SeriesRecord& /*record*/) {}
  virtual void on_snapshot(const FlowState& /*state*/, long /*step*/) {}
};

struct DiagnosticRange {
  SeriesRecord min;
  SeriesRecord max;
};

struct RunSummary {
  FlowState final_state;
  long steps = 0;
  double seconds_per_step = 0.0;
  SeriesRecord last;
  DiagnosticRange range;
};

/// Non-finite data or runaway growth during a run.
class BlowUp : public std::runtime_error {
 public:
  BlowUp(long step, SeriesRecord last_good)
      : std::runtime_error("blow-up detected at step " + std::to_string(step)), step_(step), last_good_(last_good) {}
  long step() const noexcept { return step_; }
  const SeriesRecord& last_good() const noexcept { return last_good_; }

 private:
  long step_;
  SeriesRecord last_good_;
};

/// Growth factor of ||w||_2 over its initial value treated as blow-up.
inline constexpr double kBlowUpGrowth = 1e6;

/// Startup followed by cfg.scheme steps up to cfg.t_final. Series rows are
/// emitted at n = 0 and every cfg.series_every steps (and at the last step);
/// snapshots every cfg.snapshot_every steps (and at the last step). Levels
/// missing before n = 2 are replaced by w^0 in the stability functionals.
RunSummary run(const ScalarField& omega0, const RunConfig& cfg, std::span<RunObserver* const> observers = {},
               Forcing forcing = {});

}  // namespace bdf3ns
