#include "bdf3ns/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bdf3ns/benchmarks.hpp"
#include "bdf3ns/checks.hpp"
#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/integrators.hpp"
#include "bdf3ns/io.hpp"

namespace bdf3ns {
namespace {

// Parameters shared by the run subcommands. Zero / empty means "not set yet"
// where a later default (config file, shear-layer case) may still apply.
struct Params {
  int n = 0;
  double nu = 0.0;
  double dt = 0.0;
  double t_final = 0.0;
  std::string scheme = "bdf3";
  int series_every = -1;
  int snapshot_every = -1;
  std::string out_dir;
  std::string csv;
  bool dealias = false;
  double noise_floor = 1e-13;
  std::string config;
  // tg-convergence
  double dt0 = 0.02;
  int levels = 5;
  // shear-layer
  std::string layer_case = "thick";
  double delta = 0.05;
  double rho = 0.0;
};

// Option handle plus the setter used when the value comes from a config file.
struct Binding {
  CLI::Option* option;
  std::function<void(const std::string&)> set;
};

class Subcommand {
 public:
  Subcommand(CLI::App& parent, const std::string& name, const std::string& help)
      : app_(parent.add_subcommand(name, help)) {}

  CLI::App* app() const { return app_; }
  Params& params() { return p_; }

  template <class T>
  void bind(const std::string& key, T& target, const std::string& help) {
    CLI::Option* opt = app_->add_option("--" + key, target, help);
    bindings_[key] = {opt, [&target, key](const std::string& v) { target = convert<T>(key, v); }};
  }

  void flag(const std::string& key, bool& target, const std::string& help) {
    CLI::Option* opt = app_->add_flag("--" + key, target, help);
    bindings_[key] = {opt, [&target, key](const std::string& v) { target = convert<bool>(key, v); }};
  }

  // Applies config-file values for options that were not given on the command line.
  void apply_config() {
    if (p_.config.empty()) return;
    for (const auto& [raw_key, value] : io::read_config_file(p_.config)) {
      std::string key = raw_key;
      for (auto& ch : key)
        if (ch == '_') ch = '-';
      auto it = bindings_.find(key);
      if (it == bindings_.end() || key == "config") {
        throw ConfigError("unknown config key '" + raw_key + "' for " + app_->get_name());
      }
      if (it->second.option->count() == 0) it->second.set(value);
    }
  }

 private:
  template <class T>
  static T convert(const std::string& key, const std::string& v) {
    T out{};
    if constexpr (std::is_same_v<T, bool>) {
      if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
      if (v == "0" || v == "false" || v == "no" || v == "off") return false;
      throw ConfigError("config key '" + key + "': expected a boolean, got '" + v + "'");
    } else {
      if (!CLI::detail::lexical_cast(v, out)) {
        throw ConfigError("config key '" + key + "': cannot parse '" + v + "'");
      }
      return out;
    }
  }

  CLI::App* app_;
  Params p_;
  std::map<std::string, Binding> bindings_;
};

void add_run_options(Subcommand& s) {
  Params& p = s.params();
  s.bind("n", p.n, "grid points per direction");
  s.bind("nu", p.nu, "viscosity");
  s.bind("dt", p.dt, "time step");
  s.bind("t-final", p.t_final, "final time");
  s.bind("scheme", p.scheme, "euler | bdf2 | bdf3");
  s.bind("series-every", p.series_every, "series cadence in steps (0 disables)");
  s.bind("snapshot-every", p.snapshot_every, "snapshot cadence in steps (0: final step only when --out is set)");
  s.bind("out", p.out_dir, "directory for PGM/raw snapshots");
  s.bind("csv", p.csv, "CSV output path (default stdout)");
  s.flag("dealias", p.dealias, "apply 2/3-rule truncation in the convection term");
  s.bind("noise-floor", p.noise_floor, "relative spectral noise floor per step (0 disables)");
  s.app()->add_option("--config", p.config, "key=value configuration file");
}

Scheme scheme_from(const std::string& name) {
  const auto s = parse_scheme(name);
  if (!s) throw ConfigError("unknown scheme '" + name + "' (expected euler, bdf2 or bdf3)");
  return *s;
}

// Opens --csv, or falls back to `fallback`.
struct CsvTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  CsvTarget(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty() || path == "-") return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw ConfigError("cannot write " + path);
    stream = file.get();
  }
};

RunConfig run_config_from(const Params& p) {
  RunConfig cfg;
  cfg.n = p.n;
  cfg.nu = p.nu;
  cfg.dt = p.dt;
  cfg.t_final = p.t_final;
  cfg.scheme = scheme_from(p.scheme);
  cfg.series_every = std::max(p.series_every, 0);
  cfg.dealias = p.dealias;
  cfg.noise_floor = p.noise_floor;
  if (p.snapshot_every > 0) {
    cfg.snapshot_every = p.snapshot_every;
  } else if (!p.out_dir.empty()) {
    cfg.validate();
    cfg.snapshot_every = static_cast<int>(cfg.step_count());
  }
  cfg.validate();
  return cfg;
}

void print_summary(std::ostream& err, const std::string& what, const RunSummary& s) {
  err << what << ": " << s.steps << " steps, " << io::format_double(s.seconds_per_step * 1e3) << " ms/step"
      << ", final l2_omega=" << io::format_double(s.last.l2_omega)
      << ", max div_error=" << io::format_double(s.range.max.div_error)
      << ", max |omega|=" << io::format_double(s.range.max.max_omega) << '\n';
}

RunSummary run_with_outputs(const ScalarField& omega0, const RunConfig& cfg, const Params& p, std::ostream& out) {
  CsvTarget target(p.csv, out);
  std::vector<RunObserver*> observers;
  std::optional<io::CsvSeriesWriter> series;
  std::optional<io::SnapshotWriter> snaps;
  if (cfg.series_every > 0) {
    series.emplace(*target.stream);
    observers.push_back(&*series);
  }
  if (cfg.snapshot_every > 0) {
    snaps.emplace(p.out_dir.empty() ? std::string(".") : p.out_dir);
    observers.push_back(&*snaps);
  }
  return run(omega0, cfg, observers);
}

int cmd_tg_convergence(Params& p, std::ostream& out, std::ostream& err) {
  ConvergenceConfig cfg;
  cfg.n = p.n > 0 ? p.n : 64;
  cfg.nu = p.nu > 0 ? p.nu : 1e-3;
  cfg.t_final = p.t_final > 0 ? p.t_final : 1.0;
  cfg.dt0 = p.dt0;
  cfg.levels = p.levels;
  cfg.scheme = scheme_from(p.scheme);
  cfg.noise_floor = p.noise_floor;
  if (!(cfg.noise_floor >= 0.0) || cfg.noise_floor >= 1.0) throw ConfigError("--noise-floor must lie in [0, 1)");
  if (!(cfg.dt0 > 0.0)) throw ConfigError("--dt0 must be positive");
  const auto rows = convergence_study(cfg);
  CsvTarget target(p.csv, out);
  io::write_convergence_csv(*target.stream, rows);
  err << "tg-convergence: " << cfg.levels << " levels, N=" << cfg.n << ", scheme " << to_string(cfg.scheme) << '\n';
  return kExitOk;
}

int cmd_tg_longrun(Params& p, std::ostream& out, std::ostream& err) {
  if (p.n == 0) p.n = 64;
  if (p.nu == 0.0) p.nu = 1e-3;
  if (p.dt == 0.0) p.dt = 0.01;
  if (p.t_final == 0.0) p.t_final = 10.0;
  if (p.series_every < 0) p.series_every = 1;
  const RunConfig cfg = run_config_from(p);
  const ScalarField omega0 = taylor_green_exact(Grid(cfg.n), {cfg.nu, 0.0}).omega;
  print_summary(err, "tg-longrun", run_with_outputs(omega0, cfg, p, out));
  return kExitOk;
}

int cmd_shear_layer(Params& p, std::ostream& out, std::ostream& err) {
  const bool thin = p.layer_case == "thin";
  if (!thin && p.layer_case != "thick") throw ConfigError("--case must be thick or thin");
  if (p.rho == 0.0) p.rho = thin ? 100.0 : 30.0;
  if (p.nu == 0.0) p.nu = thin ? 5e-5 : 1e-4;
  if (p.n == 0) p.n = thin ? 256 : 128;
  if (p.dt == 0.0) p.dt = thin ? 4e-4 : 8e-4;
  if (p.t_final == 0.0) p.t_final = 1.2;
  if (p.series_every < 0) p.series_every = 10;
  const RunConfig cfg = run_config_from(p);
  const ScalarField omega0 = shear_layer_init(Grid(cfg.n), {p.rho, p.delta, cfg.nu});
  print_summary(err, "shear-layer " + p.layer_case + " (" + std::string(to_string(cfg.scheme)) + ")",
                run_with_outputs(omega0, cfg, p, out));
  return kExitOk;
}

int cmd_telescope(std::ostream& out) {
  const TelescopeCoeffs& c = telescope_coefficients();
  const TelescopeVerification v = verify_telescope_report(c, 1000);
  for (int i = 1; i <= 10; ++i) out << "alpha" << i << " = " << io::format_double(c.a(i)) << '\n';
  out << "solve_residual = " << io::format_double(c.residual) << '\n';
  out << "identity_residual = " << io::format_double(v.max_residual()) << '\n';
  out << "sum_alpha7_10 = " << io::format_double(c.a(7) + c.a(8) + c.a(9) + c.a(10)) << '\n';
  out << "distinct_solutions = " << c.distinct_solutions << '\n';
  return v.max_residual() <= 1e-10 ? kExitOk : kExitFailure;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"IMEX BDF3 pseudo-spectral Navier-Stokes solver", "bdf3ns"};
  app.require_subcommand(1);

  Subcommand conv(app, "tg-convergence", "Taylor-Green temporal convergence table (CSV)");
  add_run_options(conv);
  conv.bind("dt0", conv.params().dt0, "largest time step");
  conv.bind("levels", conv.params().levels, "number of halvings of dt0");

  Subcommand longrun(app, "tg-longrun", "Taylor-Green long-time diagnostics series (CSV)");
  add_run_options(longrun);

  Subcommand shear(app, "shear-layer", "double shear layer (thick or thin)");
  add_run_options(shear);
  shear.bind("case", shear.params().layer_case, "thick | thin");
  shear.bind("delta", shear.params().delta, "perturbation amplitude");
  shear.bind("rho", shear.params().rho, "layer steepness (default by case)");

  CLI::App* tele = app.add_subcommand("telescope", "solve and verify the BDF3 telescope coefficients");
  CLI::App* check = app.add_subcommand("check", "run the built-in invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (conv.app()->parsed()) {
      conv.apply_config();
      return cmd_tg_convergence(conv.params(), out, err);
    }
    if (longrun.app()->parsed()) {
      longrun.apply_config();
      return cmd_tg_longrun(longrun.params(), out, err);
    }
    if (shear.app()->parsed()) {
      shear.apply_config();
      return cmd_shear_layer(shear.params(), out, err);
    }
    if (tele->parsed()) return cmd_telescope(out);
    if (check->parsed()) return run_invariant_suite(out) ? kExitOk : kExitFailure;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BlowUp& e) {
    err << "blow-up: " << e.what() << " (last good t=" << io::format_double(e.last_good().t) << ")\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace bdf3ns
