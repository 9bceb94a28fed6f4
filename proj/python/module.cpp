#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bdf3ns/benchmarks.hpp"
#include "bdf3ns/checks.hpp"
#include "bdf3ns/convection.hpp"
#include "bdf3ns/diagnostics.hpp"
#include "bdf3ns/errors.hpp"
#include "bdf3ns/integrators.hpp"
#include "bdf3ns/kinematics.hpp"
#include "bdf3ns/spectral.hpp"

namespace py = pybind11;
using namespace bdf3ns;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// (N, N) array indexed [j, i] (y row, x column), matching the storage order.
Array to_numpy(const ScalarField& f) {
  const ScalarField p = to_physical(f);
  const auto n = static_cast<py::ssize_t>(f.grid().n());
  Array out({n, n});
  std::copy(p.physical().begin(), p.physical().end(), out.mutable_data());
  return out;
}

ScalarField from_numpy(const Array& a, double length) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square 2-D array");
  const Grid g(static_cast<int>(a.shape(0)), length);
  return ScalarField::from_physical(g, std::vector<double>(a.data(), a.data() + a.size()));
}

py::dict state_dict(const FlowState& s) {
  py::dict d;
  d["omega"] = to_numpy(s.omega);
  d["psi"] = to_numpy(s.psi);
  d["u"] = to_numpy(s.velocity.x_comp);
  d["v"] = to_numpy(s.velocity.y_comp);
  d["t"] = s.time;
  return d;
}

py::dict record_dict(const SeriesRecord& r) {
  py::dict d;
  d["t"] = r.t;
  d["l2_omega"] = r.l2_omega;
  d["h1_omega"] = r.h1_omega;
  d["energy"] = r.energy;
  d["enstrophy"] = r.enstrophy;
  d["div_error"] = r.div_error;
  d["max_omega"] = r.max_omega;
  d["F"] = r.F;
  d["G1"] = r.G1;
  return d;
}

struct Collector : RunObserver {
  py::list rows;
  void on_series(const SeriesRecord& r) override { rows.append(record_dict(r)); }
};

}  // namespace

PYBIND11_MODULE(_bdf3ns, m) {
  m.doc() = "IMEX BDF3 Fourier pseudo-spectral solver for 2-D Navier-Stokes";

  py::register_exception<MeanViolation>(m, "MeanViolation", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<BlowUp>(m, "BlowUp", PyExc_RuntimeError);

  m.def(
      "solve_poisson", [](const Array& omega, double length) { return to_numpy(solve_poisson(from_numpy(omega, length))); },
      py::arg("omega"), py::arg("length") = 1.0, "psi with -Lap psi = omega and zero mean");

  m.def(
      "laplacian", [](const Array& f, double length) { return to_numpy(laplacian(from_numpy(f, length))); },
      py::arg("f"), py::arg("length") = 1.0);

  m.def(
      "flow_state",
      [](const Array& omega, double length) { return state_dict(make_state(from_numpy(omega, length), 0.0)); },
      py::arg("omega"), py::arg("length") = 1.0, "omega, psi, u, v from a mean-free vorticity");

  m.def(
      "skew_convection",
      [](const Array& omega, double length, bool dealias) {
        const FlowState s = make_state(from_numpy(omega, length), 0.0);
        return to_numpy(skew_convection(s.velocity, s.omega, dealias));
      },
      py::arg("omega"), py::arg("length") = 1.0, py::arg("dealias") = false,
      "skew convection term of the velocity induced by omega");

  m.def(
      "taylor_green_exact", [](int n, double nu, double t) { return state_dict(taylor_green_exact(Grid(n), {nu, t})); },
      py::arg("n"), py::arg("nu") = 1e-3, py::arg("t") = 0.0);

  m.def(
      "shear_layer_init",
      [](int n, double rho, double delta) { return to_numpy(shear_layer_init(Grid(n), {rho, delta, 1e-4})); },
      py::arg("n"), py::arg("rho") = 30.0, py::arg("delta") = 0.05);

  m.def(
      "run",
      [](const Array& omega0, double dt, double nu, double t_final, const std::string& scheme, int series_every,
         bool dealias, double noise_floor) {
        RunConfig cfg;
        const ScalarField w0 = from_numpy(omega0, 1.0);
        cfg.n = w0.grid().n();
        cfg.dt = dt;
        cfg.nu = nu;
        cfg.t_final = t_final;
        const auto s = parse_scheme(scheme);
        if (!s) throw ConfigError("unknown scheme " + scheme);
        cfg.scheme = *s;
        cfg.series_every = series_every;
        cfg.dealias = dealias;
        cfg.noise_floor = noise_floor;
        Collector c;
        RunObserver* obs[] = {&c};
        // observers touch Python objects, so the GIL stays held
        const RunSummary summary = run(w0, cfg, obs);
        py::dict out = state_dict(summary.final_state);
        out["series"] = c.rows;
        out["steps"] = summary.steps;
        return out;
      },
      py::arg("omega0"), py::arg("dt"), py::arg("nu"), py::arg("t_final"), py::arg("scheme") = "bdf3",
      py::arg("series_every") = 1, py::arg("dealias") = false, py::arg("noise_floor") = 1e-13,
      "integrate from omega0 on the unit square; returns the final state and the series");

  m.def(
      "convergence_study",
      [](int n, double nu, double t_final, double dt0, int levels) {
        ConvergenceConfig cfg;
        cfg.n = n;
        cfg.nu = nu;
        cfg.t_final = t_final;
        cfg.dt0 = dt0;
        cfg.levels = levels;
        py::list rows;
        for (const auto& r : convergence_study(cfg)) {
          py::dict d;
          d["dt"] = r.dt;
          d["variable"] = r.variable;
          d["err_linf_l2"] = r.err_linf_l2;
          d["order_linf_l2"] = r.order_linf_l2;
          d["err_l2_h1"] = r.err_l2_h1;
          d["order_l2_h1"] = r.order_l2_h1;
          rows.append(d);
        }
        return rows;
      },
      py::arg("n") = 64, py::arg("nu") = 1e-3, py::arg("t_final") = 1.0, py::arg("dt0") = 0.02,
      py::arg("levels") = 5);

  m.def(
      "telescope_coefficients",
      []() {
        const TelescopeCoeffs& c = telescope_coefficients();
        py::dict d;
        d["alpha"] = std::vector<double>(c.alpha.begin(), c.alpha.end());
        d["residual"] = c.residual;
        d["identity_residual"] = verify_telescope(c, 1000);
        d["distinct_solutions"] = c.distinct_solutions;
        return d;
      },
      "alpha_1..alpha_10 of the BDF3 telescope identity");

  m.def(
      "run_invariant_suite",
      []() {
        std::ostringstream out;
        const bool ok = run_invariant_suite(out);
        return py::make_tuple(ok, out.str());
      },
      "(passed, report)");
}
