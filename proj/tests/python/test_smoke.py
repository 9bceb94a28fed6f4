import math

import numpy as np
import pytest

import bdf3ns


def test_taylor_green_state():
    s = bdf3ns.taylor_green_exact(32, nu=1e-3, t=0.0)
    assert s["omega"].shape == (32, 32)
    h = 1.0 / 32
    assert math.isclose(math.sqrt((s["omega"] ** 2).sum() * h * h), 2 * math.pi, rel_tol=1e-12)


def test_poisson_round_trip():
    rng = np.random.default_rng(0)
    w = rng.standard_normal((17, 17))
    w -= w.mean()
    psi = bdf3ns.solve_poisson(w)
    assert np.allclose(-bdf3ns.laplacian(psi), w, atol=1e-11)
    with pytest.raises(bdf3ns.MeanViolation):
        bdf3ns.solve_poisson(w + 1.0)


def test_skew_convection_orthogonal():
    rng = np.random.default_rng(1)
    w = rng.standard_normal((16, 16))
    w -= w.mean()
    c = bdf3ns.skew_convection(w)
    assert abs((w * c).sum()) <= 1e-10 * np.linalg.norm(w) * np.linalg.norm(c)


def test_run_matches_decay():
    nu = 1e-3
    s0 = bdf3ns.taylor_green_exact(16, nu=nu)
    out = bdf3ns.run(s0["omega"], dt=0.01, nu=nu, t_final=0.5, scheme="bdf3", series_every=10)
    exact = bdf3ns.taylor_green_exact(16, nu=nu, t=0.5)["omega"]
    assert np.abs(out["omega"] - exact).max() < 1e-6
    assert len(out["series"]) == 6
    assert out["series"][0]["t"] == 0.0
    with pytest.raises(bdf3ns.ConfigError):
        bdf3ns.run(s0["omega"], dt=0.01, nu=nu, t_final=0.1, scheme="rk4")


def test_telescope():
    t = bdf3ns.telescope_coefficients()
    a = t["alpha"]
    assert len(a) == 10
    assert a[0] > 0
    assert abs(sum(a[6:])) <= 1e-12
    assert t["identity_residual"] <= 1e-10


def test_invariant_suite():
    ok, report = bdf3ns.run_invariant_suite()
    assert ok, report


def test_convergence_rows():
    rows = bdf3ns.convergence_study(n=16, nu=1e-2, t_final=0.5, dt0=0.02, levels=3)
    assert [r["variable"] for r in rows[:3]] == ["omega", "psi", "u"]
    assert 2.5 < rows[-1]["order_linf_l2"] < 3.5
