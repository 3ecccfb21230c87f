import math

import numpy as np
import pytest
from fixtures import E_STAR
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import fd_ground_state, osc_barrier
from scipy.special import erfc

from specinv import NumericalError, OscBarrier, PotentialShape, Power, SolverConfig, Tabulated
from specinv import concentration_curve, expectation_profile, ground_state
from specinv._sturm import bisect_kth, sturm_count
from specinv.eigensolver import choose_half_width


@settings(max_examples=60, deadline=None)
@given(
    d=st.lists(st.floats(-10, 10), min_size=2, max_size=30),
    seed=st.integers(0, 2**32 - 1),
    lam=st.floats(-30, 30),
)
def test_sturm_count_matches_dense_eigenvalues(d, seed, lam):
    d = np.array(d)
    e = np.random.default_rng(seed).uniform(-3, 3, d.size - 1)
    w = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
    if np.min(np.abs(w - lam)) < 1e-9:
        return
    assert sturm_count(d, e * e, lam) == int(np.sum(w < lam))


def test_bisection_finds_each_eigenvalue():
    rng = np.random.default_rng(3)
    d = rng.uniform(-2, 2, 40)
    e = rng.uniform(0.1, 1, 39)
    w = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
    for k in (0, 7, 39):
        lo, hi, _ = bisect_kth(d, e * e, k, -10.0, 10.0, 1e-13)
        assert lo <= w[k] <= hi or abs(0.5 * (lo + hi) - w[k]) < 1e-12


def test_oscillator_energies(osc):
    assert ground_state(osc, 1.0).energy == pytest.approx(1.0, abs=1e-6)
    assert ground_state(osc, 4.0).energy == pytest.approx(2.0, abs=1e-6)


def test_barrier_against_oracle(barrier):
    e = ground_state(barrier, 1.0).energy
    assert abs(e - E_STAR) / E_STAR <= 1e-6
    # first-order perturbation around the oscillator: a sanity window only
    first_order = 1 + math.sqrt(math.pi) * math.e * erfc(1.0)
    assert abs(e - first_order) < 0.05


def test_frozen_oracle_reproduces():
    assert fd_ground_state(osc_barrier(), 1.0, 12.0, 20001)["E"] == pytest.approx(E_STAR, rel=1e-12)


def test_matches_lapack_on_same_grid(barrier):
    cfg = SolverConfig(half_width=9.0, n_points=1201, extrapolate=False)
    gs = ground_state(barrier, 2.0, cfg)
    ref = fd_ground_state(osc_barrier(), 2.0, 9.0, 1201)
    assert gs.energy == pytest.approx(ref["E"], rel=1e-12)
    assert gs.s_kinetic == pytest.approx(ref["s"], rel=1e-9)
    assert gs.f_mean == pytest.approx(ref["f"], rel=1e-9)
    assert gs.x2_mean == pytest.approx(ref["x2"], rel=1e-9)


def test_oscillator_profile(osc):
    p = expectation_profile(ground_state(osc, 1.0), osc)
    assert p.s == pytest.approx(0.5, abs=1e-6)
    assert p.f_mean == pytest.approx(0.5, abs=1e-6)
    assert p.x2_mean == pytest.approx(0.5, abs=1e-6)
    assert p.s * p.x2_mean == pytest.approx(0.25, abs=1e-9)
    assert p.g_of_x2mean == p.x2_mean


def test_barrier_jensen_step(barrier):
    p = expectation_profile(ground_state(barrier, 1.0), barrier)
    assert p.f_mean > p.g_of_x2mean
    assert p.s * p.x2_mean > 0.25


def test_profile_rejects_other_shape(barrier, osc):
    with pytest.raises(ValueError, match="different shape"):
        expectation_profile(ground_state(barrier, 1.0), osc)


@pytest.mark.parametrize("v", [3e-4, 0.05, 1.0, 30.0])
@pytest.mark.parametrize("transform", [Power(1), Power(2), OscBarrier(1, 1, 1), OscBarrier(2, 0.5, 1)])
def test_state_invariants(transform, v):
    shape = PotentialShape(transform)
    gs = ground_state(shape, v)
    assert gs.norm_error <= 1e-12
    assert gs.nodes == 0
    assert gs.sturm_index == 1
    assert gs.partition_error <= 1e-9
    assert gs.s_kinetic > 0 and gs.x2_mean > 0
    assert gs.s_kinetic * gs.x2_mean >= 0.25 - 1e-9
    assert gs.f_mean >= float(transform(gs.x2_mean)) - 1e-9
    assert gs.boundary_ratio <= 1e-12
    assert gs.psi[gs.x.size // 2] > 0
    assert np.array_equal(gs.psi, gs.psi[::-1]) or np.max(np.abs(gs.psi - gs.psi[::-1])) < 1e-10


def test_richardson_ratio_of_raw_scheme(osc):
    errors = []
    for n in (201, 401, 801, 1601):
        gs = ground_state(osc, 1.0, SolverConfig(half_width=8.0, n_points=n, extrapolate=False))
        errors.append(gs.energy - 1.0)
    ratios = [errors[i] / errors[i + 1] for i in range(len(errors) - 1)]
    assert all(3.5 <= r <= 4.5 for r in ratios), ratios


@pytest.mark.parametrize("v", [0.01, 0.5, 3.0])
def test_hellmann_feynman(barrier, v):
    delta = 1e-4 * v
    fd = (ground_state(barrier, v + delta).energy - ground_state(barrier, v - delta).energy) / (2 * delta)
    assert ground_state(barrier, v).f_mean == pytest.approx(fd, rel=1e-5)


def test_concentration_examples(osc, barrier):
    curve = concentration_curve(osc, [1, 4, 16])
    np.testing.assert_allclose([x2 for _, x2 in curve], [0.5, 0.25, 0.125], atol=1e-6)
    curve = concentration_curve(barrier, np.geomspace(3e-4, 10, 24))
    x2 = np.array([p[1] for p in curve])
    assert np.all(np.diff(x2) < 0)
    assert concentration_curve(barrier, [0.7]) == [(0.7, pytest.approx(ground_state(barrier, 0.7).x2_mean))]


@pytest.mark.parametrize("v", [0.0, -1.0, float("nan"), float("inf")])
def test_rejects_bad_coupling(osc, v):
    with pytest.raises(ValueError, match="v must be"):
        ground_state(osc, v)


def test_grid_checks(osc):
    with pytest.raises(ValueError, match="strictly increasing"):
        concentration_curve(osc, [1.0, 1.0])
    with pytest.raises(ValueError):
        concentration_curve(osc, [-1.0, 1.0])


@pytest.mark.parametrize("kw", [{"n_points": 4000}, {"n_points": 1}, {"half_width": -1.0}, {"tol": 0}])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SolverConfig(**kw)


def test_non_convergence_carries_diagnostics(osc):
    with pytest.raises(NumericalError) as info:
        ground_state(osc, 1.0, SolverConfig(max_sweeps=0))
    assert info.value.diagnostics["v"] == 1.0
    assert "residuals" in info.value.diagnostics


def test_auto_domain_grows_small_box(osc):
    gs = ground_state(osc, 1.0, SolverConfig(half_width=2.0))
    assert gs.half_width > 2.0
    assert gs.boundary_ratio <= 1e-12
    assert gs.energy == pytest.approx(1.0, abs=1e-6)
    fixed = ground_state(osc, 1.0, SolverConfig(half_width=2.0, auto_domain=False))
    assert fixed.half_width == 2.0
    assert fixed.energy > 1.0 + 1e-3


def test_half_width_scales_like_oscillator_width(osc):
    l1 = choose_half_width(osc, 1.0)
    l16 = choose_half_width(osc, 16.0)
    assert l1 / l16 == pytest.approx(2.0, rel=1e-3)


def test_tabulated_shape_solves():
    y = np.linspace(0, 100, 41)
    shape = PotentialShape(Tabulated(y, y))
    gs = ground_state(shape, 1.0)
    assert gs.energy == pytest.approx(1.0, abs=1e-5)


def test_tabulated_too_narrow_fails():
    y = np.linspace(0, 1, 11)
    shape = PotentialShape(Tabulated(y, y))
    with pytest.raises(NumericalError, match="does not decay"):
        ground_state(shape, 1.0)
