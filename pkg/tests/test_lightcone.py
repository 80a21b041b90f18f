import json

import numpy as np
import pytest

from oracles import dense_distribution
from qwrel.coins import hadamard, su2_coin
from qwrel.dtqw import evolve
from qwrel.lightcone import (
    commutator_scan,
    cone_leakage,
    fit_exponential_tail,
    position_squared_commutator,
    spectral_norm,
    trace_norm,
    variance_loglog_slope,
    variance_scaling,
    walk_unitary,
)
from qwrel.state import CapacityError, new_localized

r = np.sqrt(0.5)
DEG = np.deg2rad


@pytest.mark.parametrize("deg", [30, 45, 60])
def test_variance_law(deg):
    rep = variance_scaling(DEG(deg), 200)
    assert rep.variance_ratio == pytest.approx(1 - np.sin(DEG(deg)), rel=0.05)
    assert rep.predicted_ratio == pytest.approx(1 - np.sin(DEG(deg)))


def test_variance_matches_dense_oracle():
    theta, t = DEG(40), 60
    p = dense_distribution(su2_coin(0, theta, 0), r, 1j * r, t)
    j = np.arange(-t, t + 1)
    var = np.sum(p * j**2) - np.sum(p * j) ** 2
    assert variance_scaling(theta, t).variance == pytest.approx(var, abs=1e-9)


def test_shift_only_variance_is_t_squared():
    assert variance_scaling(0.0, 37).variance == pytest.approx(37**2, abs=1e-9)


def test_ratio_converges_with_t():
    theta = DEG(45)
    errs = [abs(variance_scaling(theta, t).variance_ratio - (1 - np.sin(theta))) for t in (50, 400)]
    assert errs[1] < errs[0]


@pytest.mark.parametrize("deg", [30, 45, 60])
def test_loglog_slope_is_two(deg):
    assert variance_loglog_slope(DEG(deg), range(50, 401, 10)) == pytest.approx(2.0, abs=0.02)


def test_near_right_angle_walk_barely_spreads():
    rep = variance_scaling(np.pi / 2 - 1e-3, 100)
    assert rep.variance_ratio < 0.01


def test_leakage_frozen_values():
    # exact dyadic value at t=20: 30002 / 2^20
    assert cone_leakage(DEG(45), 20).mass_outside_cone == pytest.approx(30002 / 2**20, abs=1e-15)
    assert cone_leakage(DEG(45), 100).mass_outside_cone == pytest.approx(0.04199390717253407, abs=1e-12)


def test_leakage_is_small_and_lattice_cone_is_sharp():
    rep = cone_leakage(DEG(45), 100)
    assert rep.mass_outside_cone < 0.05
    assert rep.mass_outside_lattice_cone == 0.0
    assert rep.cone_radius == pytest.approx(100 * np.cos(DEG(45)))
    assert rep.kg_radius > rep.cone_radius


def test_leakage_is_not_monotone_in_t():
    # the discrete cone edge makes the leakage a sawtooth in t
    vals = [cone_leakage(DEG(45), t).mass_outside_cone for t in range(20, 101, 10)]
    assert any(b > a for a, b in zip(vals, vals[1:]))


def test_walk_unitary_matches_engine():
    coin, T, t = su2_coin(0.2, 0.9, 0.4), 10, 8
    U = walk_unitary(coin, T)
    np.testing.assert_allclose(U.conj().T @ U, np.eye(U.shape[0]), atol=1e-14)
    s = new_localized(np.pi / 4, np.pi / 2, T)
    v = s.amps.reshape(-1)
    final = evolve(s, coin, t).final.amps.reshape(-1)
    np.testing.assert_allclose(np.linalg.matrix_power(U, t) @ v, final, atol=1e-14)


def test_norms_against_numpy():
    rng = np.random.default_rng(0)
    A = rng.normal(size=(30, 30)) + 1j * rng.normal(size=(30, 30))
    assert spectral_norm(A) == pytest.approx(np.linalg.norm(A, 2), rel=1e-6)
    assert spectral_norm(A, tol=1e-14) == pytest.approx(np.linalg.norm(A, 2), rel=1e-12)
    assert trace_norm(A) == pytest.approx(np.linalg.norm(A, "nuc"), rel=1e-12)
    assert spectral_norm(np.zeros((4, 4))) == 0.0


@pytest.fixture(scope="module")
def scan45():
    return commutator_scan(DEG(45), 20)


def test_scan_vanishes_outside_lattice_cone(scan45):
    d, x = scan45.distances, scan45.norms
    assert np.all(x[d > 20] <= 1e-10)


def test_scan_parity_zeros(scan45):
    d, x = scan45.distances, scan45.norms
    assert np.all(x[d % 2 == 1] <= 1e-12)


def test_scan_decays_across_the_tail(scan45):
    d, x = scan45.distances, scan45.norms
    tail = x[(d >= 16) & (d <= 20) & (d % 2 == 0)]
    assert np.all(np.diff(tail) < 0)
    assert x[d == 4][0] > 100 * x[d == 20][0]


def test_scan_frozen_values(scan45):
    got = dict(zip(scan45.distances.tolist(), scan45.norms))
    for d, v in {2: 0.1907, 4: 0.2238, 12: 0.4607, 16: 0.1649, 18: 0.0249, 20: 0.00138}.items():
        assert got[d] == pytest.approx(v, rel=5e-3)


def test_tail_fit(scan45):
    fit = fit_exponential_tail(scan45)
    assert fit.slope < 0
    assert fit.kappa > 0
    v = fit.velocity(20)
    assert np.cos(DEG(45)) - 0.1 <= v <= 1.0
    assert json.loads(fit.to_json(20))["v"] == pytest.approx(v)


def test_scan_at_t0_is_zero():
    scan = commutator_scan(DEG(45), 0, distances=range(1, 6))
    assert np.all(scan.norms == 0.0)


def test_scan_trace_norm_and_custom_coin():
    a = commutator_scan(DEG(45), 6, distances=[2, 4, 8], norm="trace")
    assert a.norm_kind == "trace"
    assert a.norms[2] == 0.0 and a.norms[0] > 0
    h = commutator_scan(0.0, 6, distances=[2, 4], coin=hadamard())
    assert h.norms[0] > 0
    with pytest.raises(ValueError):
        commutator_scan(DEG(45), 4, distances=[2], norm="frobenius")


def test_scan_capacity_guards():
    with pytest.raises(CapacityError):
        commutator_scan(DEG(45), 20, half_width=30)
    with pytest.raises(CapacityError):
        commutator_scan(DEG(45), 1500, distances=[1])


def test_scan_csv(scan45):
    lines = scan45.to_csv().splitlines()
    assert lines[0] == "d,norm"
    assert len(lines) == 31


def test_position_squared_commutator():
    assert position_squared_commutator(DEG(45), 0) == 0.0
    assert position_squared_commutator(DEG(45), 3) > 0
