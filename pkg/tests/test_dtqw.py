import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import localized_vector, walk_matrix
from qwrel.coins import IDENTITY, hadamard, su2_coin, symmetric_coin
from qwrel.dtqw import (
    apply_coin,
    component_recurrence_rhs,
    evolve,
    inverse_shift,
    inverse_step,
    shift,
    step,
)
from qwrel.state import CapacityError, new_localized, norm, probability_distribution

angles = st.floats(-2 * np.pi, 2 * np.pi, allow_nan=False)
r = np.sqrt(0.5)


def test_shift_moves_zero_left_and_one_right():
    s0 = shift(new_localized(0, 0, 2))
    np.testing.assert_array_equal(s0.spinor(-1), [1, 0])
    one = new_localized(0, 0, 2)
    one = one.with_amps(one.amps[:, ::-1].copy())
    s1 = shift(one)
    np.testing.assert_array_equal(s1.spinor(1), [0, 1])
    assert np.count_nonzero(s1.amps) == 1


def test_shift_splits_symmetric_state(sym_init):
    s = shift(new_localized(*sym_init, 1))
    np.testing.assert_allclose(s.spinor(-1), [r, 0], atol=1e-16)
    np.testing.assert_allclose(s.spinor(1), [0, 1j * r], atol=1e-16)
    assert s.spinor(0).tolist() == [0, 0]


def test_shift_refuses_to_leave_lattice():
    with pytest.raises(CapacityError):
        shift(new_localized(0, 0, 0))
    s = shift(new_localized(0, 0, 1))
    with pytest.raises(CapacityError):
        shift(s)
    # |1> at the left edge moves inward and is fine
    s = shift(new_localized(np.pi / 2, 0, 1))
    assert abs(norm(inverse_shift(inverse_shift(s))) - 1.0) < 1e-15


def test_identity_coin_step():
    s = step(new_localized(0, 0, 1), IDENTITY)
    assert s.time == 1
    np.testing.assert_array_equal(s.spinor(-1), [1, 0])


def test_hadamard_step_by_hand():
    s = step(new_localized(0, 0, 1), hadamard())
    np.testing.assert_allclose(s.spinor(-1), [r, 0], atol=1e-16)
    np.testing.assert_allclose(s.spinor(1), [0, r], atol=1e-16)


@pytest.mark.parametrize("order", ["coin-shift", "shift-coin"])
def test_step_matches_dense_operator(order, sym_init):
    T, t = 12, 12
    coin = su2_coin(0.3, 0.8, -0.5)
    traj = evolve(new_localized(*sym_init, T), coin, t, order)
    W = walk_matrix(coin, T, order)
    v = localized_vector(np.cos(sym_init[0]), np.exp(1j * sym_init[1]) * np.sin(sym_init[0]), T)
    n = 2 * T + 1
    for k in range(t + 1):
        np.testing.assert_allclose(traj.amps[k][:, 0], v[:n], atol=1e-13)
        np.testing.assert_allclose(traj.amps[k][:, 1], v[n:], atol=1e-13)
        v = W @ v


def test_evolve_zero_steps(sym_init):
    s = new_localized(*sym_init, 3)
    traj = evolve(s, hadamard(), 0)
    assert len(traj) == 1
    np.testing.assert_array_equal(traj.amps[0], s.amps)


def test_evolve_capacity():
    with pytest.raises(CapacityError):
        evolve(new_localized(0, 0, 5), hadamard(), 6)


def test_hadamard_walk_leans_left():
    traj = evolve(new_localized(0, 0, 100), hadamard(), 100)
    d = probability_distribution(traj.final)
    # frozen from the dense-matrix oracle
    assert d.mean() == pytest.approx(-28.975560156371184, abs=1e-9)
    assert d.p[:100].sum() > d.p[101:].sum()


def test_symmetric_coin_mirror_symmetry():
    # the symmetric coin commutes with the coin swap, so a swap-invariant
    # start (|0> + |1>)/sqrt(2) gives a mirror-symmetric distribution
    traj = evolve(new_localized(np.pi / 4, 0, 100), symmetric_coin(np.pi / 4), 100)
    p = probability_distribution(traj.final).p
    assert np.max(np.abs(p - p[::-1])) <= 1e-12


def test_symmetric_coin_from_i_state_is_not_mirror_symmetric(sym_init):
    traj = evolve(new_localized(*sym_init, 100), symmetric_coin(np.pi / 4), 100)
    p = probability_distribution(traj.final).p
    assert np.max(np.abs(p - p[::-1])) > 0.05


def test_unbiased_su2_coin_from_i_state_is_mirror_symmetric(sym_init):
    traj = evolve(new_localized(*sym_init, 100), su2_coin(0, np.pi / 4, 0), 100)
    p = probability_distribution(traj.final).p
    assert np.max(np.abs(p - p[::-1])) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(delta=angles, eta=angles, z=angles, a=angles, b=angles, g=angles,
       order=st.sampled_from(["coin-shift", "shift-coin"]))
def test_step_is_norm_preserving(delta, eta, z, a, b, g, order):
    from qwrel.coins import u2_coin

    s = new_localized(delta, eta, 8)
    coin = u2_coin(z, a, b, g)
    for _ in range(8):
        before = norm(s)
        s = step(s, coin, order)
        assert abs(norm(s) - before) <= 1e-12


@pytest.mark.parametrize("order", ["coin-shift", "shift-coin"])
@pytest.mark.parametrize("coin", [hadamard(), symmetric_coin(1.1), su2_coin(0.4, 0.9, 2.0)])
def test_reversibility_100_steps(order, coin, sym_init):
    s0 = new_localized(*sym_init, 100)
    s = s0
    for _ in range(100):
        s = step(s, coin, order)
    for _ in range(100):
        s = inverse_step(s, coin, order)
    assert s.time == 0
    assert np.max(np.abs(s.amps - s0.amps)) <= 1e-12


def test_coin_and_shift_do_not_commute(sym_init):
    # S(B x 1) != (B x 1)S, even for the symmetric coin
    B = symmetric_coin(np.pi / 3)
    s = new_localized(*sym_init, 1)
    a = step(s, B, "coin-shift").amps
    b = step(s, B, "shift-coin").amps
    assert np.max(np.abs(a - b)) > 0.1
    W1, W2 = walk_matrix(B, 4, "coin-shift"), walk_matrix(B, 4, "shift-coin")
    assert np.max(np.abs(W1 @ W2 - W2 @ W1)) > 0.1


@pytest.mark.parametrize("theta", [0.3, np.pi / 3])
def test_orders_are_conjugate(theta, sym_init):
    # (B x 1) S = (B x 1) [S (B x 1)] (B x 1)^-1
    B = symmetric_coin(theta)
    s0 = new_localized(*sym_init, 30)
    sc = evolve(s0, B, 30, "shift-coin")
    cs = evolve(apply_coin(s0, B.conj().T), B, 30, "coin-shift")
    for k in range(31):
        np.testing.assert_allclose(sc.amps[k], cs.amps[k] @ B.T, atol=1e-13)


def test_recurrence_matches_printed_form_for_shift_coin(sym_init):
    theta = np.pi / 3
    c, s = np.cos(theta), np.sin(theta)
    traj = evolve(new_localized(*sym_init, 50), symmetric_coin(theta), 50, "shift-coin")
    worst = 0.0
    for t in range(50):
        for j in range(-50, 51):
            rhs = component_recurrence_rhs(traj, j, t)
            L = c * traj.psi(j + 1, t)[0] - 1j * s * traj.psi(j - 1, t)[1]
            R = c * traj.psi(j - 1, t)[1] - 1j * s * traj.psi(j + 1, t)[0]
            np.testing.assert_allclose(rhs, [L, R], atol=1e-15)
            worst = max(worst, np.max(np.abs(rhs - traj.psi(j, t + 1))))
    assert worst <= 1e-13


def test_recurrence_for_coin_shift(sym_init):
    traj = evolve(new_localized(*sym_init, 40), su2_coin(0.2, 0.7, 0.1), 40)
    worst = max(
        np.max(np.abs(component_recurrence_rhs(traj, j, t) - traj.psi(j, t + 1)))
        for t in range(40)
        for j in range(-40, 41)
    )
    assert worst <= 1e-13


def test_recurrence_massless_and_outside_support(sym_init):
    traj = evolve(new_localized(*sym_init, 10), symmetric_coin(0.0), 10, "shift-coin")
    for t in range(10):
        for j in range(-9, 10):
            rhs = component_recurrence_rhs(traj, j, t)
            assert rhs[0] == traj.psi(j + 1, t)[0]
    assert component_recurrence_rhs(traj, 10, 2).tolist() == [0, 0]
    with pytest.raises(IndexError):
        component_recurrence_rhs(traj, 0, 10)


def test_trajectory_reapplication_check(sym_init):
    traj = evolve(new_localized(*sym_init, 20), hadamard(), 20)
    assert traj.verify()
    bad = traj.amps.copy()
    bad[5] *= -1
    from dataclasses import replace

    assert not replace(traj, amps=bad).verify()


def test_trajectory_csv_exports():
    traj = evolve(new_localized(0, 0, 1), hadamard(), 1)
    amp = traj.amplitudes_csv().splitlines()
    assert amp[0] == "t,j,re0,im0,re1,im1"
    assert len(amp) == 1 + 2 * 3
    assert amp[2] == "0,0,1.0,0.0,0.0,0.0"
    prob = traj.probabilities_csv().splitlines()
    assert prob[0] == "t,j,p"
    t, j, p = prob[4].split(",")
    assert (t, j) == ("1", "-1")
    assert float(p) == pytest.approx(0.5, abs=1e-15)
