"""
Coin operators for the two-state walk.

Every constructor returns a 2x2 ``complex128`` unitary.  Angles are radians.
"""

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "pauli_exp",
    "u2_coin",
    "su2_coin",
    "symmetric_coin",
    "hadamard",
    "is_unitary",
    "symmetric_coin_angle",
]

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli_exp(phi: float, sigma: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """``exp(i phi sigma)`` for a Pauli matrix, in closed form."""
    return np.cos(phi) * IDENTITY + 1j * np.sin(phi) * sigma


def u2_coin(zeta: float, alpha: float, beta: float, gamma: float) -> NDArray[np.complex128]:
    """
    General U(2) coin ``e^{i zeta} e^{i alpha sx} e^{i beta sy} e^{i gamma sz}``.

    The factors multiply left to right as written, so the ``sz`` factor acts
    first on a ket.
    """
    return (
        np.exp(1j * zeta)
        * pauli_exp(alpha, SIGMA_X)
        @ pauli_exp(beta, SIGMA_Y)
        @ pauli_exp(gamma, SIGMA_Z)
    )


def su2_coin(xi: float, theta: float, zeta: float) -> NDArray[np.complex128]:
    """
    Three-parameter SU(2) coin.

    Returns
    -------
    NDArray[np.complex128]
        ``[[e^{i xi} cos(theta), e^{i zeta} sin(theta)],
        [-e^{-i zeta} sin(theta), e^{-i xi} cos(theta)]]``
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [
            [np.exp(1j * xi) * c, np.exp(1j * zeta) * s],
            [-np.exp(-1j * zeta) * s, np.exp(-1j * xi) * c],
        ],
        dtype=np.complex128,
    )


def symmetric_coin(theta: float) -> NDArray[np.complex128]:
    """``[[cos, -i sin], [-i sin, cos]]``, the single-parameter symmetric coin."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def hadamard() -> NDArray[np.complex128]:
    return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


def is_unitary(m: NDArray[np.complex128], atol: float = 1e-12) -> bool:
    m = np.asarray(m)
    if m.shape != (2, 2):
        return False
    return bool(np.max(np.abs(m.conj().T @ m - IDENTITY)) <= atol)


def symmetric_coin_angle(m: NDArray[np.complex128], atol: float = 1e-12) -> float:
    """
    Recover ``theta`` from a matrix of the symmetric-coin family.

    Raises
    ------
    ValueError
        If ``m`` is not ``symmetric_coin(theta)`` for any ``theta``.
    """
    m = np.asarray(m, dtype=np.complex128)
    theta = float(np.arctan2(-m[0, 1].imag, m[0, 0].real))
    if m.shape != (2, 2) or np.max(np.abs(m - symmetric_coin(theta))) > atol:
        raise ValueError("coin is not of the symmetric [[cos, -i sin], [-i sin, cos]] family")
    return theta
