"""Spin-1/2 operator algebra on the 2**n dimensional product space.

Basis conventions used everywhere in the package:

* site 0 is the most significant bit of a basis index, so for two spins the
  ordering is ``|00>, |01>, |10>, |11>``;
* a 0 bit is spin up (m = +1/2, aligned with the field), a 1 bit spin down.
"""
import os
from typing import NamedTuple

import numpy as np

MAX_SPINS = 12
DEFAULT_TOLERANCE = 1e-12

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
RAISING = np.array([[0, 1], [0, 0]], dtype=np.complex128)
LOWERING = RAISING.T.copy()


def matrix_tolerance() -> float:
    """Absolute matrix tolerance, overridable through ``MQNMR_TOLERANCE``."""
    raw = os.environ.get("MQNMR_TOLERANCE")
    if not raw:
        return DEFAULT_TOLERANCE
    value = float(raw)
    if not value > 0:
        raise ValueError(f"MQNMR_TOLERANCE must be positive, got {raw!r}")
    return value


def matrices_close(a, b, atol=None) -> bool:
    atol = matrix_tolerance() if atol is None else atol
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))


def _check_n(n):
    if not 1 <= n <= MAX_SPINS:
        raise ValueError(f"spin count must be in [1, {MAX_SPINS}], got {n}")


def n_spins_of(matrix) -> int:
    """Spin count of a square matrix of dimension 2**n."""
    dim = np.shape(matrix)[0]
    if np.ndim(matrix) != 2 or np.shape(matrix)[1] != dim:
        raise ValueError(f"expected a square matrix, got shape {np.shape(matrix)}")
    n = dim.bit_length() - 1
    if dim < 2 or 1 << n != dim:
        raise ValueError(f"matrix dimension {dim} is not a power of two >= 2")
    return n


class BasisLabel(NamedTuple):
    bits: str
    magnetization: float


def basis_labels(n: int) -> list[BasisLabel]:
    _check_n(n)
    return [
        BasisLabel(format(p, f"0{n}b"), float(m) / 2)
        for p, m in enumerate(twice_magnetization(n))
    ]


def twice_magnetization(n: int) -> np.ndarray:
    """Integer array of 2*m for each basis index (n minus twice the popcount)."""
    _check_n(n)
    idx = np.arange(2**n)
    popcount = np.zeros_like(idx)
    for s in range(n):
        popcount += (idx >> s) & 1
    return n - 2 * popcount


def pauli(axis: str) -> np.ndarray:
    """Standard 2x2 Pauli matrix for ``axis`` in ``{"x", "y", "z"}``."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"axis must be one of x, y, z; got {axis!r}") from None


def spin_component(axis: str) -> np.ndarray:
    """Single-spin angular momentum ``I_axis = pauli(axis) / 2``."""
    return pauli(axis) / 2


def site_operator(site: int, op, n: int) -> np.ndarray:
    """Lift the 2x2 ``op`` onto ``site`` of an ``n``-spin register.

    Identity acts on every other site; site 0 is the leftmost Kronecker
    factor.
    """
    _check_n(n)
    op = np.asarray(op, dtype=np.complex128)
    if op.shape != (2, 2):
        raise ValueError(f"single-site operator must be 2x2, got {op.shape}")
    if not 0 <= site < n:
        raise IndexError(f"site {site} out of range for {n} spins")
    left = np.eye(2**site, dtype=np.complex128)
    right = np.eye(2 ** (n - site - 1), dtype=np.complex128)
    return np.kron(np.kron(left, op), right)


def total_iz(n: int) -> np.ndarray:
    return np.diag(twice_magnetization(n) / 2).astype(np.complex128)


def raising_lowering(site: int, sign, n: int) -> np.ndarray:
    """``I_site^+`` for ``sign`` in ``("+", +1)``, ``I_site^-`` for ``("-", -1)``."""
    if sign in ("+", 1):
        return site_operator(site, RAISING, n)
    if sign in ("-", -1):
        return site_operator(site, LOWERING, n)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def basis_vector(bits: str) -> np.ndarray:
    """Column vector of the basis state written as a bit string, e.g. ``"01"``."""
    vec = np.zeros(2 ** len(bits), dtype=np.complex128)
    vec[int(bits, 2)] = 1
    return vec
