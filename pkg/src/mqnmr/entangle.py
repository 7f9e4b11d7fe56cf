"""Two-spin concurrence and the coherence-based entanglement witness."""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import NumericResidueError
from .evolve import PSD_FLOOR, check_density_matrix
from .spinops import pauli

SIGMA_YY = np.kron(pauli("y"), pauli("y"))

# Eigenvalues of rho below this (relative to the largest) are rounding noise.
_RANK_CUTOFF = 64 * np.finfo(float).eps
RESIDUE_TOLERANCE = 1e-10


@dataclass(frozen=True)
class EntanglementReport:
    lambdas: tuple
    concurrence: float
    witness: Optional[float] = None

    @property
    def entangled(self) -> bool:
        return self.concurrence > 0


def _check_two_spin(rho):
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-spin density matrix, got shape {rho.shape}")
    return rho


def spin_flip(rho) -> np.ndarray:
    """``(sigma_y x sigma_y) rho* (sigma_y x sigma_y)`` in the standard basis."""
    rho = _check_two_spin(rho)
    return SIGMA_YY @ rho.conj() @ SIGMA_YY


def _half_factor(rho):
    w, v = np.linalg.eigh(rho)
    if w[0] < PSD_FLOOR:
        raise NumericResidueError(f"state has negative eigenvalue {w[0]:.3e}")
    keep = w > _RANK_CUTOFF * max(w[-1], 0.0)
    return v[:, keep] * np.sqrt(w[keep])


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of ``rho @ spin_flip(rho)``, descending.

    With ``rho = A A^dagger`` the flipped state factors as ``B B^dagger``
    where ``B = sigma_yy A*``; the nonzero eigenvalues of ``rho rho~`` are
    the squared singular values of ``A^dagger B``. Working with singular
    values keeps exact zeros at the 1e-16 level instead of the 1e-8 that a
    square root of a noisy eigenvalue would give.
    """
    rho = _check_two_spin(rho)
    a = _half_factor(rho)
    b = SIGMA_YY @ a.conj()
    sv = np.linalg.svd(a.conj().T @ b, compute_uv=False)
    lam = np.zeros(4)
    lam[: sv.size] = sv
    lam = np.sort(lam)[::-1]

    trace = np.trace(rho @ spin_flip(rho))
    if abs(trace.imag) > RESIDUE_TOLERANCE or abs(trace.real - np.sum(lam**2)) > RESIDUE_TOLERANCE:
        raise NumericResidueError(
            f"tr(rho rho~) = {trace:.6g} inconsistent with spectrum sum {np.sum(lam**2):.6g}"
        )
    return lam


def concurrence(rho, beta=None, g2_plus_gm2=None, validate=True) -> EntanglementReport:
    """Wootters concurrence of a two-spin density matrix.

    If both ``beta`` and ``g2_plus_gm2`` are given the report also carries
    the entanglement witness value.
    """
    rho = _check_two_spin(rho)
    if validate:
        check_density_matrix(rho, check_psd=False)
    lam = wootters_lambdas(rho)
    c = max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))
    witness = None
    if beta is not None and g2_plus_gm2 is not None:
        witness = entanglement_witness(beta, g2_plus_gm2)
    return EntanglementReport(tuple(float(x) for x in lam), min(c, 1.0), witness)


def analytic_lambdas(beta: float, b: float, tau: float) -> tuple:
    x = abs(np.sin(2 * b * tau)) * np.sinh(beta)
    denom = 4 * np.cosh(beta / 2) ** 2
    root = np.sqrt(1 + x * x)
    lam = [(root + x) / denom, (root - x) / denom, 1 / denom, 1 / denom]
    return tuple(sorted((float(v) for v in lam), reverse=True))


def analytic_concurrence(beta: float, b: float, tau: float, clamp: bool = True) -> float:
    """Closed-form concurrence; ``clamp=False`` returns the raw, possibly negative value."""
    raw = (abs(np.sin(2 * b * tau)) * np.sinh(beta) - 1) / (2 * np.cosh(beta / 2) ** 2)
    return max(0.0, float(raw)) if clamp else float(raw)


def concurrence_from_coherences(beta: float, g2_plus_gm2: float) -> float:
    """Concurrence recovered from the measured double-quantum intensity sum.

    Parameters
    ----------
    beta : float
        Dimensionless inverse temperature.
    g2_plus_gm2 : float
        ``G_2 + G_-2``; must lie in ``[0, tanh(beta/2)]`` up to 1e-10.

    Returns
    -------
    float
        ``max(0, sqrt(tanh(beta/2) * g) - 1 / (2 cosh(beta/2)**2))``.
    """
    t = np.tanh(beta / 2)
    if not -RESIDUE_TOLERANCE <= g2_plus_gm2 <= t + RESIDUE_TOLERANCE:
        raise ValueError(f"intensity sum {g2_plus_gm2} outside feasible range [0, {t}]")
    g = min(max(g2_plus_gm2, 0.0), t)
    return max(0.0, float(np.sqrt(t * g) - 1 / (2 * np.cosh(beta / 2) ** 2)))


def witness_threshold(beta: float) -> float:
    """Smallest ``G_2 + G_-2`` compatible with entanglement at ``beta``."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return float(1 / (2 * np.sinh(beta) * np.cosh(beta / 2) ** 2))


def entanglement_witness(beta: float, g2_plus_gm2: float) -> float:
    """Witness value; negative means the state is entangled."""
    return witness_threshold(beta) - float(g2_plus_gm2)


def partial_trace(rho, keep, n: int) -> np.ndarray:
    """Reduced state of the two sites in ``keep``, ordered as given."""
    j, k = keep
    if n < 2:
        raise ValueError("need at least two spins")
    if j == k or not (0 <= j < n and 0 <= k < n):
        raise IndexError(f"invalid site pair {keep} for {n} spins")
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (2**n, 2**n):
        raise ValueError(f"state shape {rho.shape} does not match {n} spins")
    return kernels.pair_reduce(rho, n, j, k)
