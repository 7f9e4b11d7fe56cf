"""Coherence-order decomposition and multiple-quantum intensities."""
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import NumericResidueError
from .spinops import n_spins_of, twice_magnetization

IMAG_TOLERANCE = 1e-10


@dataclass(frozen=True)
class CoherenceComponents:
    """Order-resolved pieces of a matrix; ``by_order[k]`` keeps entries with ``m_p - m_q = k``."""

    by_order: dict

    def reconstruct(self) -> np.ndarray:
        return sum(self.by_order.values())


@dataclass(frozen=True)
class CoherenceProfile:
    intensities: dict
    beta: float = float("nan")
    tau: float = float("nan")
    residues: dict = field(default_factory=dict, compare=False, repr=False)

    def __getitem__(self, order):
        return self.intensities.get(order, 0.0)

    @property
    def g2_plus_gm2(self) -> float:
        """Sum of the +2 and -2 order intensities, the quantity the witness is built on."""
        return self[2] + self[-2]

    @property
    def total(self) -> float:
        return sum(self.intensities.values())

    def normalized(self) -> dict:
        total = self.total
        return {k: v / total for k, v in self.intensities.items()}


def _order_matrix(n):
    m2 = twice_magnetization(n)
    return (m2[:, None] - m2[None, :]) // 2


def decompose_by_order(a, n_spins: int) -> CoherenceComponents:
    a = np.asarray(a)
    if a.shape != (2**n_spins, 2**n_spins):
        raise ValueError(f"matrix shape {a.shape} does not match {n_spins} spins")
    orders = _order_matrix(n_spins)
    return CoherenceComponents(
        {k: np.where(orders == k, a, 0) for k in range(-n_spins, n_spins + 1)}
    )


def intensity(rho_tau, rho_ht_tau, order: int) -> float:
    """Intensity ``Re tr(rho_(k) ref_(-k))`` of coherence order ``k``.

    Raises
    ------
    NumericResidueError
        If the trace has an imaginary part above ``1e-10``, which means the
        two inputs do not come from the same evolution.
    """
    rho_tau = np.asarray(rho_tau)
    rho_ht_tau = np.asarray(rho_ht_tau)
    if rho_tau.shape != rho_ht_tau.shape:
        raise ValueError(f"shape mismatch: {rho_tau.shape} vs {rho_ht_tau.shape}")
    n = n_spins_of(rho_tau)
    parts_rho = decompose_by_order(rho_tau, n).by_order
    parts_ref = decompose_by_order(rho_ht_tau, n).by_order
    if abs(order) > n:
        return 0.0
    value = np.trace(parts_rho[order] @ parts_ref[-order])
    if abs(value.imag) > IMAG_TOLERANCE:
        raise NumericResidueError(f"order {order} intensity has imaginary part {value.imag:.3e}")
    return float(value.real)


def coherence_profile(rho_tau, rho_ht_tau, beta=float("nan"), tau=float("nan")) -> CoherenceProfile:
    """All order intensities in one pass over the matrix entries.

    Orders ``-n..n`` are always present, with explicit zeros.
    """
    rho_tau = np.asarray(rho_tau)
    rho_ht_tau = np.asarray(rho_ht_tau)
    if rho_tau.shape != rho_ht_tau.shape:
        raise ValueError(f"shape mismatch: {rho_tau.shape} vs {rho_ht_tau.shape}")
    n = n_spins_of(rho_tau)
    sums = kernels.order_overlaps(rho_tau, rho_ht_tau, twice_magnetization(n))
    worst = np.max(np.abs(sums.imag))
    if worst > IMAG_TOLERANCE:
        raise NumericResidueError(f"coherence intensities have imaginary part {worst:.3e}")
    orders = range(-n, n + 1)
    return CoherenceProfile(
        {k: float(v) for k, v in zip(orders, sums.real)},
        beta=beta,
        tau=tau,
        residues={k: float(v) for k, v in zip(orders, sums.imag)},
    )


def analytic_intensities(beta: float, b: float, tau: float) -> CoherenceProfile:
    """Closed-form two-spin intensities; odd orders vanish."""
    t = np.tanh(beta / 2)
    c = np.cos(2 * b * tau)
    s = np.sin(2 * b * tau)
    g2 = 0.5 * t * s * s
    return CoherenceProfile(
        {-2: g2, -1: 0.0, 0: t * c * c, 1: 0.0, 2: g2},
        beta=beta,
        tau=tau,
    )
