"""Physical parameters, the double-quantum Hamiltonian and the entanglement threshold."""
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .spinops import MAX_SPINS

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23  # J / K
MU0_OVER_4PI = 1e-7  # T m / A; use 1.0 for Gaussian units

# sinh(beta) = 1
ENTANGLEMENT_BETA = float(np.log1p(np.sqrt(2.0)))

FIG_COUPLING = 2 * np.pi * 1307.0  # rad/s


@dataclass(frozen=True)
class PhysicalParams:
    omega0: float
    temperature: float
    hbar: float = HBAR
    k_b: float = K_B

    def __post_init__(self):
        for name in ("omega0", "temperature", "hbar", "k_b"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive and finite, got {value}")


@dataclass(frozen=True)
class DipolarGeometry:
    gamma: float
    r12: float
    theta12: float

    def __post_init__(self):
        if not self.r12 > 0:
            raise ValueError(f"r12 must be positive, got {self.r12}")


@dataclass(frozen=True)
class SpinSystem:
    """Spin cluster with double-quantum couplings ``(j, k, b_jk)``, ``b`` in rad/s."""

    n: int
    couplings: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(
            self, "couplings", tuple((int(j), int(k), float(b)) for j, k, b in self.couplings)
        )
        if not 2 <= self.n <= MAX_SPINS:
            raise ValueError(f"n must be in [2, {MAX_SPINS}], got {self.n}")
        seen = set()
        for j, k, _ in self.couplings:
            if not 0 <= j < k < self.n:
                raise ValueError(f"coupling pair ({j}, {k}) must satisfy 0 <= j < k < {self.n}")
            if (j, k) in seen:
                raise ValueError(f"duplicate coupling pair ({j}, {k})")
            seen.add((j, k))
        if self.n == 2 and len(self.couplings) != 1:
            raise ValueError("a two-spin system takes exactly one coupling")

    @classmethod
    def pair(cls, b: float) -> "SpinSystem":
        return cls(2, ((0, 1, b),))


def dipolar_coupling(geom: DipolarGeometry, hbar: float = HBAR, mu0_over_4pi: float = MU0_OVER_4PI) -> float:
    """Double-quantum coupling constant in rad/s.

    ``b = mu0/(4 pi) * gamma**2 * hbar * (1 - 3 cos**2 theta) / (2 r**3)``.
    The prefactor defaults to SI; pass ``mu0_over_4pi=1`` with CGS inputs.
    Negative values are legitimate (angles beyond the magic angle).
    """
    if not geom.r12 > 0:
        raise ValueError(f"r12 must be positive, got {geom.r12}")
    angular = 1.0 - 3.0 * np.cos(geom.theta12) ** 2
    return float(mu0_over_4pi * geom.gamma**2 * hbar * angular / (2.0 * geom.r12**3))


def beta_from(params: PhysicalParams) -> float:
    """Dimensionless inverse temperature ``hbar omega0 / (k_B T)``."""
    if not params.temperature > 0:
        raise ValueError(f"temperature must be positive, got {params.temperature}")
    return params.hbar * params.omega0 / (params.k_b * params.temperature)


def critical_temperature(params: PhysicalParams) -> float:
    """Temperature in kelvin below which the pair can become entangled.

    Only ``omega0`` and the constants of ``params`` are used.
    """
    return params.hbar * params.omega0 / (params.k_b * ENTANGLEMENT_BETA)


def build_h_mq(system: SpinSystem) -> np.ndarray:
    """Dense ``sum b_jk (I_j+ I_k+ + I_j- I_k-)`` as a complex matrix."""
    if not isinstance(system, SpinSystem):
        raise TypeError(f"expected SpinSystem, got {type(system).__name__}")
    pairs = [(j, k) for j, k, _ in system.couplings]
    bs = [b for _, _, b in system.couplings]
    return kernels.double_quantum(system.n, pairs, bs).astype(np.complex128)


def hmq_eigenbasis_two_spin() -> np.ndarray:
    """Unitary whose columns are eigenvectors of the two-spin Hamiltonian.

    Columns are ``|01>``, ``|10>``, ``(|00>+|11>)/sqrt2`` and
    ``(|00>-|11>)/sqrt2`` with eigenvalues ``0, 0, b, -b``; that is,
    ``U.conj().T @ H @ U`` is diagonal.
    """
    s = 1 / np.sqrt(2.0)
    return np.array(
        [
            [0, 0, s, s],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, s, -s],
        ],
        dtype=np.complex128,
    )
