"""Thermal states and exact unitary evolution under a static Hamiltonian."""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError
from .spinops import matrix_tolerance, n_spins_of, total_iz, twice_magnetization

PSD_FLOOR = -1e-10


def check_density_matrix(rho, tol=None, check_psd=True) -> np.ndarray:
    """Validate ``rho`` as a density matrix and return it as a complex array.

    Hermiticity and unit trace are checked to ``tol`` (the package matrix
    tolerance by default). Eigenvalues must not fall below ``-1e-10``.
    """
    tol = matrix_tolerance() if tol is None else tol
    rho = np.asarray(rho, dtype=np.complex128)
    n_spins_of(rho)
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > tol:
        raise InvalidStateError(f"matrix is not Hermitian (max deviation {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise InvalidStateError(f"trace is {tr:.15g}, expected 1")
    if check_psd:
        low = np.linalg.eigvalsh(rho)[0]
        if low < PSD_FLOOR:
            raise InvalidStateError(f"matrix has negative eigenvalue {low:.3e}")
    return rho


def thermal_state(beta: float, n: int) -> np.ndarray:
    """Equilibrium state ``exp(beta I_z) / Z`` of ``n`` spins in the field."""
    m = twice_magnetization(n) / 2
    w = np.exp(beta * (m - m.max()))
    return np.diag(w / w.sum()).astype(np.complex128)


@dataclass(frozen=True)
class SpectralDecomposition:
    """``H = V diag(eigenvalues) V^dagger`` with orthonormal columns in ``V``.

    Read-only once built; one instance can serve any number of evolution
    times.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def propagator(self, tau: float) -> np.ndarray:
        """``exp(-i H tau)``."""
        v = self.eigenvectors
        return (v * np.exp(-1j * self.eigenvalues * tau)) @ v.conj().T

    def conjugate(self, a, tau: float) -> np.ndarray:
        """``exp(-i H tau) a exp(i H tau)``."""
        v = self.eigenvectors
        phase = np.exp(-1j * self.eigenvalues * tau)
        a_eig = v.conj().T @ a @ v
        a_eig = phase[:, None] * a_eig * phase.conj()[None, :]
        return v @ a_eig @ v.conj().T


def hermitian_eigendecompose(h, tol=None) -> SpectralDecomposition:
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix.

    The Hermiticity check is relative to ``max(1, max|h|)`` so that
    Hamiltonians in rad/s are judged on the same footing as O(1) matrices.
    """
    tol = matrix_tolerance() if tol is None else tol
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    scale = max(1.0, float(np.max(np.abs(h))) if h.size else 1.0)
    if np.max(np.abs(h - h.conj().T), initial=0.0) > tol * scale:
        raise InvalidStateError("matrix is not Hermitian")
    w, v = np.linalg.eigh(h)
    return SpectralDecomposition(w, v)


def _as_decomposition(h):
    if isinstance(h, SpectralDecomposition):
        return h
    return hermitian_eigendecompose(h)


def evolve(rho0, h, tau: float) -> np.ndarray:
    """Evolve ``rho0`` for time ``tau`` under ``h``.

    ``h`` is either a Hermitian matrix or a precomputed
    :class:`SpectralDecomposition`; passing the latter avoids repeating the
    diagonalization across a time sweep.
    """
    rho0 = np.asarray(rho0, dtype=np.complex128)
    spec = _as_decomposition(h)
    if rho0.shape != (spec.dim, spec.dim):
        raise ValueError(f"state shape {rho0.shape} does not match Hamiltonian dimension {spec.dim}")
    return spec.conjugate(rho0, tau)


def ht_reference(h, tau: float, n: int) -> np.ndarray:
    """High-temperature reference ``exp(-i H tau) I_z exp(i H tau)``."""
    spec = _as_decomposition(h)
    if spec.dim != 2**n:
        raise ValueError(f"Hamiltonian dimension {spec.dim} does not match {n} spins")
    return spec.conjugate(total_iz(n), tau)


def analytic_rho_two_spin(beta: float, b: float, tau: float) -> np.ndarray:
    """Closed-form two-spin state after preparation time ``tau``."""
    ch, sh = np.cosh(beta), np.sinh(beta)
    c, s = np.cos(2 * b * tau), np.sin(2 * b * tau)
    rho = np.array(
        [
            [ch + c * sh, 0, 0, 1j * s * sh],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [-1j * s * sh, 0, 0, ch - c * sh],
        ],
        dtype=np.complex128,
    )
    return rho / (2 * (1 + ch))
