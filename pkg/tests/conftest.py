import numpy as np
import pytest

B_FIG = 2 * np.pi * 1307.0
GRID_BETAS = (0.5, 1.0, 3.0, 6.0)
GRID_PHASES = np.linspace(0.0, 2 * np.pi, 64)  # values of 2 b tau

ACCEPTANCE_LINES = []


def grid_points(b=B_FIG):
    for beta in GRID_BETAS:
        for phase in GRID_PHASES:
            yield beta, phase / (2 * b)


def random_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_hermitian(rng, dim, scale=1.0):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (a + a.conj().T) / 2


def random_density(rng, dim, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_product_pure(rng):
    def qubit():
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        return v / np.linalg.norm(v)

    psi = np.kron(qubit(), qubit())
    return np.outer(psi, psi.conj())


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
