"""Pure-numpy versions of the loop kernels in :mod:`mqnmr.kernels`."""
import numpy as np


def order_overlaps(rho, ref, m2):
    """Sum ``rho[p, q] * ref[q, p]`` grouped by coherence order.

    ``m2`` holds twice the magnetization of each basis state. Entry ``k`` of
    the returned complex vector is the order ``k - n`` overlap.
    """
    n = int(m2[0]) if m2.size else 0
    orders = (m2[:, None] - m2[None, :]) // 2 + n
    prod = (rho * ref.T).ravel()
    flat = orders.ravel()
    re = np.bincount(flat, weights=prod.real, minlength=2 * n + 1)
    im = np.bincount(flat, weights=prod.imag, minlength=2 * n + 1)
    return re + 1j * im


def pair_reduce(rho, n, j, k):
    tensor = rho.reshape((2,) * (2 * n))
    rest = [s for s in range(n) if s not in (j, k)]
    axes = [j, k] + rest + [n + j, n + k] + [n + s for s in rest]
    r = 2 ** len(rest)
    blocks = tensor.transpose(axes).reshape(4, r, 4, r)
    return np.einsum("arbr->ab", blocks)


def double_quantum(n, pj, pk, bs):
    dim = 2**n
    h = np.zeros((dim, dim))
    idx = np.arange(dim)
    for j, k, b in zip(pj, pk, bs):
        mask = (1 << (n - 1 - j)) | (1 << (n - 1 - k))
        down = idx[(idx & mask) == mask]
        up = down & ~mask
        h[up, down] += b
        h[down, up] += b
    return h
