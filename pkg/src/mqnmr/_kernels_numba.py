"""Numba-compiled loop kernels; signatures mirror ``_kernels_numpy``."""
import numpy as np
from numba import njit


@njit(cache=True)
def order_overlaps(rho, ref, m2):
    dim = rho.shape[0]
    n = m2[0] if dim else 0
    out = np.zeros(2 * n + 1, dtype=np.complex128)
    for p in range(dim):
        for q in range(dim):
            out[(m2[p] - m2[q]) // 2 + n] += rho[p, q] * ref[q, p]
    return out


@njit(cache=True)
def pair_reduce(rho, n, j, k):
    dim = rho.shape[0]
    sj = n - 1 - j
    sk = n - 1 - k
    clear = ~((1 << sj) | (1 << sk))
    out = np.zeros((4, 4), dtype=rho.dtype)
    for p in range(dim):
        a = (((p >> sj) & 1) << 1) | ((p >> sk) & 1)
        base = p & clear
        for b in range(4):
            q = base | (((b >> 1) & 1) << sj) | ((b & 1) << sk)
            out[a, b] += rho[p, q]
    return out


@njit(cache=True)
def double_quantum(n, pj, pk, bs):
    dim = 1 << n
    h = np.zeros((dim, dim))
    for t in range(pj.shape[0]):
        mask = (1 << (n - 1 - pj[t])) | (1 << (n - 1 - pk[t]))
        for q in range(dim):
            if (q & mask) == mask:
                p = q & ~mask
                h[p, q] += bs[t]
                h[q, p] += bs[t]
    return h
