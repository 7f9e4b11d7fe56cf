"""Hot loops over basis-index pairs.

The numba implementation is used when numba imports and the environment
variable ``MQNMR_DISABLE_NUMBA`` is unset or ``0``; otherwise the vectorized
numpy versions run. Both modules are importable directly for comparison.
"""
import os

import numpy as np

from . import _kernels_numpy as numpy_impl

try:
    from . import _kernels_numba as numba_impl
except ImportError:  # pragma: no cover
    numba_impl = None

_disabled = os.environ.get("MQNMR_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")

if numba_impl is not None and not _disabled:
    BACKEND = "numba"
    _impl = numba_impl
else:
    BACKEND = "numpy"
    _impl = numpy_impl


def order_overlaps(rho, ref, m2):
    """Complex overlaps ``tr(rho_(k) ref_(-k))`` for orders ``k = -n..n``."""
    return _impl.order_overlaps(
        np.ascontiguousarray(rho, dtype=np.complex128),
        np.ascontiguousarray(ref, dtype=np.complex128),
        np.ascontiguousarray(m2, dtype=np.int64),
    )


def pair_reduce(rho, n, j, k):
    """Reduced 4x4 block of ``rho`` on sites ``j`` and ``k`` (in that order)."""
    return _impl.pair_reduce(np.ascontiguousarray(rho, dtype=np.complex128), int(n), int(j), int(k))


def double_quantum(n, pairs, couplings):
    """Real matrix of ``sum b (I_j+ I_k+ + I_j- I_k-)`` over the given pairs."""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    bs = np.asarray(couplings, dtype=np.float64).reshape(-1)
    return _impl.double_quantum(int(n), pairs[:, 0].copy(), pairs[:, 1].copy(), bs)
