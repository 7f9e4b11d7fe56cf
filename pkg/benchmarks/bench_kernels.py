"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--max-spins 10] [--repeat 5]

The first numba call per signature is excluded (JIT warm-up).
"""
import argparse
import timeit

import numpy as np

from mqnmr import _kernels_numba, _kernels_numpy
from mqnmr.spinops import twice_magnetization


def _cases(n, rng):
    dim = 2**n
    rho = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    ref = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m2 = twice_magnetization(n).astype(np.int64)
    pairs = np.array([(j, k) for j in range(n) for k in range(j + 1, n)], dtype=np.int64)
    bs = rng.normal(size=len(pairs))
    pj, pk = pairs[:, 0].copy(), pairs[:, 1].copy()
    return {
        "order_overlaps": lambda impl: impl.order_overlaps(rho, ref, m2),
        "pair_reduce": lambda impl: impl.pair_reduce(rho, n, 0, n - 1),
        "double_quantum": lambda impl: impl.double_quantum(n, pj, pk, bs),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-spins", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    print(f"{'kernel':<16}{'n':>3}{'numpy ms':>12}{'numba ms':>12}{'speedup':>9}")
    for n in range(2, args.max_spins + 1, 2):
        for name, call in _cases(n, rng).items():
            call(_kernels_numba)
            t_np = min(timeit.repeat(lambda: call(_kernels_numpy), number=1, repeat=args.repeat))
            t_nb = min(timeit.repeat(lambda: call(_kernels_numba), number=1, repeat=args.repeat))
            print(f"{name:<16}{n:>3}{t_np * 1e3:>12.3f}{t_nb * 1e3:>12.3f}{t_np / t_nb:>9.1f}")


if __name__ == "__main__":
    main()
