"""Compare the numba and numpy kernel backends on random batches.

    python benchmarks/bench_kernels.py --n 6 --rows 200000 --repeat 5
"""

import argparse
import time

import numpy as np

from shivar import _kernels
from shivar.components import enumerate_admitted
from shivar.phi import f_simple_word


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation for numba
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--rows", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    n, N = args.n, args.rows
    m = n * (n + 1) // 2
    rng = np.random.default_rng(args.seed)
    Y = rng.integers(-10**6, 10**6, size=(N, n + 1))
    K = rng.integers(-3, 4, size=(N, m))
    if n <= 6:
        # mostly admitted rows, so the mask kernel cannot exit early
        pool = np.array([v.values for v in enumerate_admitted(n)], dtype=np.int64)
        L = pool[rng.integers(0, len(pool), size=N)]
    else:
        L = rng.integers(0, 2, size=(N, m))
    F = f_simple_word(n, list(rng.integers(1, n + 1, size=20)))

    cases = {
        "floor_pairings": lambda b: _kernels.floor_pairings(Y, 2 * (n + 1), n, backend=b),
        "admitted_part": lambda b: _kernels.admitted_part_batch(K, n, backend=b),
        "admitted_mask": lambda b: _kernels.admitted_mask(L, n, backend=b),
        "apply_signed": lambda b: _kernels.apply_signed(F.perm, F.sign, F.translation, K, backend=b),
    }
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"n={n} rows={N} repeat={args.repeat}")
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases.items():
        outs = [fn(b) for b in backends]
        assert all(np.array_equal(outs[0], o) for o in outs[1:]), name
        t = [best_of(lambda b=b: fn(b), args.repeat) for b in backends]
        speed = f"{t[0] / t[1]:>9.1f}x" if len(t) > 1 else ""
        print(f"{name:<16}" + "".join(f"{x * 1e3:>10.2f}ms" for x in t) + speed)


if __name__ == "__main__":
    main()
