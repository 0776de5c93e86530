"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both variants are called directly, so ``DBKD_NUMBA`` does not matter here.
Each row also checks that the two variants agree on the benchmark input.
"""
import argparse
import time

import numpy as np

from dbkd import kernels as K
from dbkd._accel import HAVE_NUMBA


def _best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if np.issubdtype(np.asarray(a).dtype, np.floating):
        # the numba loop and numpy's einsum sum in different orders
        return bool(np.allclose(a, b, rtol=1e-12, atol=0.0))
    return bool(np.array_equal(a, b))


def cases(quick: bool):
    rng = np.random.default_rng(0)
    n_scores = 20_000 if quick else 200_000
    scores = rng.uniform(0.1, 1.0, n_scores)
    labels = rng.integers(0, 10, n_scores).astype(np.int64)
    tau = rng.uniform(0.3, 0.9, 10)
    n_ref, n_cand, dim = (500, 1000, 1024) if quick else (2000, 5000, 1024)
    ref = rng.uniform(size=(n_ref, dim))
    cand = rng.uniform(size=(n_cand, dim))
    sq = K._knn_sqradii_np(ref, 5)
    yield "class_quantiles", K._class_quantiles_nb, K._class_quantiles_np, (scores, labels, 10, 0.1)
    yield "threshold_mask", K._threshold_mask_nb, K._threshold_mask_np, (scores, labels, tau)
    yield ("quota_select", lambda *a: K._quota_select_nb(a[0], a[1].copy(), a[2]),
           lambda *a: K._quota_select_np(a[0], a[1].copy(), a[2]), (labels, np.zeros(10, np.int64), n_scores // 20))
    yield "knn_sqradii", K._knn_sqradii_nb, K._knn_sqradii_np, (ref, 5)
    yield "covered_mask", K._covered_nb, K._covered_np, (ref, sq, cand)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba unavailable (or DBKD_NUMBA=0 at import): the _nb variants run as plain Python")
    print(f"{'kernel':<16}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  agree")
    for name, nb, np_fn, fargs in cases(args.quick):
        nb(*fargs)  # compile outside the timed region
        t_nb, a = _best_of(nb, fargs, args.repeat)
        t_np, b = _best_of(np_fn, fargs, args.repeat)
        agree = _same(a, b)
        print(f"{name:<16}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
