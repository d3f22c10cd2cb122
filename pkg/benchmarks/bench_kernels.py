"""Compiled kernels vs the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``. Each kernel gets the same
inputs on both backends; results are checked for agreement before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kyfanli import _fallback
from kyfanli._backend import COMPILED
from kyfanli.families import path, spider
from kyfanli.iso import _search_order, wl_colors


def _compiled():
    if not COMPILED:
        return None
    from kyfanli import _kernels

    return _kernels


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_jacobi(mod, n: int, count: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    mats = []
    for _ in range(count):
        a = rng.standard_normal((n, n))
        mats.append((a + a.T) / 2)

    def run():
        out = []
        for a in mats:
            b = a.copy()
            mod.jacobi(b, None, 1e-12, 60)
            out.append(np.sort(np.diag(b)))
        return out

    return run


def bench_masks(mod, n: int):
    return lambda: mod.canonical_connected_masks(n, -1, True)


def bench_iso(mod, n: int, count: int):
    G = spider([1] * (n // 3) + [2] * (n // 6)) if n >= 6 else path(n)
    perm = list(reversed(range(G.n)))
    H = G.relabel(perm)
    c1, c2 = wl_colors(G), wl_colors(H)
    order = _search_order(G, c1)

    def run():
        for _ in range(count):
            mod.iso_map(list(G.adj), list(H.adj), c1, c2, order)

    return run


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    comp = _compiled()
    cases = [
        ("jacobi n=20 x200", lambda m: bench_jacobi(m, 20, 200)),
        ("jacobi n=60 x10", lambda m: bench_jacobi(m, 60, 10)),
        ("canonical masks n=6", lambda m: bench_masks(m, 6)),
        ("iso_map spider x200", lambda m: bench_iso(m, 16, 200)),
    ]
    print(f"{'kernel':<24}{'fallback s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, make in cases:
        slow = _time(make(_fallback), args.repeat)
        if comp is None:
            print(f"{name:<24}{slow:>12.4f}{'n/a':>12}{'n/a':>10}")
            continue
        fast_fn = make(comp)
        ref, got = make(_fallback)(), fast_fn()
        if isinstance(ref, list) and ref and isinstance(ref[0], np.ndarray):
            assert all(np.array_equal(x, y) for x, y in zip(ref, got)), name
        elif ref is not None:
            assert ref == got, name
        fast = _time(fast_fn, args.repeat)
        print(f"{name:<24}{slow:>12.4f}{fast:>12.4f}{slow / fast:>10.1f}")


if __name__ == "__main__":
    main()
