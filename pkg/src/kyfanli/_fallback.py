"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

Same algorithms, same sweep and search orders; only speed differs.
"""

from __future__ import annotations

import math

import numpy as np


def jacobi(a: np.ndarray, v: np.ndarray | None, rel_tol: float, max_sweeps: int) -> int:
    n = a.shape[0]
    fro = math.sqrt(float(np.sum(a * a)))
    iu = np.triu_indices(n, 1)
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0 * float(np.sum(a[iu] ** 2)))
        if off <= rel_tol * fro:
            return sweep
        if sweep == max_sweeps:
            break
        # early sweeps skip small elements; late sweeps drop negligible ones
        tresh = 0.2 * float(np.sum(np.abs(a[iu]))) / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = 100.0 * abs(apq)
                if sweep > 3 and abs(a[p, p]) + g == abs(a[p, p]) and abs(a[q, q]) + g == abs(a[q, q]):
                    a[p, q] = 0.0
                    continue
                if abs(apq) <= tresh or apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                # the three index ranges of the upper-triangle update
                g = a[:p, p].copy()
                h = a[:p, q].copy()
                a[:p, p] = g - s * (h + g * tau)
                a[:p, q] = h + s * (g - h * tau)
                g = a[p, p + 1:q].copy()
                h = a[p + 1:q, q].copy()
                a[p, p + 1:q] = g - s * (h + g * tau)
                a[p + 1:q, q] = h + s * (g - h * tau)
                g = a[p, q + 1:].copy()
                h = a[q, q + 1:].copy()
                a[p, q + 1:] = g - s * (h + g * tau)
                a[q, q + 1:] = h + s * (g - h * tau)
                if v is not None:
                    g = v[:, p].copy()
                    h = v[:, q].copy()
                    v[:, p] = g - s * (h + g * tau)
                    v[:, q] = h + s * (g - h * tau)
    return -1


def _smaller_exists(depth: int, n: int, adj: list[int], img: list[int],
                    used: list[bool], bits: list[int]) -> bool:
    if depth == n:
        return False
    base = depth * (depth - 1) // 2
    for w in range(n):
        if used[w]:
            continue
        res = 0
        for i in range(depth):
            b = (adj[img[i]] >> w) & 1
            s = bits[base + i]
            if b != s:
                res = -1 if b < s else 1
                break
        if res == -1:
            return True
        if res == 1:
            continue
        used[w] = True
        img[depth] = w
        if _smaller_exists(depth + 1, n, adj, img, used, bits):
            used[w] = False
            return True
        used[w] = False
    return False


def _masks_with_popcount(E: int, m: int):
    if m == 0:
        yield 0
        return
    mask = (1 << m) - 1
    last = 1 << E
    while mask < last:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r


def canonical_connected_masks(n: int, m: int = -1, connected: bool = True) -> list[int]:
    if n < 1 or n > 9:
        raise ValueError("brute-force enumeration supports 1 <= n <= 9")
    E = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    full = (1 << n) - 1
    if m > E:
        return []
    masks = range(1 << E) if m < 0 else _masks_with_popcount(E, m)
    out = []
    for mask in masks:
        bits = [(mask >> k) & 1 for k in range(E)]
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        if connected:
            reach = 1
            while True:
                grow = reach
                for v in range(n):
                    if (reach >> v) & 1:
                        grow |= adj[v]
                if grow == reach:
                    break
                reach = grow
            if reach != full:
                continue
        if not _smaller_exists(0, n, adj, [0] * n, [False] * n, bits):
            out.append(mask)
    return out


def iso_map(adj1, adj2, col1, col2, order):
    n = len(adj1)
    if n > 64:
        raise ValueError("bitset backtracking supports n <= 64")
    img = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if used[w] or col2[w] != col1[v]:
                continue
            for i in range(depth):
                u = order[i]
                if ((adj1[v] >> u) & 1) != ((adj2[w] >> img[u]) & 1):
                    break
            else:
                used[w] = True
                img[v] = w
                if extend(depth + 1):
                    return True
                used[w] = False
        return False

    return list(img) if extend(0) else None
