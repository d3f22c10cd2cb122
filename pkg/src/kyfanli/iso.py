"""Isomorphism testing for small graphs: invariant screening then backtracking."""

from __future__ import annotations

from collections import Counter

import numpy as np

from ._backend import kernels
from .config import ISO_CAP
from .graph import Graph

SPECTRUM_DECIMALS = 6


def wl_colors(G: Graph) -> list[int]:
    """1-dimensional Weisfeiler-Leman colours, comparable across graphs.

    Colours start as degrees and are refined by hashing (own colour, sorted
    neighbour colours) until the number of classes stops growing. Hashes of
    int tuples do not depend on PYTHONHASHSEED.
    """
    col = G.degrees()
    classes = len(set(col))
    for _ in range(G.n):
        col = [hash((col[v], tuple(sorted(col[w] for w in G.neighbors(v))))) for v in range(G.n)]
        k = len(set(col))
        if k == classes:
            break
        classes = k
    return col


def wl_hash(G: Graph) -> int:
    return hash((G.n, G.m, tuple(sorted(Counter(wl_colors(G)).items()))))


def invariant_key(G: Graph, spectrum: bool = True) -> tuple:
    """Isomorphism invariant: (n, m, degrees, WL histogram[, rounded spectrum])."""
    key = (G.n, G.m, tuple(sorted(G.degrees())), wl_hash(G))
    if spectrum and G.n:
        from .spectra import eigenvalues_sym

        mu = np.round(eigenvalues_sym(G.laplacian()), SPECTRUM_DECIMALS) + 0.0
        key += (tuple(mu.tolist()),)
    return key


def _search_order(G: Graph, col: list[int]) -> list[int]:
    # rare colours first, then BFS so each vertex has placed neighbours
    freq = Counter(col)
    rank = sorted(range(G.n), key=lambda v: (freq[col[v]], -G.degree(v), v))
    seen, order = set(), []
    for s in rank:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(G.neighbors(v), key=lambda u: (freq[col[u]], u)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def isomorphism(G1: Graph, G2: Graph, max_n: int = ISO_CAP) -> list[int] | None:
    """A vertex map ``v -> perm[v]`` with ``G1.relabel(perm) == G2``, or None."""
    if G1.n != G2.n:
        return None
    if G1.n > max_n:
        raise ValueError(f"exact isomorphism is capped at n <= {max_n} (got n={G1.n})")
    if G1.m != G2.m or sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    c1, c2 = wl_colors(G1), wl_colors(G2)
    if Counter(c1) != Counter(c2):
        return None
    if G1.n == 0:
        return []
    return kernels.iso_map(list(G1.adj), list(G2.adj), c1, c2, _search_order(G1, c1))


def is_isomorphic(G1: Graph, G2: Graph, max_n: int = ISO_CAP, spectrum_screen: bool = True) -> bool:
    if G1.n != G2.n or G1.m != G2.m:
        return False
    if G1.n > max_n:
        raise ValueError(f"exact isomorphism is capped at n <= {max_n} (got n={G1.n})")
    if spectrum_screen and invariant_key(G1) != invariant_key(G2):
        return False
    return isomorphism(G1, G2, max_n) is not None


def dedup(graphs, max_n: int = ISO_CAP) -> tuple[list[Graph], bool]:
    """Unlabeled representatives (first seen wins).

    Returns ``(representatives, exact)``; above ``max_n`` only invariant keys
    are compared and ``exact`` is False.
    """
    buckets: dict[tuple, list[Graph]] = {}
    out, exact = [], True
    for G in graphs:
        key = invariant_key(G, spectrum=G.n > max_n)
        reps = buckets.setdefault(key, [])
        if G.n > max_n:
            exact = False
            if reps:
                continue
        elif any(isomorphism(H, G, max_n) is not None for H in reps):
            continue
        reps.append(G)
        out.append(G)
    return out, exact
