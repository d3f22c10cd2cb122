"""Unlabeled enumeration of small graph classes and seeded random samplers."""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from ._backend import kernels
from .config import ISO_CAP
from .graph import Graph
from .iso import isomorphism, wl_hash

CLASSES = ("trees", "unicyclic", "bicyclic", "connected")
TREE_MAX_N = 16
CYCLIC_MAX_N = 13
CONNECTED_MAX_N = 7
CONNECTED_OPT_IN_N = 8


class EnumerationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# free trees from level sequences


def _next_rooted(L: list[int]) -> list[int] | None:
    """Beyer-Hedetniemi successor of a canonical rooted level sequence."""
    p = len(L) - 1
    while p > 0 and L[p] == 1:
        p -= 1
    if p == 0:
        return None
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    out = L[:p]
    for i in range(p, len(L)):
        out.append(out[i - p + q])
    return out


def _is_centre_canonical(L: list[int]) -> bool:
    # the root must be the centre; for bicentral trees, the root side must not
    # be smaller (size, then sequence) than the tallest branch side
    n = len(L)
    if n <= 2:
        return True
    m = 2
    while m < n and L[m] != 1:
        m += 1
    left = [x - 1 for x in L[1:m]]
    rest = [0] + L[m:]
    hl, hr = max(left), max(rest)
    if hr != hl:
        return hr > hl
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _level_to_graph(L: list[int]) -> Graph:
    last = {}
    edges = []
    for i, lv in enumerate(L):
        if lv:
            edges.append((last[lv - 1], i))
        last[lv] = i
    return Graph(len(L), edges)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    L = list(range(n))
    out = []
    while L is not None:
        if _is_centre_canonical(L):
            out.append(_level_to_graph(L))
        L = _next_rooted(L)
    return tuple(out)


def enum_trees(n: int) -> Iterator[Graph]:
    """One labeled representative per free tree on ``n`` vertices (root 0 = centre)."""
    if not 1 <= n <= TREE_MAX_N:
        raise EnumerationError(f"trees need 1 <= n <= {TREE_MAX_N}, got {n}")
    yield from _trees(n)


# ---------------------------------------------------------------------------
# unicyclic and bicyclic graphs by adding edges


def _add_edge_all(graphs, max_n: int) -> list[Graph]:
    buckets: dict[int, list[Graph]] = {}
    out = []
    for G in graphs:
        for v in range(G.n):
            for u in range(v):
                if (G.adj[v] >> u) & 1:
                    continue
                adj = list(G.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                H = Graph._from_adj(adj)
                reps = buckets.setdefault(wl_hash(H), [])
                if H.n <= max_n:
                    if any(isomorphism(R, H, max_n) is not None for R in reps):
                        continue
                elif reps:
                    continue
                reps.append(H)
                out.append(H)
    return out


@lru_cache(maxsize=None)
def _unicyclic(n: int, max_n: int) -> tuple[Graph, ...]:
    return tuple(_add_edge_all(_trees(n), max_n))


@lru_cache(maxsize=None)
def _bicyclic(n: int, max_n: int) -> tuple[Graph, ...]:
    return tuple(_add_edge_all(_unicyclic(n, max_n), max_n))


def enum_unicyclic(n: int, iso_cap: int = ISO_CAP) -> Iterator[Graph]:
    if not 3 <= n <= CYCLIC_MAX_N:
        raise EnumerationError(f"unicyclic graphs need 3 <= n <= {CYCLIC_MAX_N}, got {n}")
    yield from _unicyclic(n, iso_cap)


def enum_bicyclic(n: int, iso_cap: int = ISO_CAP) -> Iterator[Graph]:
    if not 4 <= n <= CYCLIC_MAX_N:
        raise EnumerationError(f"bicyclic graphs need 4 <= n <= {CYCLIC_MAX_N}, got {n}")
    yield from _bicyclic(n, iso_cap)


# ---------------------------------------------------------------------------
# all connected graphs by orderly brute force


def mask_to_graph(n: int, mask: int) -> Graph:
    """Graph whose graph6 upper-triangle bits (column-major) are ``mask``, LSB first."""
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._from_adj(adj)


@lru_cache(maxsize=None)
def _connected(n: int, m: int) -> tuple[Graph, ...]:
    return tuple(mask_to_graph(n, mask) for mask in kernels.canonical_connected_masks(n, m, True))


def enum_connected(n: int, m: int | None = None, allow_n8: bool = False) -> Iterator[Graph]:
    """Every connected unlabeled graph on ``n`` vertices (optionally with ``m`` edges)."""
    cap = CONNECTED_OPT_IN_N if allow_n8 else CONNECTED_MAX_N
    if not 1 <= n <= cap:
        raise EnumerationError(f"connected graphs need 1 <= n <= {cap}, got {n}")
    yield from _connected(n, -1 if m is None else m)


# ---------------------------------------------------------------------------
# random samplers (not uniform over isomorphism classes)


def prufer_to_tree(seq, n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, int(x))
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def _random_tree(rng: np.random.Generator, n: int) -> Graph:
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    return prufer_to_tree(rng.integers(0, n, size=n - 2).tolist(), n)


SAMPLE_CHUNK = 1000
_EXTRA = {"trees": 0, "unicyclic": 1, "bicyclic": 2}


def sample_chunk(cls: str, n: int, seed: int, chunk: int, size: int) -> list[Graph]:
    """Chunk ``chunk`` of the seeded sample stream; the stream is the concatenation
    of chunks of ``SAMPLE_CHUNK`` graphs, each with its own generator."""
    extra = _EXTRA.get(cls)
    if extra is None:
        raise EnumerationError(f"sampling supports trees, unicyclic, bicyclic; got {cls!r}")
    if n < (1 if extra == 0 else 2 + extra):
        raise EnumerationError(f"n={n} too small for {cls}")
    rng = np.random.default_rng([seed, n, chunk])
    out = []
    for _ in range(size):
        T = _random_tree(rng, n)
        adj = list(T.adj)
        added = 0
        while added < extra:
            u, v = (int(x) for x in rng.integers(0, n, size=2))
            if u == v or (adj[u] >> v) & 1:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            added += 1
        out.append(Graph._from_adj(adj))
    return out


def sample_plan(count: int) -> list[tuple[int, int]]:
    """(chunk index, size) pairs covering ``count`` samples."""
    return [(c, min(SAMPLE_CHUNK, count - c * SAMPLE_CHUNK)) for c in range((count + SAMPLE_CHUNK - 1) // SAMPLE_CHUNK)]


def sample_class(cls: str, n: int, count: int, seed: int) -> Iterator[Graph]:
    """Seeded random trees (uniform Prufer codes) plus 0, 1 or 2 random extra edges.

    Not uniform over isomorphism classes; meant for falsification sampling.
    """
    for chunk, size in sample_plan(count):
        yield from sample_chunk(cls, n, seed, chunk, size)


def tree_has_perfect_matching(G: Graph) -> bool:
    """Greedy leaf matching, exact for forests."""
    adj = [set(G.neighbors(v)) for v in range(G.n)]
    alive = set(range(G.n))
    while alive:
        leaf = next((v for v in sorted(alive) if len(adj[v]) <= 1), None)
        if leaf is None or not adj[leaf]:
            return False
        mate = next(iter(adj[leaf]))
        for x in (leaf, mate):
            alive.discard(x)
            for y in adj[x]:
                adj[y].discard(x)
            adj[x] = set()
    return True


# ---------------------------------------------------------------------------
# enumeration request + budget


@dataclass(frozen=True)
class EnumSpec:
    cls: str
    n: int
    m: int | None = None
    dedup: str = "exact"
    iso_cap: int = ISO_CAP
    allow_n8: bool = False

    def __post_init__(self):
        if self.cls not in CLASSES:
            raise EnumerationError(f"unknown class {self.cls!r}; choose from {', '.join(CLASSES)}")
        if self.dedup not in ("exact", "hash"):
            raise EnumerationError(f"dedup must be 'exact' or 'hash', got {self.dedup!r}")
        expected = {"trees": self.n - 1, "unicyclic": self.n, "bicyclic": self.n + 1}.get(self.cls)
        if self.m is not None and expected is not None and self.m != expected:
            raise EnumerationError(f"class {self.cls} at n={self.n} has m={expected}, not {self.m}")

    @property
    def exact(self) -> bool:
        """False when some classes were merged on invariant hashes only."""
        if self.dedup == "hash":
            return False
        return self.cls in ("trees", "connected") or self.n <= self.iso_cap

    def graphs(self) -> Iterator[Graph]:
        cap = self.iso_cap if self.dedup == "exact" else 0
        if self.cls == "trees":
            return enum_trees(self.n)
        if self.cls == "unicyclic":
            return enum_unicyclic(self.n, cap)
        if self.cls == "bicyclic":
            return enum_bicyclic(self.n, cap)
        return enum_connected(self.n, self.m, self.allow_n8)


class Budget:
    """Graph-count and wall-clock caps; ``exhausted`` records whether one fired."""

    def __init__(self, max_graphs: int | None = None, max_seconds: float | None = None):
        self.max_graphs = max_graphs
        self.max_seconds = max_seconds
        self.count = 0
        self.start = time.monotonic()
        self.exhausted = False

    def take(self, stream) -> Iterator:
        for item in stream:
            if self.max_graphs is not None and self.count >= self.max_graphs:
                self.exhausted = True
                return
            if self.max_seconds is not None and time.monotonic() - self.start > self.max_seconds:
                self.exhausted = True
                return
            self.count += 1
            yield item
