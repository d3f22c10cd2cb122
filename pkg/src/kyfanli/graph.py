"""Simple undirected graphs on dense 0-based vertex labels.

Graphs are immutable. Edges are kept as a sorted tuple of ``(u, v)`` pairs with
``u < v`` and every vertex carries a neighbor bitset (a Python int).
"""

from __future__ import annotations

from collections import deque
from itertools import permutations
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction input."""


class Graph:
    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        adj = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {pair} has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"loop edge {pair}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {pair}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)
        self._hash = hash((n, self.edges))

    @classmethod
    def _from_adj(cls, adj: list[int]) -> "Graph":
        # trusted path for internally generated bitsets
        g = object.__new__(cls)
        n = len(adj)
        g.n = n
        g.adj = tuple(adj)
        g.edges = tuple((u, v) for u in range(n) for v in _bits(adj[u]) if v > u)
        g._hash = hash((n, g.edges))
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        """Degrees indexed by vertex."""
        return [a.bit_count() for a in self.adj]

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for u, v in self.edges:
            A[u, v] = A[v, u] = 1.0
        return A

    def laplacian(self) -> np.ndarray:
        A = self.adjacency_matrix()
        return np.diag(A.sum(axis=1)) - A

    def to_graph6(self) -> str:
        from .graph6 import encode

        return encode(self)

    def relabel(self, perm: list[int]) -> "Graph":
        """Image of the graph under vertex map ``v -> perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n)


# ---------------------------------------------------------------------------
# degree sequences


def degree_sequence(G: Graph) -> tuple[int, ...]:
    return tuple(sorted(G.degrees(), reverse=True))


def conjugate_degree_sequence(d: Iterable[int]) -> tuple[int, ...]:
    """``d*_i = |{j : d_j >= i}|`` for ``i = 1..len(d)``."""
    d = list(d)
    n = len(d)
    if any(x < 0 or x > max(n - 1, 0) for x in d):
        raise ValueError(f"not a degree sequence of an n={n} graph: {d}")
    if sum(d) % 2:
        raise ValueError(f"degree sum is odd: {d}")
    counts = [0] * (n + 1)
    for x in d:
        counts[x] += 1
    conj = []
    at_least = n - counts[0]
    for i in range(1, n + 1):
        conj.append(at_least)
        at_least -= counts[i]
    return tuple(conj)


def first_zagreb(G: Graph) -> int:
    return sum(d * d for d in G.degrees())


def max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


# ---------------------------------------------------------------------------
# operations


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph._from_adj([(full ^ a) & ~(1 << v) for v, a in enumerate(G.adj)])


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    return Graph(G1.n + G2.n, list(G1.edges) + [(u + shift, v + shift) for u, v in G2.edges])


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts (G1 first)."""
    U = disjoint_union(G1, G2)
    cross = [(u, G1.n + v) for u in range(G1.n) for v in range(G2.n)]
    return Graph(U.n, list(U.edges) + cross)


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    return Graph(len(vs), [(index[u], index[v]) for u, v in G.edges if u in index and v in index])


# ---------------------------------------------------------------------------
# structural predicates


def components(G: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by least vertex."""
    left = (1 << G.n) - 1
    out = []
    while left:
        seed = left & -left
        reach = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= G.adj[v]
            frontier = grow & ~reach
            reach |= grow
        out.append(reach)
        left &= ~reach
    return out


def num_components(G: Graph) -> int:
    return len(components(G))


def is_connected(G: Graph) -> bool:
    return G.n >= 1 and num_components(G) == 1


def two_coloring(G: Graph) -> list[int] | None:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in _bits(G.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return two_coloring(G) is not None


def has_odd_cycle(G: Graph) -> bool:
    return not is_bipartite(G)


def triangle_count(G: Graph) -> int:
    return sum((G.adj[u] & G.adj[v]).bit_count() for u, v in G.edges) // 3


def is_triangle_free(G: Graph) -> bool:
    return all(not (G.adj[u] & G.adj[v]) for u, v in G.edges)


def cyclomatic(G: Graph) -> int:
    return G.m - G.n + num_components(G)


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.m == G.n - 1


def is_regular(G: Graph) -> bool:
    return len(set(G.degrees())) <= 1


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def c_cyclic(G: Graph) -> int | None:
    """``c`` for a connected graph with ``m = n + c - 1``; None if disconnected."""
    return G.m - G.n + 1 if is_connected(G) else None


def is_threshold(G: Graph) -> bool:
    """Repeatedly strip an isolated or dominating vertex; threshold iff it empties."""
    alive = (1 << G.n) - 1
    while alive:
        size = alive.bit_count()
        for v in _bits(alive):
            d = (G.adj[v] & alive).bit_count()
            if d == 0 or d == size - 1:
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def is_threshold_bruteforce(G: Graph) -> bool:
    """Search every vertex order for an isolated/dominating build sequence (n <= 8)."""
    if G.n > 8:
        raise ValueError("brute-force threshold test is limited to n <= 8")
    for order in permutations(range(G.n)):
        placed = 0
        for v in order:
            back = G.adj[v] & placed
            if back != 0 and back != placed:
                break
            placed |= 1 << v
        else:
            return True
    return G.n == 0


def threshold_creation_sequence(G: Graph) -> str | None:
    """Bit string (first bit '0', then 1 = dominating, 0 = isolated) or None."""
    alive = (1 << G.n) - 1
    seq = []
    while alive:
        size = alive.bit_count()
        for v in _bits(alive):
            d = (G.adj[v] & alive).bit_count()
            if size > 1 and d == size - 1:
                seq.append("1")
                alive &= ~(1 << v)
                break
            if d == 0:
                seq.append("0")
                alive &= ~(1 << v)
                break
        else:
            return None
    seq.reverse()
    if seq:
        seq[0] = "0"
    return "".join(seq)


def is_subgraph_edges(H: Graph, G: Graph) -> bool:
    """True when H (same vertex labels) uses only edges of G."""
    return H.n <= G.n and all(G.has_edge(u, v) for u, v in H.edges)

