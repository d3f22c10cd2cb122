"""Named graph families with fixed, documented vertex labelings.

Hubs and centres are vertex 0 (and 1 for the second centre); leaves and path
vertices follow in increasing order, so graph6 output is bit-stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, disjoint_union, join

MU_TOL = 1e-6


class FamilyModelError(ValueError):
    """A constructor's numeric self-check disagrees with the expected spectrum."""


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise ValueError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    _need(n >= 1, f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def complete_multipartite(parts: list[int]) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), f"invalid part sizes {parts}")
    label, edges = 0, []
    blocks = []
    for p in parts:
        blocks.append(range(label, label + p))
        label += p
    for x in range(len(blocks)):
        for y in range(x + 1, len(blocks)):
            edges += [(u, v) for u in blocks[x] for v in blocks[y]]
    return Graph(label, edges)


def double_star(a: int, b: int) -> Graph:
    """S_{a,b}: centres 0 and 1; leaves 2..a+1 on 0, a+2..a+b+1 on 1."""
    _need(a >= 1 and b >= 1, f"double star needs a, b >= 1, got ({a}, {b})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph(a + b + 2, edges)


def balanced_double_star(n: int) -> Graph:
    """S_{ceil((n-2)/2), floor((n-2)/2)}."""
    _need(n >= 4, f"balanced double star needs n >= 4, got {n}")
    return double_star((n - 1) // 2, (n - 2) // 2)


def spider(legs: list[int]) -> Graph:
    """Centre 0 with paths of the given lengths attached, legs in order."""
    edges, label = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, label))
            prev = label
            label += 1
    return Graph(label, edges)


def _mu1(G: Graph) -> float:
    from .spectra import laplacian_spectrum

    return laplacian_spectrum(G).mu1


def _check_tree_order(n: int) -> None:
    # mu_1(S_{3,n-5}) < mu_1(T_n^4) < mu_1(T_n^3) < mu_1(S_{2,n-4}); S_{3,2} = S_{2,3} at n = 7
    if n < 8:
        return
    chain = [double_star(3, n - 5), _t_n_4(n), _t_n_3(n), double_star(2, n - 4)]
    mus = [_mu1(G) for G in chain]
    if not all(x < y for x, y in zip(mus, mus[1:])):
        raise FamilyModelError(f"T_n^3/T_n^4 ordering self-check failed at n={n}: {mus}")


def _t_n_3(n: int) -> Graph:
    return spider([1] * (n - 5) + [2, 2])


def _t_n_4(n: int) -> Graph:
    return spider([1] * (n - 4) + [3])


@lru_cache(maxsize=None)
def t_n_3(n: int) -> Graph:
    """Spider with n-5 legs of length 1 and two of length 2."""
    _need(n >= 7, f"T_n^3 needs n >= 7, got {n}")
    _check_tree_order(n)
    return _t_n_3(n)


@lru_cache(maxsize=None)
def t_n_4(n: int) -> Graph:
    """Spider with n-4 legs of length 1 and one of length 3."""
    _need(n >= 7, f"T_n^4 needs n >= 7, got {n}")
    _check_tree_order(n)
    return _t_n_4(n)


def g_mn(m: int, n: int) -> Graph:
    """m-n+1 triangles on the common edge 01, apexes 2.., then 2n-m-3 pendants at 0."""
    _need(n >= 4 and n <= m <= 2 * n - 3, f"G_(m,n) needs n >= 4 and n <= m <= 2n-3, got m={m}, n={n}")
    t = m - n + 1
    p = 2 * n - m - 3
    edges = [(0, 1)]
    for i in range(t):
        edges += [(0, 2 + i), (1, 2 + i)]
    edges += [(0, 2 + t + i) for i in range(p)]
    G = Graph(2 + t + p, edges)
    assert G.n == n and G.m == m
    return G


@lru_cache(maxsize=None)
def h_n(t: int) -> Graph:
    """Ring of t triangles {3i, 3i+1, 3i+2}; vertex 3i+2 joined to 3(i+1)+1 (mod 3t)."""
    _need(t >= 2, f"H_n needs t >= 2 triangles, got {t}")
    n = 3 * t
    edges = []
    for i in range(t):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        edges += [(a, b), (a, c), (b, c), (c, (3 * (i + 1) + 1) % n)]
    G = Graph(n, edges)
    mu1 = _mu1(G)
    if abs(mu1 - 5.0) > MU_TOL:
        raise FamilyModelError(f"H_n self-check: mu_1 = {mu1}, expected 5 (t={t})")
    return G


def u_n_2(n: int) -> Graph:
    """Triangle 012 with the pendant path 0-3-4-...-(n-1)."""
    _need(n >= 4, f"U_n^2 needs n >= 4, got {n}")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    G = Graph(n, edges)
    assert G.m == n
    return G


def b_n_1(n: int) -> Graph:
    """Path 0..L (L = n-5) with triangles {0, L+1, L+2} and {L, L+3, L+4}."""
    _need(n >= 6, f"B_n^1 needs n >= 6, got {n}")
    L = n - 5
    edges = [(i, i + 1) for i in range(L)]
    edges += [(0, L + 1), (0, L + 2), (L + 1, L + 2)]
    edges += [(L, L + 3), (L, L + 4), (L + 3, L + 4)]
    G = Graph(n, edges)
    assert G.m == n + 1
    return G


def b_n_star(n: int) -> Graph:
    """K_{1,n-1} (centre 0) plus the edges 12 and 34."""
    _need(n >= 5, f"B_n^* needs n >= 5, got {n}")
    G = Graph(n, [(0, i) for i in range(1, n)] + [(1, 2), (3, 4)])
    assert G.m == n + 1
    return G


def complete_split(k: int, n: int) -> Graph:
    """K_k joined with (n-k)K_1; clique on 0..k-1."""
    _need(1 <= k <= n, f"complete split graph needs 1 <= k <= n, got k={k}, n={n}")
    return join(complete(k), Graph(n - k))


def threshold_from_sequence(bits: str) -> Graph:
    """Vertex i is added isolated ('0') or dominating ('1'); the first bit is ignored."""
    _need(len(bits) >= 1, "threshold sequence must be nonempty")
    _need(set(bits) <= {"0", "1"}, f"threshold sequence must be a 0/1 string, got {bits!r}")
    edges = [(j, i) for i in range(1, len(bits)) if bits[i] == "1" for j in range(i)]
    return Graph(len(bits), edges)


def empty(n: int) -> Graph:
    return Graph(n)


def union(*graphs: Graph) -> Graph:
    out = graphs[0]
    for G in graphs[1:]:
        out = disjoint_union(out, G)
    return out


# ---------------------------------------------------------------------------
# textual family descriptors


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple

    def build(self) -> Graph:
        ctor, arity = FAMILIES[self.name]
        if arity == "bits":
            return ctor(self.params[0])
        if arity == "list":
            return ctor(list(self.params))
        return ctor(*self.params)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(str(p) for p in self.params)}"


FAMILIES = {
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "empty": (empty, 1),
    "doublestar": (double_star, 2),
    "balanced": (balanced_double_star, 1),
    "tn3": (t_n_3, 1),
    "tn4": (t_n_4, 1),
    "gmn": (g_mn, 2),
    "hn": (h_n, 1),
    "un2": (u_n_2, 1),
    "bn1": (b_n_1, 1),
    "bnstar": (b_n_star, 1),
    "csplit": (complete_split, 2),
    "threshold": (threshold_from_sequence, "bits"),
    "multipartite": (complete_multipartite, "list"),
}

ALIASES = {"kn": "complete", "pn": "path", "cn": "cycle", "k1n": "star"}

_SPEC = re.compile(r"^([a-z0-9]+):(.*)$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``name:p1,p2`` (e.g. ``star:12``, ``gmn:13,10``, ``threshold:01011``)."""
    match = _SPEC.match(text.strip().lower())
    if not match:
        raise ValueError(f"not a family descriptor: {text!r} (expected name:params)")
    name, raw = match.groups()
    name = ALIASES.get(name, name)
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    arity = FAMILIES[name][1]
    if arity == "bits":
        return FamilySpec(name, (raw,))
    try:
        params = tuple(int(p) for p in raw.split(",")) if raw else ()
    except ValueError:
        raise ValueError(f"family {name!r} takes integer parameters, got {raw!r}") from None
    if arity != "list" and len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return FamilySpec(name, params)


def build_family(text: str) -> Graph:
    return parse_family(text).build()
