"""Machine-checkable versions of the bounds and extremal statements.

Every check returns :class:`TheoremReport` objects oriented so that
``margin >= 0`` means the statement holds. Statements are implemented as
printed; diagnostics that expose gaps go into ``details``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import families as fam
from .config import TOL, Tolerances
from .graph import (
    Graph,
    complement,
    first_zagreb,
    has_odd_cycle,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_connected,
    is_regular,
    is_subgraph_edges,
    is_threshold,
    is_triangle_free,
    max_degree,
)
from .iso import isomorphism
from .spectra import LIMetrics, laplacian_spectrum, li_metrics

# relation codes: le (lhs <= rhs), lt (lhs < rhs), eq, ne, implies (lhs < rhs => property)
RELATIONS = ("le", "lt", "eq", "ne", "implies")
SUBSET_SEARCH_CAP = 200_000


@dataclass
class TheoremReport:
    theorem_id: str
    graph6: str
    applicable: bool
    lhs: float | None = None
    rhs: float | None = None
    margin: float | None = None
    holds: bool | None = None
    equality_predicted: bool | None = None
    equality_observed: bool = False
    boundary: bool = False
    relation: str = "le"
    details: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        return bool(self.applicable and self.holds is False)

    @property
    def equality_mismatch(self) -> bool:
        """Observed equality and the stated equality characterization disagree."""
        if not self.applicable or self.equality_predicted is None or self.relation not in ("le", "lt"):
            return False
        return self.equality_observed != self.equality_predicted

    def to_dict(self) -> dict:
        d = asdict(self)
        d["violation"] = self.violation
        d["equality_mismatch"] = self.equality_mismatch
        return d


@lru_cache(maxsize=4096)
def _g6(G: Graph) -> str:
    return G.to_graph6()


def make_report(tid: str, G: Graph | None, applicable: bool, lhs=None, rhs=None,
                relation: str = "le", tol: Tolerances = TOL, equality_predicted=None,
                holds_override: bool | None = None, **details) -> TheoremReport:
    g6 = _g6(G) if G is not None else ""
    if not applicable:
        return TheoremReport(tid, g6, False, _f(lhs), _f(rhs), None, None, None, False, False,
                             relation, details)
    lhs, rhs = float(lhs), float(rhs)
    margin = rhs - lhs
    near = abs(margin) < tol.eq
    if relation in ("le", "lt"):
        holds = margin > -tol.strict
    elif relation == "eq":
        holds = near
    elif relation == "ne":
        holds = not near
    else:
        holds = bool(holds_override)
    if holds_override is not None:
        holds = bool(holds_override)
    observed = bool(holds and near) if relation in ("le", "lt", "eq") else False
    boundary = bool(near and relation in ("lt", "ne", "implies"))
    return TheoremReport(tid, g6, True, lhs, rhs, margin, bool(holds), equality_predicted,
                         observed, boundary, relation, details)


def _f(x):
    return None if x is None else float(x)


def _lm(G: Graph, lm: LIMetrics | None) -> LIMetrics:
    return lm if lm is not None else li_metrics(G)


def _avg(G: Graph) -> float:
    return 2.0 * G.m / G.n


# ---------------------------------------------------------------------------
# sigma_1, sigma_n and F_2 properties


def check_thm31(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    """Four sub-reports; each asserts an exact value of sigma_1 under its hypothesis."""
    n, m = G.n, G.m
    if m < 1:
        return [make_report(f"thm3.1({p})", G, False, reason="m < 1") for p in ("i", "ii", "iii", "iv")]
    lm = _lm(G, lm)
    a = _avg(G)
    s1 = float(lm.sigma[0])
    mu1 = lm.spectrum.mu1
    return [
        make_report("thm3.1(i)", G, 4 * m >= n * n, s1, a, "eq", tol),
        make_report("thm3.1(ii)", G, n * max_degree(G) >= 4 * m - n, s1, mu1 - a, "eq", tol),
        make_report("thm3.1(iii)", G, is_connected(G) and is_regular(G), s1, a, "eq", tol),
        make_report("thm3.1(iv)", G, is_bipartite(G), s1, mu1 - a, "eq", tol),
    ]


def check_cor31(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """mu_1 < 4m/n implies an odd cycle."""
    lm = _lm(G, lm)
    mu1, bound = lm.spectrum.mu1, 4.0 * G.m / G.n
    applicable = mu1 < bound - tol.strict
    return make_report("cor3.1", G, applicable, mu1, bound, "implies", tol,
                       holds_override=has_odd_cycle(G))


def check_thm32(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """mu_1 + mu_2 > 4m/n + 1 for connected G on n >= 3 vertices."""
    applicable = G.n >= 3 and is_connected(G)
    if not applicable:
        return make_report("thm3.2", G, False)
    lm = _lm(G, lm)
    return make_report("thm3.2", G, True, 4.0 * G.m / G.n + 1.0, lm.S(2), "lt", tol)


def check_cor32(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """If sigma_{n-1} > sigma_n then sigma_n != mu_1 - 2m/n."""
    if not (G.n >= 3 and is_connected(G)):
        return make_report("cor3.2", G, False)
    lm = _lm(G, lm)
    sig = lm.sigma
    applicable = float(sig[-2] - sig[-1]) > tol.eq
    return make_report("cor3.2", G, applicable, float(sig[-1]), lm.spectrum.mu1 - _avg(G), "ne", tol)


def thm33_bound(G: Graph, u: int, v: int) -> float:
    du, dv, a = G.degree(u), G.degree(v), _avg(G)
    s = du + dv
    r = math.sqrt(s * s + 4.0)
    return abs((s + r) / 2 - a) + abs((s - r) / 2 - a)


def edge_submatrix_sv_sum(G: Graph, u: int, v: int) -> float:
    """Singular-value sum of the 2x2 principal submatrix of LI on {u, v}."""
    du, dv, a = G.degree(u), G.degree(v), _avg(G)
    mid = (du + dv) / 2 - a
    rad = math.sqrt(((du - dv) / 2) ** 2 + 1.0)
    return abs(mid + rad) + abs(mid - rad)


def _need_edge(G: Graph, edge) -> tuple[int, int]:
    u, v = edge
    if not G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return u, v


def check_thm33(G: Graph, edge, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """F_2 >= |(s+r)/2 - 2m/n| + |(s-r)/2 - 2m/n| with s = d_u + d_v, r = sqrt(s^2 + 4)."""
    u, v = _need_edge(G, edge)
    lm = _lm(G, lm)
    return make_report("thm3.3", G, True, thm33_bound(G, u, v), lm.F(2), "le", tol,
                       edge=[u, v], submatrix_sv_sum=edge_submatrix_sv_sum(G, u, v))


def check_thm33_best(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """Theorem 3.3 at the edge with the largest bound (smallest margin)."""
    if G.m < 1 or G.n < 2:
        return make_report("thm3.3", G, False, reason="m < 1")
    best = max(G.edges, key=lambda e: (thm33_bound(G, *e), -e[0], -e[1]))
    return check_thm33(G, best, lm, tol)


def check_thm33_submatrix(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """The interlacing step itself: F_2 >= singular-value sum of the 2x2 edge block, worst edge."""
    if G.m < 1 or G.n < 2:
        return make_report("thm3.3/submatrix", G, False, reason="m < 1")
    best = max(G.edges, key=lambda e: (edge_submatrix_sv_sum(G, *e), -e[0], -e[1]))
    lm = _lm(G, lm)
    return make_report("thm3.3/submatrix", G, True, edge_submatrix_sv_sum(G, *best), lm.F(2), "le", tol,
                       edge=list(best))


def thm34_terms(G: Graph, u: int, v: int) -> tuple[float, float]:
    du, dv, a = G.degree(u), G.degree(v), _avg(G)
    x, y = (du - a) ** 2 + du, (dv - a) ** 2 + dv
    upsilon = (du - a) ** 2 + (dv - a) ** 2 + du + dv
    psi = x * y - (du + dv - 2 * a) ** 2
    return upsilon, psi


def check_thm34(G: Graph, edge, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """F_2 >= sqrt(Upsilon + 2 sqrt(Psi)) for triangle-free G."""
    u, v = _need_edge(G, edge)
    if not is_triangle_free(G):
        return make_report("thm3.4", G, False, edge=[u, v], reason="graph has a triangle")
    upsilon, psi = thm34_terms(G, u, v)
    if psi < 0 or upsilon + 2 * math.sqrt(psi) < 0:
        return make_report("thm3.4", G, False, edge=[u, v], upsilon=upsilon, psi=psi,
                           reason="Psi < 0")
    lm = _lm(G, lm)
    return make_report("thm3.4", G, True, math.sqrt(upsilon + 2 * math.sqrt(psi)), lm.F(2), "le",
                       tol, edge=[u, v], upsilon=upsilon, psi=psi)


def check_thm34_best(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    if G.m < 1:
        return make_report("thm3.4", G, False, reason="m < 1")
    if not is_triangle_free(G):
        return make_report("thm3.4", G, False, reason="graph has a triangle")
    lm = _lm(G, lm)
    reports = [check_thm34(G, e, lm, tol) for e in G.edges]
    live = [r for r in reports if r.applicable]
    if not live:
        return reports[0]
    return min(live, key=lambda r: r.margin)


# ---------------------------------------------------------------------------
# Ky Fan k-norm bounds


def _kyfan_identity(tid: str, G: Graph, lm: LIMetrics, k: int, applicable: bool,
                    tol: Tolerances, **details) -> TheoremReport:
    # conclusion F_k = S_k - 2km/n; the mu-indexed reading goes in details
    if not applicable:
        return make_report(tid, G, False, k=k, **details)
    target = lm.S(k) - k * _avg(G)
    indexed = lm.indexed_F(k)
    return make_report(tid, G, True, target, lm.F(k), "eq", tol, k=k,
                       indexed_F=indexed, indexed_holds=abs(indexed - target) < tol.eq, **details)


def thm41_witness(G: Graph, k: int) -> tuple[int, ...] | None:
    """A k-set of vertices of degree >= 4m/n inducing at most one edge."""
    big = [v for v in range(G.n) if G.n * G.degree(v) >= 4 * G.m]
    if len(big) < k:
        return None
    for tried, combo in enumerate(combinations(big, k)):
        if tried >= SUBSET_SEARCH_CAP:
            return None
        edges = 0
        for i, x in enumerate(combo):
            for y in combo[i + 1:]:
                if G.has_edge(x, y):
                    edges += 1
                    if edges > 1:
                        break
            if edges > 1:
                break
        if edges <= 1:
            return combo
    return None


def check_thm41(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.1/k={k}"
    if not (G.n >= 3 and is_connected(G) and 1 <= k <= G.n):
        return make_report(tid, G, False, k=k)
    witness = thm41_witness(G, k)
    return _kyfan_identity(tid, G, _lm(G, lm), k, witness is not None, tol,
                           witness=list(witness) if witness else None)


def _degree_rank(H: Graph, k: int) -> int:
    return sorted(H.degrees(), reverse=True)[k - 1]


def check_thm42(G: Graph, H: Graph, k: int, lm: LIMetrics | None = None,
                tol: Tolerances = TOL) -> TheoremReport:
    """H (same vertex labels) must be a threshold subgraph of G."""
    if H.n != G.n or not is_subgraph_edges(H, G):
        raise ValueError("H is not a subgraph of G")
    if not is_threshold(H):
        raise ValueError("H is not a threshold graph")
    tid = f"thm4.2/k={k}"
    if not 1 <= k <= G.n:
        return make_report(tid, G, False, k=k)
    dk = _degree_rank(H, k)
    applicable = G.n * (dk + 1) >= 4 * G.m
    return _kyfan_identity(tid, G, _lm(G, lm), k, applicable, tol, d_k_H=dk, H_edges=[list(e) for e in H.edges])


def greedy_threshold_subgraph(G: Graph, k: int) -> Graph:
    """Best-effort nested split subgraph: a greedy clique x_1..x_k by degree, then
    every other vertex joined to the longest prefix x_1..x_j it sees in G."""
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    clique: list[int] = []
    for v in order:
        if len(clique) == k:
            break
        if all(G.has_edge(v, c) for c in clique):
            clique.append(v)
    edges = [(x, y) for i, x in enumerate(clique) for y in clique[i + 1:]]
    members = set(clique)
    for w in range(G.n):
        if w in members:
            continue
        for c in clique:
            if not G.has_edge(w, c):
                break
            edges.append((c, w))
    return Graph(G.n, edges)


def check_thm42_auto(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    r = check_thm42(G, greedy_threshold_subgraph(G, k), k, lm, tol)
    r.details["certificate"] = "greedy"
    return r


def check_thm43(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.3/k={k}"
    if not 1 <= k <= G.n:
        return make_report(tid, G, False, k=k)
    lm = _lm(G, lm)
    a = _avg(G)
    comp = laplacian_spectrum(complement(G), check=False)
    rhs = float(np.sum(comp.mu[:k])) + a + (k - 1) * (G.n - a)
    return make_report(tid, G, True, lm.F(k), rhs, "le", tol, equality_predicted=is_complete(G) or None, k=k)


def _dense(G: Graph) -> bool:
    return 4 * G.m >= G.n * G.n


def thm44_join_witness(G: Graph, tol: Tolerances = TOL) -> int | None:
    """A vertex w with G = G[N(w)] v (w + G[rest]) and the size/connectivity conditions."""
    n, a = G.n, _avg(G)
    size = n - a - 1
    if abs(size - round(size)) > tol.eq:
        return None
    size = int(round(size))
    full = (1 << n) - 1
    for w in range(n):
        A = G.adj[w]
        B = full & ~A & ~(1 << w)
        if B.bit_count() != size:
            continue
        if any((G.adj[x] | (1 << x)) & (B | (1 << w)) != (B | (1 << w)) for x in _members(A)):
            continue
        GA = induced_subgraph(G, _members(A))
        conn = laplacian_spectrum(GA, check=False).algebraic_connectivity if GA.n >= 2 else 0.0
        if conn >= 4.0 * G.m / n - n - tol.strict:
            return w
    return None


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def check_thm44(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.4/k={k}"
    applicable = G.m >= 1 and not is_complete(G) and _dense(G) and 2 <= k <= G.n
    if not applicable:
        return make_report(tid, G, False, k=k)
    lm = _lm(G, lm)
    a = _avg(G)
    sig = lm.sigma
    target = lm.spectrum.mu1 - a
    pattern = bool(np.all(np.abs(sig[1:k] - target) < tol.eq))
    witness = thm44_join_witness(G, tol)
    return make_report(tid, G, True, lm.F(k), a + (k - 1) * lm.spr, "le", tol,
                       equality_predicted=pattern and witness is not None, k=k,
                       join_vertex=witness, sigma_pattern=pattern)


def check_thm45(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.5/k={k}"
    if not (_dense(G) and 2 <= k <= G.n and G.m >= 1):
        return make_report(tid, G, False, k=k)
    lm = _lm(G, lm)
    n, m = G.n, G.m
    rad = (k - 1) * (2 * m + first_zagreb(G) - 4 * m * m / n - 4 * m * m / (n * n))
    rhs = 2 * m / n + math.sqrt(max(rad, 0.0))
    sig = lm.sigma
    pattern = bool(np.all(np.abs(sig[1:k] - sig[1]) < tol.eq) and np.all(np.abs(sig[k:]) < tol.eq))
    return make_report(tid, G, True, lm.F(k), rhs, "le", tol, equality_predicted=pattern, k=k)


def complete_split_clique(G: Graph) -> int | None:
    """k when G = K_k v (n-k)K_1 (K_n reported as k = n-1)."""
    n = G.n
    if n < 2:
        return None
    if is_complete(G):
        return n - 1
    dom = [v for v in range(n) if G.degree(v) == n - 1]
    k = len(dom)
    if k == 0:
        return None
    rest = [v for v in range(n) if G.degree(v) != n - 1]
    if all(G.degree(v) == k for v in rest):
        return k
    return None


def thm46_split_bound(n: int) -> int:
    return math.floor((2 * n - 1 - math.sqrt(2 * n * n - 2 * n + 1)) / 2)


def check_thm46(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.6/k={k}"
    degs = sorted(G.degrees(), reverse=True)
    applicable = G.m > 1 and G.n >= 2 and 1 <= k <= G.n and G.n * degs[1] >= 4 * G.m
    if not applicable:
        return make_report(tid, G, False, k=k)
    lm = _lm(G, lm)
    rhs = k * G.n - 2.0 * k * G.m / G.n
    cs = complete_split_clique(G)
    predicted = (cs == k and k <= thm46_split_bound(G.n)) or None
    return make_report(tid, G, True, lm.F(k), rhs, "le", tol, equality_predicted=predicted, k=k)


def thm47_bound(G: Graph, k: int, alpha: float) -> float:
    n, m = G.n, G.m
    a = 2.0 * m / n
    return a + abs(alpha - a) + (k - 2) * abs((2 * m - alpha) / (n - 2) - a)


def check_thm47(G: Graph, k: int, alpha: float, lm: LIMetrics | None = None,
                tol: Tolerances = TOL) -> TheoremReport:
    tid = f"thm4.7/k={k}"
    if not (_dense(G) and 2 <= k <= G.n and G.n >= 3 and G.m >= 1):
        return make_report(tid, G, False, k=k, alpha=alpha)
    lm = _lm(G, lm)
    lo, hi = 2.0 * G.m / (G.n - 1), lm.spectrum.mu1
    if not (lo - tol.strict <= alpha <= hi + tol.strict):
        return make_report(tid, G, False, k=k, alpha=alpha, reason="alpha outside [2m/(n-1), mu_1]")
    return make_report(tid, G, True, thm47_bound(G, k, alpha), lm.F(k), "le", tol, k=k, alpha=alpha)


def check_thm47_sweep(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    """Thm 4.7 at alpha in {2m/(n-1), Delta+1, mu_1}; the smallest margin is returned."""
    if G.n < 3:
        return make_report(f"thm4.7/k={k}", G, False, k=k)
    lm = _lm(G, lm)
    alphas = [2.0 * G.m / (G.n - 1), float(max_degree(G) + 1), lm.spectrum.mu1]
    reports = [check_thm47(G, k, al, lm, tol) for al in alphas]
    live = [r for r in reports if r.applicable]
    if not live:
        return reports[0]
    worst = min(live, key=lambda r: r.margin)
    worst.details["margins_by_alpha"] = {f"{r.details['alpha']:.12g}": r.margin for r in live}
    return worst


def cor41_bound(G: Graph, k: int) -> float:
    n, m, D = G.n, G.m, max_degree(G)
    return D + 1 + (k - 2) * abs((2 * m - D - 1) / (n - 2) - 2.0 * m / n)


def check_cor41(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> TheoremReport:
    tid = f"cor4.1/k={k}"
    if not (_dense(G) and 2 <= k <= G.n and G.n >= 3 and G.m >= 1):
        return make_report(tid, G, False, k=k)
    lm = _lm(G, lm)
    return make_report(tid, G, True, cor41_bound(G, k), lm.F(k), "le", tol, k=k)


# ---------------------------------------------------------------------------
# extremal statements over trees, unicyclic and bicyclic graphs


def _named(name: str, n: int) -> Graph:
    return {
        "path": lambda: fam.path(n),
        "cycle": lambda: fam.cycle(n),
        "star": lambda: fam.star(n),
        "s1": lambda: fam.double_star(1, n - 3),
        "s2": lambda: fam.double_star(2, n - 4),
        "s3": lambda: fam.double_star(3, n - 5),
        "tn3": lambda: fam.t_n_3(n),
        "tn4": lambda: fam.t_n_4(n),
        "balanced": lambda: fam.balanced_double_star(n),
        "gnn": lambda: fam.g_mn(n, n),
        "gn1n": lambda: fam.g_mn(n + 1, n),
        "bn1": lambda: fam.b_n_1(n),
        "bnstar": lambda: fam.b_n_star(n),
        "un2": lambda: fam.u_n_2(n),
    }[name]()


@lru_cache(maxsize=None)
def named_graph(name: str, n: int) -> Graph:
    return _named(name, n)


@lru_cache(maxsize=None)
def named_metrics(name: str, n: int) -> LIMetrics:
    return li_metrics(named_graph(name, n))


def is_named(G: Graph, name: str) -> bool:
    H = named_graph(name, G.n)
    return isomorphism(G, H, max_n=max(G.n, 1)) is not None


def _value(lm: LIMetrics, metric: str) -> float:
    if metric == "sigma1":
        return float(lm.sigma[0])
    if metric.startswith("F"):
        return lm.F(int(metric[1:]))
    raise ValueError(metric)


def _class_ok(G: Graph, c: int) -> bool:
    return is_connected(G) and G.m == G.n - 1 + c


def _sandwich(tid: str, G: Graph, lm: LIMetrics, metric: str, low: float | None, high: float,
              relation: str, tol: Tolerances, low_pred: bool | None, high_pred: bool | None,
              **details) -> list[TheoremReport]:
    x = _value(lm, metric)
    out = []
    if low is not None:
        out.append(make_report(f"{tid}/lower", G, True, low, x, relation, tol,
                               equality_predicted=low_pred, metric=metric, **details))
    out.append(make_report(f"{tid}/upper", G, True, x, high, relation, tol,
                           equality_predicted=high_pred, metric=metric, **details))
    return out


def _na(tid: str, G: Graph, parts=("lower", "upper"), **details) -> list[TheoremReport]:
    return [make_report(f"{tid}/{p}", G, False, **details) for p in parts]


def check_thm51(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    """sigma_1(P_n) < sigma_1(T) < sigma_1(S_{3,n-5}) for trees outside the named set."""
    n = G.n
    if n < 7 or not _class_ok(G, 0):
        return _na("thm5.1", G)
    excluded = [nm for nm in ("star", "s1", "s2", "tn3", "tn4", "s3", "path") if is_named(G, nm)]
    if excluded:
        return _na("thm5.1", G, excluded=excluded)
    lm = _lm(G, lm)
    return _sandwich("thm5.1", G, lm, "sigma1", _value(named_metrics("path", n), "sigma1"),
                     _value(named_metrics("s3", n), "sigma1"), "lt", tol, None, None)


def check_thm52(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    """F_2(P_n) < F_2(T) < F_2(balanced double star) for trees outside the named set, n >= 12."""
    n = G.n
    if n < 12 or not _class_ok(G, 0):
        return _na("thm5.2", G)
    excluded = [nm for nm in ("star", "s1", "balanced", "path") if is_named(G, nm)]
    if excluded:
        return _na("thm5.2", G, excluded=excluded)
    lm = _lm(G, lm)
    return _sandwich("thm5.2", G, lm, "F2", named_metrics("path", n).F(2),
                     named_metrics("balanced", n).F(2), "lt", tol, None, None)


def check_thm53(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 5 or not _class_ok(G, 0):
        return _na("thm5.3", G, ("upper",))
    lm = _lm(G, lm)
    return _sandwich("thm5.3", G, lm, "F3", None, n + 1 - 2 / n, "le", tol, None, is_named(G, "star"))


def check_thm54(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 5 or not _class_ok(G, 1):
        return _na("thm5.4", G)
    lm = _lm(G, lm)
    return _sandwich("thm5.4", G, lm, "sigma1", _value(named_metrics("cycle", n), "sigma1"), n - 2,
                     "le", tol, is_named(G, "cycle"), is_named(G, "gnn"))


def check_thm55(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 12 or not _class_ok(G, 1):
        return _na("thm5.5", G)
    lm = _lm(G, lm)
    return _sandwich("thm5.5", G, lm, "F2", named_metrics("cycle", n).F(2), n, "le", tol,
                     is_named(G, "cycle"), is_named(G, "gnn"))


def check_thm56(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 12 or not _class_ok(G, 1):
        return _na("thm5.6", G, ("upper",))
    lm = _lm(G, lm)
    return _sandwich("thm5.6", G, lm, "F3", None, n + 1, "le", tol, None, is_named(G, "gnn"))


def check_thm57(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 17 or not _class_ok(G, 2):
        return _na("thm5.7", G)
    lm = _lm(G, lm)
    return _sandwich("thm5.7", G, lm, "sigma1", _value(named_metrics("bn1", n), "sigma1"),
                     _value(named_metrics("bnstar", n), "sigma1"), "le", tol,
                     is_named(G, "bn1"), is_named(G, "bnstar"))


def check_thm58(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 5 or not _class_ok(G, 2):
        return _na("thm5.8", G, ("upper",))
    lm = _lm(G, lm)
    return _sandwich("thm5.8", G, lm, "F2", None, named_metrics("gn1n", n).F(2), "le", tol,
                     None, is_named(G, "gn1n"))


def check_thm59(G: Graph, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    n = G.n
    if n < 5 or not _class_ok(G, 2):
        return _na("thm5.9", G, ("upper",))
    lm = _lm(G, lm)
    return _sandwich("thm5.9", G, lm, "F3", None, n + 2 - 2 / n, "le", tol, None, is_named(G, "gn1n"))


def check_conj51(G: Graph, k: int, lm: LIMetrics | None = None, tol: Tolerances = TOL) -> list[TheoremReport]:
    """F_k(P_n) <= F_k(T) <= F_k(K_{1,n-1}), equality only at the ends."""
    n = G.n
    tid = f"conj5.1/k={k}"
    if not (1 <= k <= n and n >= 2 and _class_ok(G, 0)):
        return _na(tid, G)
    lm = _lm(G, lm)
    return _sandwich(tid, G, lm, f"F{k}", named_metrics("path", n).F(k), named_metrics("star", n).F(k),
                     "le", tol, is_named(G, "path"), is_named(G, "star"))


# ---------------------------------------------------------------------------
# named-family chains and values


def _chain(tid: str, names: list[str], n: int, metric: str, tol: Tolerances) -> list[TheoremReport]:
    vals = [_value(named_metrics(nm, n), metric) for nm in names]
    return [
        make_report(f"{tid}/{names[i]}<{names[i + 1]}", named_graph(names[i + 1], n), True,
                    vals[i], vals[i + 1], "lt", tol, metric=metric, n=n)
        for i in range(len(names) - 1)
    ]


def _named_value(tid: str, name: str, n: int, metric: str, expected: float, tol: Tolerances) -> TheoremReport:
    return make_report(tid, named_graph(name, n), True, expected, _value(named_metrics(name, n), metric),
                       "eq", tol, metric=metric, n=n)


def check_family_orderings(n: int, k: int = 3, tol: Tolerances = TOL) -> list[TheoremReport]:
    """Inequality chains and closed-form values on the named families at order n."""
    out: list[TheoremReport] = []
    if n >= 7:
        out += _chain("fam5.1", ["path", "s3", "tn4", "tn3", "s2", "s1", "star"], n, "sigma1", tol)
    if n >= 12:
        out += _chain("fam5.2", ["path", "balanced", "s1", "star"], n, "F2", tol)
    if n >= 5:
        out.append(_named_value("fam5.3/star", "star", n, "F3", n + 1 - 2 / n, tol))
        sp = named_metrics("star", n).spr
        out.append(make_report("fam5.3/spr_star", named_graph("star", n), True, n - 1, sp, "eq", tol, n=n))
        out.append(_named_value("fam5.4/gnn", "gnn", n, "sigma1", n - 2, tol))
        out.append(_named_value("fam5.4/cycle", "cycle", n, "sigma1", 2.0, tol))
        out.append(_named_value("fam5.9/gn1n", "gn1n", n, "F3", n + 2 - 2 / n, tol))
    if n >= 12:
        out.append(_named_value("fam5.5/gnn", "gnn", n, "F2", n, tol))
        out.append(_named_value("fam5.6/gnn", "gnn", n, "F3", n + 1, tol))
    if n >= 17:
        out += _chain("fam5.7", ["bn1", "bnstar"], n, "sigma1", tol)
    if 1 <= k <= n and n >= 2:
        out.append(make_report(f"famconj5.1/k={k}", named_graph("star", n), True,
                               named_metrics("path", n).F(k), named_metrics("star", n).F(k), "le", tol, n=n))
    return out


# ---------------------------------------------------------------------------
# registry used by the harness


def _per_k(fn):
    def run(G, lm, ks, tol):
        return [fn(G, k, lm, tol) for k in ks if 1 <= k <= G.n]
    return run


def _single(fn):
    def run(G, lm, ks, tol):
        r = fn(G, lm, tol)
        return r if isinstance(r, list) else [r]
    return run


def _conj(G, lm, ks, tol):
    out = []
    for k in ks:
        if 1 <= k <= G.n:
            out += check_conj51(G, k, lm, tol)
    return out


THEOREMS = {
    "thm3.1": _single(check_thm31),
    "cor3.1": _single(check_cor31),
    "thm3.2": _single(check_thm32),
    "cor3.2": _single(check_cor32),
    "thm3.3": _single(lambda G, lm, tol: [check_thm33_best(G, lm, tol), check_thm33_submatrix(G, lm, tol)]),
    "thm3.4": _single(check_thm34_best),
    "thm4.1": _per_k(check_thm41),
    "thm4.2": _per_k(check_thm42_auto),
    "thm4.3": _per_k(check_thm43),
    "thm4.4": _per_k(check_thm44),
    "thm4.5": _per_k(check_thm45),
    "thm4.6": _per_k(check_thm46),
    "thm4.7": _per_k(check_thm47_sweep),
    "cor4.1": _per_k(check_cor41),
    "thm5.1": _single(check_thm51),
    "thm5.2": _single(check_thm52),
    "thm5.3": _single(check_thm53),
    "thm5.4": _single(check_thm54),
    "thm5.5": _single(check_thm55),
    "thm5.6": _single(check_thm56),
    "thm5.7": _single(check_thm57),
    "thm5.8": _single(check_thm58),
    "thm5.9": _single(check_thm59),
    "conj5.1": _conj,
}

K_DEPENDENT = {"thm4.1", "thm4.2", "thm4.3", "thm4.4", "thm4.5", "thm4.6", "thm4.7", "cor4.1", "conj5.1"}


def resolve_theorems(selector: str) -> list[str]:
    """``all``, a comma list, or prefixes such as ``thm5`` / ``thm4.1``."""
    out = []
    for part in (p.strip() for p in selector.split(",")):
        if not part:
            continue
        if part == "all":
            out += [t for t in THEOREMS if t != "conj5.1"]
            continue
        hits = [t for t in THEOREMS if t == part or t.startswith(part + ".") or
                (part[-1].isdigit() and "." not in part and t.startswith(part))]
        if not hits:
            raise ValueError(f"unknown theorem id {part!r}; known: {', '.join(THEOREMS)}")
        out += hits
    return list(dict.fromkeys(out))


def run_checks(G: Graph, theorem_ids: list[str], ks, tol: Tolerances = TOL) -> list[TheoremReport]:
    lm = li_metrics(G) if G.n >= 1 else None
    out = []
    for tid in theorem_ids:
        out += THEOREMS[tid](G, lm, ks, tol)
    return out
