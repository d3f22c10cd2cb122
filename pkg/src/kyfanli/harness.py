"""Sweeps over enumerated or sampled graphs: verification, extremal scans,
conjecture searches and sigma_n trends.

Work is cut into fixed units (graph6 chunks, sample chunks, family orders)
that do not depend on the worker count; partial aggregates merge with
order-independent rules, so results are identical for any ``workers``.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Iterator

import numpy as np

from . import __version__
from . import families as fam
from ._backend import BACKEND
from .config import RunConfig, Tolerances
from .enumerate import (
    CLASSES,
    EnumSpec,
    EnumerationError,
    sample_chunk,
    sample_plan,
    tree_has_perfect_matching,
)
from .graph import Graph, is_bipartite, is_regular
from .graph6 import decode
from .iso import isomorphism
from .spectra import LIMetrics, li_metrics
from .theorems import (
    K_DEPENDENT,
    TheoremReport,
    check_family_orderings,
    named_graph,
    run_checks,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INCOMPLETE = 3

UNIT_SIZE = 250
NO_COUNTEREXAMPLE = "no counterexample found at tested scales"
CSV_COLUMNS = ("graph6", "theorem_id", "margin", "holds", "boundary")


class HarnessError(ValueError):
    """Bad sweep request (unknown class, infeasible n, bad metric)."""


# ---------------------------------------------------------------------------
# aggregation


def _new_counts() -> dict:
    return {"checked": 0, "applicable": 0, "holds": 0, "violations": 0, "boundary": 0,
            "equality_observed": 0, "equality_mismatch": 0, "min_margin": None,
            "min_margin_graph6": None}


@dataclass
class Aggregate:
    graphs: int = 0
    counts: dict = field(default_factory=dict)
    notable: dict = field(default_factory=dict)

    def add(self, r: TheoremReport) -> None:
        c = self.counts.setdefault(r.theorem_id, _new_counts())
        c["checked"] += 1
        if not r.applicable:
            return
        c["applicable"] += 1
        c["holds"] += bool(r.holds)
        c["violations"] += r.violation
        c["boundary"] += r.boundary
        c["equality_observed"] += r.equality_observed
        c["equality_mismatch"] += r.equality_mismatch
        if r.margin is not None and (c["min_margin"] is None or
                                     (r.margin, r.graph6) < (c["min_margin"], c["min_margin_graph6"])):
            c["min_margin"], c["min_margin_graph6"] = r.margin, r.graph6
        if r.violation or r.boundary or r.equality_mismatch or _tight(r.relation, r.equality_observed):
            self.notable[(r.theorem_id, r.graph6)] = r.to_dict()

    def merge(self, other: "Aggregate") -> None:
        self.graphs += other.graphs
        for tid, o in other.counts.items():
            c = self.counts.setdefault(tid, _new_counts())
            for key in ("checked", "applicable", "holds", "violations", "boundary",
                        "equality_observed", "equality_mismatch"):
                c[key] += o[key]
            if o["min_margin"] is not None and (c["min_margin"] is None or
                                                (o["min_margin"], o["min_margin_graph6"]) <
                                                (c["min_margin"], c["min_margin_graph6"])):
                c["min_margin"], c["min_margin_graph6"] = o["min_margin"], o["min_margin_graph6"]
        self.notable.update(other.notable)

    def sorted_notable(self) -> list[dict]:
        return [self.notable[key] for key in sorted(self.notable)]

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.sorted_notable() if r["violation"]]

    @property
    def boundary(self) -> list[dict]:
        return [r for r in self.sorted_notable() if r["boundary"]]

    @property
    def equality_mismatches(self) -> list[dict]:
        return [r for r in self.sorted_notable() if r["equality_mismatch"]]

    @property
    def tight(self) -> list[dict]:
        return [r for r in self.sorted_notable() if _tight(r["relation"], r["equality_observed"])]


def _tight(relation: str, observed: bool) -> bool:
    # an inequality met with equality (within eq tolerance)
    return relation in ("le", "lt") and observed


# ---------------------------------------------------------------------------
# work units and the worker pool


def _unit_graphs(unit: tuple) -> Iterator[Graph]:
    kind = unit[0]
    if kind == "g6":
        for s in unit[1]:
            yield decode(s)
    elif kind == "sample":
        _, cls, n, seed, chunk, size = unit
        yield from sample_chunk(cls, n, seed, chunk, size)
    else:
        raise HarnessError(f"unknown work unit {kind!r}")


def _verify_unit(unit: tuple, theorem_ids: list[str], ks: list[int], tol: Tolerances) -> Aggregate:
    agg = Aggregate()
    if unit[0] == "families":
        _, n, k = unit
        for r in check_family_orderings(n, k, tol):
            agg.add(r)
        agg.graphs += 1
        return agg
    for G in _unit_graphs(unit):
        agg.graphs += 1
        for r in run_checks(G, theorem_ids, ks, tol):
            agg.add(r)
    return agg


def run_units(fn: Callable, units: Iterable[tuple], args: tuple, workers: int,
              deadline: float | None = None) -> tuple[list, bool]:
    """Apply ``fn(unit, *args)`` to every unit; results come back in unit order.

    With ``workers > 1`` a process pool is fed through a bounded window.
    Returns ``(results, complete)``; a passed ``deadline`` stops new submissions.
    """
    results: dict[int, object] = {}
    complete = True
    it = enumerate(units)
    if workers <= 1:
        for i, unit in it:
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            results[i] = fn(unit, *args)
        return [results[i] for i in sorted(results)], complete
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {}
        window = 2 * workers
        exhausted = False
        while True:
            while not exhausted and len(pending) < window:
                if deadline is not None and time.monotonic() > deadline:
                    complete = False
                    exhausted = True
                    break
                nxt = next(it, None)
                if nxt is None:
                    exhausted = True
                    break
                i, unit = nxt
                pending[pool.submit(fn, unit, *args)] = i
            if not pending:
                break
            done, _ = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                results[pending.pop(fut)] = fut.result()
    return [results[i] for i in sorted(results)], complete


def _chunks(seq: list, size: int) -> Iterator[list]:
    for i in range(0, len(seq), size):
        yield seq[i:i + size]


@dataclass
class Source:
    """Where graphs come from: exhaustive class, seeded samples, a file, or family orders."""

    cls: str
    ns: list[int]
    m: int | None = None
    samples: int | None = None
    graphs: list[Graph] | None = None
    dedup: str = "exact"
    allow_n8: bool = False

    def units(self, cfg: RunConfig, ks: list[int]) -> tuple[list[tuple], bool, bool]:
        """(units, truncated by max_graphs, exact enumeration)."""
        cap = cfg.max_graphs
        taken, truncated, exact = 0, False, True
        units: list[tuple] = []

        def room() -> int | None:
            return None if cap is None else max(cap - taken, 0)

        if self.cls == "families":
            k = max(ks) if ks else 3
            for n in self.ns:
                if cap is not None and taken >= cap:
                    truncated = True
                    break
                units.append(("families", n, k))
                taken += 1
            return units, truncated, exact
        if self.graphs is not None:
            g6 = [G.to_graph6() for G in self.graphs]
            r = room()
            if r is not None and r < len(g6):
                g6, truncated = g6[:r], True
            return [("g6", c) for c in _chunks(g6, UNIT_SIZE)], truncated, exact
        for n in self.ns:
            r = room()
            if r == 0:
                truncated = True
                break
            if self.samples is not None:
                count = self.samples if r is None else min(self.samples, r)
                truncated |= count < self.samples
                units += [("sample", self.cls, n, cfg.seed, c, size) for c, size in sample_plan(count)]
                taken += count
                exact = False
                continue
            es = enum_spec(self.cls, n, self.m, self.dedup, cfg.iso_cap, self.allow_n8)
            exact &= es.exact
            g6 = [G.to_graph6() for G in es.graphs()]
            if r is not None and r < len(g6):
                g6, truncated = g6[:r], True
            units += [("g6", c) for c in _chunks(g6, UNIT_SIZE)]
            taken += len(g6)
        return units, truncated, exact


def enum_spec(cls: str, n: int, m: int | None, dedup: str, iso_cap: int, allow_n8: bool) -> EnumSpec:
    try:
        return EnumSpec(cls, n, m, dedup, iso_cap, allow_n8)
    except EnumerationError as e:
        raise HarnessError(str(e)) from None


def class_graphs(cls: str, n: int, m: int | None = None, cfg: RunConfig | None = None,
                 allow_n8: bool = False) -> tuple[list[Graph], bool]:
    """All graphs of a class at order n (plus ``pmtrees``: trees with a perfect matching)."""
    cfg = cfg or RunConfig()
    if cls == "pmtrees":
        es = enum_spec("trees", n, None, "exact", cfg.iso_cap, allow_n8)
        try:
            return [G for G in es.graphs() if tree_has_perfect_matching(G)], True
        except EnumerationError as e:
            raise HarnessError(str(e)) from None
    es = enum_spec(cls, n, m, "exact", cfg.iso_cap, allow_n8)
    try:
        return list(es.graphs()), es.exact
    except EnumerationError as e:
        raise HarnessError(str(e)) from None


# ---------------------------------------------------------------------------
# reports


def _header(command: str, cfg: RunConfig, args: dict) -> dict:
    return {
        "tool": "kyfanli",
        "version": __version__,
        "command": command,
        "backend": BACKEND,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": cfg.header(),
        "args": args,
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_jsonable) + "\n"


def _jsonable(x):
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def rows_to_csv(rows: list[dict], columns: Iterable[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in columns})
    return buf.getvalue()


def strip_volatile(report: dict) -> dict:
    """Report without the header (timestamp, worker count); used for equality tests."""
    return {k: v for k, v in report.items() if k != "header"}


# ---------------------------------------------------------------------------
# verify


def verify(theorem_ids: list[str], source: Source, ks: list[int], cfg: RunConfig | None = None) -> dict:
    """Run the given checks on every graph of ``source``; return the report dict.

    ``report["exit_status"]`` follows the CLI contract: 0 all hold, 2 violations,
    3 incomplete (budget hit before the sweep finished).
    """
    cfg = cfg or RunConfig(command="verify")
    tol = cfg.tolerances
    ks = sorted(set(ks))
    start = time.monotonic()
    units, truncated, exact = source.units(cfg, ks)
    deadline = None if cfg.max_seconds is None else start + cfg.max_seconds
    parts, finished = run_units(_verify_unit, units, (theorem_ids, ks, tol), cfg.workers, deadline)
    agg = Aggregate()
    for p in parts:
        agg.merge(p)
    complete = finished and not truncated
    violations = agg.violations
    status = EXIT_VIOLATION if violations else (EXIT_OK if complete else EXIT_INCOMPLETE)
    args = {"theorems": theorem_ids, "class": source.cls, "n": source.ns, "m": source.m,
            "k": ks if any(t in K_DEPENDENT for t in theorem_ids) or source.cls == "families" else [],
            "samples": source.samples, "dedup": source.dedup}
    return {
        "header": _header("verify", cfg, args),
        "complete": complete,
        "exact_enumeration": exact,
        "graphs_checked": agg.graphs,
        "summary": {tid: agg.counts[tid] for tid in sorted(agg.counts)},
        "violations": violations,
        "boundary": agg.boundary,
        "equality_mismatches": agg.equality_mismatches,
        "tight": agg.tight,
        "exit_status": status,
    }


def verify_csv(report: dict) -> str:
    seen, rows = set(), []
    for key in ("violations", "boundary", "equality_mismatches", "tight"):
        for r in report[key]:
            ident = (r["theorem_id"], r["graph6"])
            if ident not in seen:
                seen.add(ident)
                rows.append(r)
    rows.sort(key=lambda r: (r["theorem_id"], r["graph6"]))
    return rows_to_csv(rows, CSV_COLUMNS)


# ---------------------------------------------------------------------------
# metrics by name


def parse_metric(name: str, k: int | None = None) -> tuple[str, int | None]:
    """Normalize ``F2``/``Fk``/``S3``/``sigma1``/``sigma_n``/``LE``/``spr``/``mu1``."""
    raw = name.strip()
    low = raw.lower().replace("σ", "sigma").replace("μ", "mu")
    if low in ("sigma1", "sigma_1"):
        return "sigma1", None
    if low in ("sigman", "sigma_n"):
        return "sigma_n", None
    if low in ("le", "energy"):
        return "LE", None
    if low in ("spr", "spread"):
        return "spr", None
    if low in ("mu1", "mu_1"):
        return "mu1", None
    if low[:1] in ("f", "s") and len(low) > 1:
        rest = low[1:].lstrip("_")
        if rest == "k":
            if k is None:
                raise HarnessError(f"metric {name!r} needs --k")
            return low[0].upper(), k
        if rest.isdigit():
            return low[0].upper(), int(rest)
    if low in ("f", "s"):
        if k is None:
            raise HarnessError(f"metric {name!r} needs --k")
        return low.upper(), k
    raise HarnessError(f"unknown metric {name!r}; use sigma1, sigma_n, F<k>, S<k>, LE, spr, mu1")


def metric_label(metric: str, k: int | None) -> str:
    return f"{metric}{k}" if k is not None else metric


def metric_value(lm: LIMetrics, metric: str, k: int | None) -> float:
    if metric == "sigma1":
        return float(lm.sigma[0])
    if metric == "sigma_n":
        return float(lm.sigma[-1])
    if metric == "LE":
        return lm.LE
    if metric == "spr":
        return lm.spr
    if metric == "mu1":
        return lm.spectrum.mu1
    if metric == "F":
        return lm.F(k)
    if metric == "S":
        return lm.S(k)
    raise HarnessError(f"unknown metric {metric!r}")


def _values_unit(unit: tuple, metric: str, k: int | None) -> list[tuple[str, float]]:
    out = []
    for G in _unit_graphs(unit):
        out.append((G.to_graph6(), metric_value(li_metrics(G), metric, k)))
    return out


def scan_values(graphs: list[Graph], metric: str, k: int | None, workers: int) -> list[tuple[str, float]]:
    units = [("g6", c) for c in _chunks([G.to_graph6() for G in graphs], UNIT_SIZE)]
    parts, _ = run_units(_values_unit, units, (metric, k), workers)
    return [pair for part in parts for pair in part]


def levels(values: list[tuple[str, float]], eq: float, descending: bool) -> list[dict]:
    """Group graphs into value levels; a level holds everything within ``eq`` of its first value."""
    ordered = sorted(values, key=lambda p: (-p[1] if descending else p[1], p[0]))
    out: list[dict] = []
    for g6, v in ordered:
        if out and abs(v - out[-1]["value"]) < eq:
            out[-1]["graphs"].append(g6)
        else:
            out.append({"value": v, "graphs": [g6]})
    for lv in out:
        lv["graphs"].sort()
    return out


# ---------------------------------------------------------------------------
# extremal scans and the claimed extremal families


TREE_SIGMA1_TOP = ["star", "s1", "s2", "tn3", "tn4", "s3"]


def stated_claims(cls: str, metric: str, k: int | None, n: int, m: int | None) -> list[dict]:
    """Claimed extremal chains: ``{"direction", "chain", "source", "window"}``.

    ``chain[i]`` should be the unique graph on the i-th level from the top
    (max) or bottom (min). ``window`` says whether n lies where the statement
    is asserted.
    """
    label = metric_label(metric, k)
    out = []

    def add(direction, chain, source, window):
        out.append({"direction": direction, "chain": chain, "source": source, "window": bool(window)})

    if cls == "trees":
        if label == "sigma1":
            top = TREE_SIGMA1_TOP if n >= 8 else ["star", "s1", "s2"]
            add("max", top, "thm5.1", n >= 7)
            add("min", ["path"], "thm5.1", n >= 7)
        elif label == "F2":
            add("max", ["star", "s1", "balanced"], "thm5.2", n >= 12)
            add("min", ["path"], "thm5.2", n >= 12)
        elif label == "F3":
            add("max", ["star"], "thm5.3", n >= 5)
            add("min", ["path"], "conj5.1", n >= 3)
        elif metric == "F":
            add("max", ["star"], "conj5.1", n >= 2)
            add("min", ["path"], "conj5.1", n >= 2)
    elif cls == "unicyclic":
        if label == "sigma1":
            add("max", ["gnn"], "thm5.4", n >= 5)
            add("min", ["cycle"], "thm5.4", n >= 5)
        elif label == "F2":
            add("max", ["gnn"], "thm5.5", n >= 12)
            add("min", ["cycle"], "thm5.5", n >= 12)
        elif label == "F3":
            add("max", ["gnn"], "thm5.6", n >= 12)
    elif cls == "bicyclic":
        if label == "sigma1":
            add("max", ["bnstar"], "thm5.7", n >= 17)
            add("min", ["bn1"], "thm5.7", n >= 17)
        elif label == "F2":
            add("max", ["gn1n"], "thm5.8", n >= 5)
        elif label == "F3":
            add("max", ["gn1n"], "thm5.9", n >= 5)
    elif cls == "connected" and m is not None and label in ("F2", "F3") and n >= 4 and n <= m <= 2 * n - 3:
        add("max", [f"gmn:{m}"], "final-conjecture", True)
    return out


def _claim_graph(name: str, n: int) -> Graph:
    if name.startswith("gmn:"):
        return fam.g_mn(int(name[4:]), n)
    return named_graph(name, n)


def _check_claim(claim: dict, n: int, ranked: list[dict]) -> dict:
    steps, ok, unique = [], True, True
    for i, name in enumerate(claim["chain"]):
        G = _claim_graph(name, n)
        level = ranked[i] if i < len(ranked) else {"value": None, "graphs": []}
        hit = [s for s in level["graphs"] if isomorphism(decode(s), G, max_n=max(n, 1)) is not None]
        found = bool(hit)
        only = found and len(level["graphs"]) == 1
        steps.append({"name": name, "graph6": G.to_graph6(), "level": i, "level_value": level["value"],
                      "level_size": len(level["graphs"]), "found": found, "unique": only})
        ok &= found
        unique &= only
    return {**claim, "match": ok, "unique": ok and unique, "steps": steps}


@dataclass
class ExtremalResult:
    metric: str
    cls: str
    n: int
    m: int | None
    graphs: int
    exact: bool
    max_value: float
    min_value: float
    argmax: list[str]
    argmin: list[str]
    top_levels: list[dict]
    bottom_levels: list[dict]
    claims: list[dict]

    @property
    def match(self) -> bool:
        return all(c["match"] for c in self.claims)

    @property
    def unique(self) -> bool:
        return all(c["unique"] for c in self.claims)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["match"] = self.match
        d["unique"] = self.unique
        return d


def extremal(metric_name: str, cls: str, n: int, k: int | None = None, m: int | None = None,
             cfg: RunConfig | None = None, allow_n8: bool = False, depth: int = 8) -> ExtremalResult:
    """Full scan of a class at order n for the max and min of one metric."""
    cfg = cfg or RunConfig(command="extremal")
    metric, k = parse_metric(metric_name, k)
    if k is not None and not 1 <= k <= n:
        raise HarnessError(f"k must lie in [1, {n}], got {k}")
    graphs, exact = class_graphs(cls, n, m, cfg, allow_n8)
    if not graphs:
        raise HarnessError(f"no {cls} graphs at n={n}" + (f", m={m}" if m is not None else ""))
    values = scan_values(graphs, metric, k, cfg.workers)
    eq = cfg.tolerances.eq
    top = levels(values, eq, True)
    bottom = levels(values, eq, False)
    claims = []
    for c in stated_claims(cls, metric, k, n, m):
        ranked = top if c["direction"] == "max" else bottom
        claims.append(_check_claim(c, n, ranked))
    d = max(depth, *(len(c["chain"]) for c in claims)) if claims else depth
    return ExtremalResult(metric_label(metric, k), cls, n, m, len(graphs), exact,
                          top[0]["value"], bottom[0]["value"], top[0]["graphs"], bottom[0]["graphs"],
                          top[:d], bottom[:d], claims)


def extremal_report(res: ExtremalResult, cfg: RunConfig) -> dict:
    args = {"metric": res.metric, "class": res.cls, "n": res.n, "m": res.m}
    body = res.to_dict()
    body["exit_status"] = EXIT_OK if res.match and res.unique else EXIT_VIOLATION
    return {"header": _header("extremal", cfg, args), **body}


def extremal_csv(res: ExtremalResult) -> str:
    rows = []
    for direction, lvls in (("max", res.top_levels), ("min", res.bottom_levels)):
        for i, lv in enumerate(lvls):
            for g in lv["graphs"]:
                rows.append({"direction": direction, "level": i, "value": lv["value"], "graph6": g})
    return rows_to_csv(rows, ("direction", "level", "value", "graph6"))


# ---------------------------------------------------------------------------
# conjectures and questions


CONJECTURES = ("conj5.1", "final", "q3.1")


def conjecture(cid: str, ns: list[int], ks: list[int] | None = None, ms: list[int] | None = None,
               cfg: RunConfig | None = None, samples: int | None = None, allow_n8: bool = False) -> dict:
    """Counterexample search; never reports more than the absence of one."""
    cfg = cfg or RunConfig(command="conjecture")
    if cid == "conj5.1":
        return _conj51(ns, ks, cfg, samples)
    if cid == "final":
        return _final_conjecture(ns, ms, cfg, allow_n8)
    if cid == "q3.1":
        return _question31(ns, cfg, allow_n8)
    raise HarnessError(f"unknown conjecture {cid!r}; choose from {', '.join(CONJECTURES)}")


def _status(found: bool, complete: bool) -> tuple[str, int]:
    if found:
        return "counterexample found", EXIT_VIOLATION
    if not complete:
        return NO_COUNTEREXAMPLE + " (incomplete: budget exhausted)", EXIT_INCOMPLETE
    return NO_COUNTEREXAMPLE, EXIT_OK


def _conj51(ns: list[int], ks: list[int] | None, cfg: RunConfig, samples: int | None) -> dict:
    from .enumerate import TREE_MAX_N

    exhaustive = [n for n in ns if n <= TREE_MAX_N]
    sampled = [n for n in ns if n > TREE_MAX_N]
    ks = sorted(set(ks)) if ks else list(range(1, max(ns) + 1))
    sections = []
    if exhaustive:
        sections.append(verify(["conj5.1"], Source("trees", exhaustive), ks, cfg))
    if sampled:
        sections.append(verify(["conj5.1"], Source("trees", sampled, samples=samples or 10_000), ks, cfg))
    found = any(s["violations"] for s in sections)
    complete = all(s["complete"] for s in sections)
    status, code = _status(found, complete)
    return {
        "header": _header("conjecture", cfg, {"id": "conj5.1", "n": ns, "k": ks, "samples": samples}),
        "id": "conj5.1",
        "status": status,
        "exhaustive_n": exhaustive,
        "sampled_n": sampled,
        "graphs_checked": sum(s["graphs_checked"] for s in sections),
        "counterexamples": [r for s in sections for r in s["violations"]],
        "equality_cases": sorted({(r["theorem_id"], r["graph6"]) for s in sections
                                  for r in s["equality_mismatches"]}),
        "complete": complete,
        "exit_status": code,
    }


def _final_conjecture(ns: list[int], ms: list[int] | None, cfg: RunConfig, allow_n8: bool) -> dict:
    entries, found = [], False
    deadline = None if cfg.max_seconds is None else time.monotonic() + cfg.max_seconds
    complete = True
    for n in ns:
        for m in (ms if ms else range(n, 2 * n - 2)):
            if not (n >= 4 and n <= m <= 2 * n - 3):
                continue
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            for metric in ("F2", "F3"):
                res = extremal(metric, "connected", n, None, m, cfg, allow_n8)
                claim = res.claims[0]
                ok = claim["match"] and claim["unique"]
                found |= not ok
                entries.append({"n": n, "m": m, "metric": metric, "graphs": res.graphs,
                                "max_value": res.max_value, "argmax": res.argmax,
                                "gmn_graph6": claim["steps"][0]["graph6"],
                                "gmn_is_max": claim["match"], "gmn_unique": claim["unique"]})
    status, code = _status(found, complete)
    return {"header": _header("conjecture", cfg, {"id": "final", "n": ns, "m": ms}),
            "id": "final", "status": status, "entries": entries, "complete": complete,
            "exit_status": code}


def _question31(ns: list[int], cfg: RunConfig, allow_n8: bool) -> dict:
    eq = cfg.tolerances.eq
    hits, counts = [], {}
    for n in ns:
        graphs, _ = class_graphs("connected", n, None, cfg, allow_n8)
        sparse = [G for G in graphs if 4 * G.m < n * n]
        counts[str(n)] = {"connected": len(graphs), "m_below_quarter_n2": len(sparse)}
        for G in sparse:
            lm = li_metrics(G)
            avg = 2.0 * G.m / n
            if abs(float(lm.sigma[0]) - avg) < eq:
                hits.append({"graph6": G.to_graph6(), "n": n, "m": G.m, "sigma1": float(lm.sigma[0]),
                             "avg_degree": avg, "regular": is_regular(G), "bipartite": is_bipartite(G)})
    hits.sort(key=lambda h: (h["n"], h["m"], h["graph6"]))
    return {"header": _header("conjecture", cfg, {"id": "q3.1", "n": ns}),
            "id": "q3.1", "status": f"{len(hits)} graph(s) with sigma_1 = 2m/n and m < n^2/4",
            "counts": counts, "graphs": hits, "complete": True, "exit_status": EXIT_OK}


# ---------------------------------------------------------------------------
# sigma_n trend


TREND_CLASSES = ("pmtrees",) + CLASSES


def trend(cls: str, ns: list[int], cfg: RunConfig | None = None, samples: int | None = None,
          allow_n8: bool = False) -> dict:
    """Per-n minimum of sigma_n over a class (sampled when ``samples`` is given)."""
    cfg = cfg or RunConfig(command="trend")
    if cls not in TREND_CLASSES:
        raise HarnessError(f"unknown class {cls!r}; choose from {', '.join(TREND_CLASSES)}")
    eq = cfg.tolerances.eq
    series = []
    for n in ns:
        if cls == "pmtrees" and n % 2:
            continue
        if samples is not None and cls in ("trees", "unicyclic", "bicyclic"):
            units = [("sample", cls, n, cfg.seed, c, size) for c, size in sample_plan(samples)]
            parts, _ = run_units(_values_unit, units, ("sigma_n", None), cfg.workers)
            values = [p for part in parts for p in part]
            exact = False
        else:
            graphs, exact = class_graphs(cls, n, None, cfg, allow_n8)
            if not graphs:
                continue
            values = scan_values(graphs, "sigma_n", None, cfg.workers)
        low = levels(values, eq, False)[0]
        row = {"n": n, "count": len(values), "exact": exact, "min_sigma_n": low["value"],
               "argmin": low["graphs"]}
        if cls == "pmtrees":
            row["reference"] = 2.0 / n
        series.append(row)
    return {"header": _header("trend", cfg, {"metric": "sigma_n", "class": cls, "n": ns, "samples": samples}),
            "metric": "sigma_n", "class": cls, "series": series, "complete": True, "exit_status": EXIT_OK}


def trend_csv(report: dict) -> str:
    rows = [{**r, "argmin_graph6": " ".join(r["argmin"])} for r in report["series"]]
    cols = ["n", "count", "min_sigma_n", "argmin_graph6"]
    if report["class"] == "pmtrees":
        cols.append("reference")
    return rows_to_csv(rows, cols)
