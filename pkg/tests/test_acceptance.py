"""Acceptance criteria, one test each; every test prints one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` (or ``python3 tests/test_acceptance.py``)
to see the lines. Criteria whose expected outcome is known to be unattainable
still run at their stated tolerances and are left to fail.
"""

from __future__ import annotations

import sys
import time

import numpy as np
import pytest

from kyfanli import families as fam
from kyfanli.config import RunConfig, default_workers
from kyfanli.enumerate import enum_bicyclic, enum_connected, enum_trees, enum_unicyclic
from kyfanli.graph import Graph
from kyfanli.graph6 import decode, encode
from kyfanli.harness import Source, extremal, strip_volatile, to_json, verify, verify_csv
from kyfanli.poly import laplacian_charpoly, named_poly
from kyfanli.spectra import cycle_spectrum, laplacian_spectrum, li_metrics, path_spectrum

LINES: list[str] = []


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}"
    LINES.append(line)
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()
    assert ok, line


def cfg(**kw) -> RunConfig:
    return RunConfig(workers=kw.pop("workers", default_workers()), **kw)


# ---------------------------------------------------------------------------


def test_criterion_1_solver_fidelity():
    t = time.perf_counter()
    err = 0.0
    for n in range(3, 201):
        err = max(err, float(np.abs(laplacian_spectrum(fam.path(n)).mu - path_spectrum(n)).max()))
        err = max(err, float(np.abs(laplacian_spectrum(fam.cycle(n)).mu - cycle_spectrum(n)).max()))
    dt = time.perf_counter() - t
    record(1, err < 1e-9 and dt < 10.0, f"P_n, C_n n=3..200 max abs error {err:.2e} (< 1e-9), {dt:.2f}s (< 10s)")


def test_criterion_2_charpoly_identity():
    t = time.perf_counter()
    bad = [n for n in range(6, 15) if laplacian_charpoly(fam.balanced_double_star(n)) != named_poly("phi", n)]
    dt = time.perf_counter() - t
    record(2, not bad and dt < 1.0, f"phi vs balanced double star charpoly n=6..14, mismatches {bad}, {dt:.3f}s (< 1s)")


def test_criterion_3_named_values():
    t = time.perf_counter()
    errs = {}

    def err(key, got, want):
        errs[key] = max(errs.get(key, 0.0), abs(got - want))

    for n in range(12, 21):
        lm = li_metrics(fam.g_mn(n, n))
        err("sigma1(G_nn)=n-2", float(lm.sigma[0]), n - 2)
        err("F3(G_nn)=n+1", lm.F(3), n + 1)
        err("F3(G_n+1,n)=n+2-2/n", li_metrics(fam.g_mn(n + 1, n)).F(3), n + 2 - 2 / n)
    for n in range(5, 21):
        err("F3(star)=n+1-2/n", li_metrics(fam.star(n)).F(3), n + 1 - 2 / n)
    for t_ in range(2, 11):
        lm = li_metrics(fam.h_n(t_))
        err("mu1(H_n)=5", lm.spectrum.mu1, 5.0)
        err("sigma1(H_n)=8/3", float(lm.sigma[0]), 8 / 3)
    dt = time.perf_counter() - t
    worst = max(errs.values())
    record(3, worst < 1e-7 and dt < 5.0, f"max error {worst:.2e} (< 1e-7) over {len(errs)} identities, {dt:.2f}s (< 5s)")


def test_criterion_4_exhaustive_sweeps():
    t = time.perf_counter()
    c = cfg()
    counts = [len(list(enum_connected(n))) for n in (5, 6, 7)]
    runs = [
        ("thm3.1+3.2 connected n<=7", verify(["thm3.1", "thm3.2"], Source("connected", [3, 4, 5, 6, 7]), [], c)),
        ("thm5.1 trees 7..12", verify(["thm5.1"], Source("trees", list(range(7, 13))), [], c)),
        ("thm5.1/5.2 named chains 7..13", verify([], Source("families", list(range(7, 14))), [3], c)),
        ("thm5.2 trees 12,13", verify(["thm5.2"], Source("trees", [12, 13]), [], c)),
        ("thm5.3 trees 5..12", verify(["thm5.3"], Source("trees", list(range(5, 13))), [], c)),
        ("thm5.4 unicyclic 5..11", verify(["thm5.4"], Source("unicyclic", list(range(5, 12))), [], c)),
        ("thm5.5+5.6 unicyclic 12", verify(["thm5.5", "thm5.6"], Source("unicyclic", [12]), [], c)),
        ("thm5.8+5.9 bicyclic 5..10", verify(["thm5.8", "thm5.9"], Source("bicyclic", list(range(5, 11))), [], c)),
    ]
    dt = time.perf_counter() - t
    viol = {name: [f"{v['theorem_id']}@{v['graph6']}" for v in r["violations"]] for name, r in runs}
    bad = {k: v for k, v in viol.items() if v}
    incomplete = [name for name, r in runs if not r["complete"]]
    for name, r in runs:
        sys.__stdout__.write(f"    {name}: {r['graphs_checked']} graphs, {len(r['violations'])} violations\n")
    ok = counts == [21, 112, 853] and not bad and not incomplete and dt < 600
    record(4, ok, f"connected counts {counts}; violations {bad or 'none'}; incomplete {incomplete or 'none'}; "
                  f"{dt:.1f}s (< 600s)")


def test_criterion_5_sampled_thm57():
    t = time.perf_counter()
    r = verify(["thm5.7"], Source("bicyclic", [17, 20], samples=100_000), [], cfg(seed=2024))
    dt = time.perf_counter() - t
    n_checked = r["summary"]["thm5.7/upper"]["applicable"]
    record(5, not r["violations"] and n_checked == 200_000 and dt < 120,
           f"{n_checked} sampled bicyclic graphs (1e5 per n in {{17, 20}}), {len(r['violations'])} violations, "
           f"{dt:.1f}s (< 120s)")


def test_criterion_6_edge_case_ledger():
    graphs = [fam.path(2), fam.cycle(4), fam.star(4), fam.complete(5), fam.complete_multipartite([2, 2, 2])]
    r = verify(["thm3.3", "thm3.4", "thm4.7", "cor4.1"], Source("file", [], graphs=graphs), [2, 3], cfg())
    entries = {(e["theorem_id"], e["graph6"]) for key in ("violations", "boundary", "tight") for e in r[key]}
    want = [
        ("thm3.3", encode(fam.path(2))),
        ("thm3.4", encode(fam.path(2))),
        ("thm3.3", encode(fam.cycle(4))),
        ("thm4.7/k=2", encode(fam.complete(5))),
        ("thm4.7/k=3", encode(fam.complete(5))),
        ("thm4.7/k=2", encode(fam.complete_multipartite([2, 2, 2]))),
    ]
    missing = [w for w in want if w not in entries]
    csv_rows = verify_csv(r).strip().splitlines()
    record(6, not missing and len(csv_rows) > len(want),
           f"{len(entries)} violation/boundary/tight entries emitted, {len(csv_rows) - 1} CSV rows, missing {missing or 'none'}")


def _claims_ok(res):
    return all(c["match"] and c["unique"] for c in res.claims)


def test_criterion_7_extremal_agreement():
    cases = [("sigma1", "trees", 12), ("F2", "trees", 12), ("F3", "trees", 12)]
    cases += [(m, "unicyclic", n) for n in (9, 10, 11) for m in ("sigma1", "F2", "F3")]
    cases += [(m, "bicyclic", n) for n in (9, 10) for m in ("F2", "F3")]
    failed = []
    for metric, cls, n in cases:
        res = extremal(metric, cls, n, cfg=cfg())
        if not res.claims or not _claims_ok(res):
            why = [(c["direction"], [(s["name"], s["found"], s["level_size"]) for s in c["steps"]])
                   for c in res.claims if not (c["match"] and c["unique"])]
            failed.append(f"{metric}/{cls}/n={n}: {why}")
    record(7, not failed, f"{len(cases) - len(failed)}/{len(cases)} scans match with unique optimum; "
                          f"failures: {failed or 'none'}")


def test_criterion_8_property_suites():
    problems = []
    rng = np.random.default_rng(8)
    for n in range(1, 21):
        pairs = [(i, j) for j in range(n) for i in range(j)]
        for _ in range(10_000):
            bits = rng.random(len(pairs)) < rng.random()
            G = Graph(n, [p for p, b in zip(pairs, bits) if b])
            if decode(encode(G)) != G:
                problems.append(f"graph6 round trip n={n}")
                break
    # every eigensolve below runs the trace / zero-eigenvalue / PSD checks
    solves = 0
    for n in range(1, 8):
        for G in enum_connected(n):
            laplacian_spectrum(G).check(components=1)
            solves += 1
    trees = [len(list(enum_trees(n))) for n in range(1, 13)]
    if trees != [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]:
        problems.append(f"tree counts {trees}")
    for n in range(3, 8):
        conn = list(enum_connected(n))
        by_m = lambda e: sum(1 for G in conn if G.m == e)  # noqa: E731
        if len(list(enum_trees(n))) != by_m(n - 1) or len(list(enum_unicyclic(n))) != by_m(n):
            problems.append(f"class counts n={n}")
        if n >= 4 and len(list(enum_bicyclic(n))) != by_m(n + 1):
            problems.append(f"bicyclic count n={n}")
    src = Source("trees", [10, 11])
    a = verify(["thm5.1", "thm5.3", "conj5.1"], src, [1, 2, 3], RunConfig(workers=1))
    b = verify(["thm5.1", "thm5.3", "conj5.1"], src, [1, 2, 3], RunConfig(workers=8))
    if to_json(strip_volatile(a)) != to_json(strip_volatile(b)):
        problems.append("workers 1 vs 8 reports differ")
    record(8, not problems, f"graph6 2e5 round trips, {solves} checked eigensolves, tree/class counts, "
                            f"parallel determinism; problems: {problems or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
