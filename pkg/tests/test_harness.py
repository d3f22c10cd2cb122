import json

import pytest

from kyfanli.config import RunConfig
from kyfanli.harness import (
    EXIT_INCOMPLETE,
    EXIT_OK,
    EXIT_VIOLATION,
    NO_COUNTEREXAMPLE,
    HarnessError,
    Source,
    conjecture,
    extremal,
    levels,
    parse_metric,
    strip_volatile,
    to_json,
    trend,
    verify,
    verify_csv,
)


def test_verify_clean_sweep():
    r = verify(["thm3.2"], Source("connected", [3, 4, 5]), [], RunConfig())
    assert r["exit_status"] == EXIT_OK and r["complete"]
    assert r["graphs_checked"] == 2 + 6 + 21
    assert r["summary"]["thm3.2"]["violations"] == 0


def test_verify_reports_violations():
    r = verify(["thm3.3"], Source("trees", [2, 3, 4]), [], RunConfig())
    assert r["exit_status"] == EXIT_VIOLATION
    assert {v["graph6"] for v in r["violations"]} >= {"A_"}
    assert verify_csv(r).splitlines()[0] == "graph6,theorem_id,margin,holds,boundary"


def test_budget_flags_incomplete():
    r = verify(["thm5.3"], Source("trees", [8, 9]), [], RunConfig(max_graphs=10))
    assert r["graphs_checked"] == 10 and not r["complete"]
    assert r["exit_status"] == EXIT_INCOMPLETE


def test_worker_count_does_not_change_report():
    src = Source("trees", [9, 10])
    a = verify(["thm5.3", "conj5.1"], src, [2, 3], RunConfig(workers=1))
    b = verify(["thm5.3", "conj5.1"], src, [2, 3], RunConfig(workers=3))
    assert to_json(strip_volatile(a)) == to_json(strip_volatile(b))


def test_sampled_sweep_is_seeded():
    src = Source("bicyclic", [17], samples=300)
    a = verify(["thm5.7"], src, [], RunConfig(seed=5))
    b = verify(["thm5.7"], src, [], RunConfig(seed=5))
    assert strip_volatile(a) == strip_volatile(b)
    assert a["summary"]["thm5.7/upper"]["checked"] == 300


def test_families_source():
    r = verify([], Source("families", [7, 8]), [3], RunConfig())
    assert [v["theorem_id"] for v in r["violations"]] == ["fam5.1/s3<tn4"]


def test_json_is_stable():
    r = verify(["thm3.2"], Source("connected", [4]), [], RunConfig())
    text = to_json(r)
    assert json.loads(text)["summary"]["thm3.2"]["checked"] == 6
    assert list(json.loads(text)) == sorted(json.loads(text))


def test_parse_metric():
    assert parse_metric("F2") == ("F", 2)
    assert parse_metric("Fk", 4) == ("F", 4)
    assert parse_metric("sigma_n") == ("sigma_n", None)
    with pytest.raises(HarnessError):
        parse_metric("Fk")
    with pytest.raises(HarnessError):
        parse_metric("nonsense")


def test_levels_group_ties():
    lv = levels([("a", 1.0), ("b", 1.0 + 1e-9), ("c", 0.5)], 1e-7, True)
    assert lv[0]["graphs"] == ["a", "b"] and lv[1]["graphs"] == ["c"]


def test_extremal_trees_f3():
    res = extremal("F3", "trees", 9)
    assert res.match and res.unique
    assert abs(res.max_value - (9 + 1 - 2 / 9)) < 1e-9


def test_extremal_unicyclic_sigma1():
    res = extremal("sigma1", "unicyclic", 8)
    assert res.match and res.unique
    assert abs(res.max_value - 6) < 1e-9


def test_extremal_connected_with_m():
    res = extremal("F2", "connected", 6, m=8)
    assert res.claims and res.claims[0]["source"] == "final-conjecture"


def test_extremal_bad_input():
    with pytest.raises(HarnessError):
        extremal("F2", "trees", 40)
    with pytest.raises(HarnessError):
        extremal("F9", "trees", 5)


def test_conjecture_reports():
    r = conjecture("conj5.1", [8, 9], [1, 2, 3])
    assert r["status"] == NO_COUNTEREXAMPLE and r["exit_status"] == EXIT_OK
    r = conjecture("q3.1", [4, 5])
    assert all(4 * g["m"] < g["n"] ** 2 for g in r["graphs"])
    assert any(g["n"] == 5 and g["m"] == 5 and g["regular"] for g in r["graphs"])  # C_5
    r = conjecture("final", [5], ms=[5, 6, 7])
    assert {e["metric"] for e in r["entries"]} == {"F2", "F3"}


def test_trend_pm_trees():
    r = trend("pmtrees", [4, 6, 8])
    for row in r["series"]:
        assert abs(row["min_sigma_n"] - row["reference"]) < 1e-9
