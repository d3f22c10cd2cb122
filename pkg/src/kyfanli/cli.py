"""Command-line entry point: ``kyfanli {compute,verify,extremal,conjecture,trend,enum}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import harness as H
from ._backend import BACKEND
from .config import RunConfig, merge, read_config_file
from .enumerate import CLASSES, EnumerationError
from .families import parse_family
from .graph6 import Graph6Error, decode, read_graph6_lines, write_graph6_lines
from .spectra import li_metrics
from .theorems import resolve_theorems


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``5``, ``3..7``, ``3-7`` or ``4,6,8`` (parts may mix)."""
    out: list[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        for sep in ("..", "-"):
            if sep in part[1:]:
                a, b = part.split(sep, 1)
                try:
                    lo, hi = int(a), int(b)
                except ValueError:
                    raise UsageError(f"bad range {text!r}") from None
                if hi < lo:
                    raise UsageError(f"empty range {text!r}")
                out += range(lo, hi + 1)
                break
        else:
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"bad integer {part!r} in {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(set(out))


def load_graph(text: str):
    """A family descriptor (``star:12``) or a graph6 string."""
    if ":" in text:
        try:
            return parse_family(text).build(), text
        except ValueError as e:
            raise UsageError(str(e)) from None
    try:
        return decode(text), text
    except Graph6Error as e:
        raise UsageError(f"graph6 parse error: {e}") from None


def load_graph_file(path: str):
    try:
        with open(path) as fh:
            return list(read_graph6_lines(fh))
    except Graph6Error as e:
        raise UsageError(f"{path}: {e}") from None
    except OSError as e:
        raise UsageError(str(e)) from None


# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value file; explicit flags override it")
    p.add_argument("--workers", type=int, help="worker processes (default: $KYFANLI_WORKERS or 1)")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), help="report format")
    p.add_argument("--strict-tol", type=float, help="tolerance for inequality checks")
    p.add_argument("--eq-tol", type=float, help="tolerance for equality and boundary detection")
    p.add_argument("--budget", dest="max_graphs", type=int, help="stop after this many graphs")
    p.add_argument("--max-seconds", type=float, help="stop submitting work after this many seconds")
    p.add_argument("--seed", type=int, help="sampler seed")
    p.add_argument("--iso-cap", type=int, help="largest n for exact isomorphism dedup")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kyfanli", description="Ky Fan norms of LI(G) = L(G) - (2m/n)I.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="spectrum and LI metrics of one graph")
    p.add_argument("graph", nargs="?", help="graph6 string or family descriptor such as star:12 or gmn:13,10")
    p.add_argument("--input", help="graph6 file (one per line, # comments)")
    p.add_argument("--k", default=None, help="k values for F_k and S_k, e.g. 1..3")
    _common(p)

    p = sub.add_parser("verify", help="run theorem checks over a class")
    p.add_argument("theorems", help="theorem ids: all, thm5, thm3.2,cor3.1, ...")
    p.add_argument("--class", dest="cls", default="connected",
                   choices=CLASSES + ("families",), help="graph class ('families' runs named-family chains)")
    p.add_argument("--n", default=None, help="order range, e.g. 3..7")
    p.add_argument("--m", type=int, help="edge count (connected class only)")
    p.add_argument("--k", default="1..3", help="k range for k-dependent statements")
    p.add_argument("--samples", type=int, help="random graphs per n instead of full enumeration")
    p.add_argument("--dedup", choices=("exact", "hash"), default="exact")
    p.add_argument("--allow-n8", action="store_true", help="allow connected n = 8 (slow)")
    p.add_argument("--input", help="verify the graphs in this graph6 file instead")
    _common(p)

    p = sub.add_parser("extremal", help="argmax/argmin of a metric over a class")
    p.add_argument("metric", help="sigma1, sigma_n, F2, Fk, S3, LE, spr, mu1")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES + ("pmtrees",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--allow-n8", action="store_true")
    _common(p)

    p = sub.add_parser("conjecture", help="counterexample search for open statements")
    p.add_argument("id", choices=H.CONJECTURES)
    p.add_argument("--n", required=True)
    p.add_argument("--k", default=None)
    p.add_argument("--m", default=None, help="edge range for the final conjecture")
    p.add_argument("--samples", type=int, help="random trees per n beyond exhaustive range")
    p.add_argument("--allow-n8", action="store_true")
    _common(p)

    p = sub.add_parser("trend", help="per-n minimum of sigma_n")
    p.add_argument("--metric", default="sigma_n", choices=("sigma_n",))
    p.add_argument("--class", dest="cls", required=True, choices=H.TREND_CLASSES)
    p.add_argument("--n", required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--allow-n8", action="store_true")
    _common(p)

    p = sub.add_parser("enum", help="dump graph6 for a class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES + ("pmtrees",))
    p.add_argument("--n", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--allow-n8", action="store_true")
    _common(p)
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    file_values = read_config_file(args.config) if args.config else {}
    flags = {key: getattr(args, key, None) for key in
             ("workers", "output", "fmt", "strict_tol", "eq_tol", "max_graphs", "max_seconds", "seed", "iso_cap")}
    return merge(RunConfig(command=args.command), file_values, flags)


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_compute(args, cfg: RunConfig) -> int:
    if bool(args.graph) == bool(args.input):
        raise UsageError("give exactly one of a graph argument or --input")
    graphs = [load_graph(args.graph)] if args.graph else [(G, G.to_graph6()) for G in load_graph_file(args.input)]
    records = []
    for G, label in graphs:
        if G.n == 0:
            raise UsageError("the empty graph has no LI matrix")
        lm = li_metrics(G)
        ks = parse_range(args.k) if args.k else list(range(1, G.n + 1))
        bad = [k for k in ks if not 1 <= k <= G.n]
        if bad:
            raise UsageError(f"k out of range [1, {G.n}]: {bad}")
        rec = {"input": label, "graph6": G.to_graph6(), **lm.as_dict(),
               "F": {str(k): lm.F(k) for k in ks}, "S_k": {str(k): lm.S(k) for k in ks},
               "sigma1": float(lm.sigma[0]), "sigma_n": float(lm.sigma[-1])}
        records.append(rec)
    if cfg.fmt == "csv":
        rows = [{"graph6": r["graph6"], "n": r["n"], "m": r["m"], "sigma1": r["sigma1"], "sigma_n": r["sigma_n"],
                 "LE": r["LE"], "spr": r["spr"], **{f"F{k}": v for k, v in r["F"].items()}} for r in records]
        cols = list(dict.fromkeys(c for row in rows for c in row))
        emit(H.rows_to_csv(rows, cols), cfg)
    else:
        emit(json.dumps(records[0] if len(records) == 1 else records, sort_keys=True, indent=2) + "\n", cfg)
    return H.EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    ids = resolve_theorems(args.theorems) if args.cls != "families" else []
    ks = parse_range(args.k) if args.k else []
    if args.input:
        src = H.Source("file", [], graphs=load_graph_file(args.input))
    else:
        if not args.n:
            raise UsageError("--n is required unless --input is given")
        src = H.Source(args.cls, parse_range(args.n), m=args.m, samples=args.samples,
                       dedup=args.dedup, allow_n8=args.allow_n8)
    report = H.verify(ids, src, ks, cfg)
    emit(H.verify_csv(report) if cfg.fmt == "csv" else H.to_json(report), cfg)
    _summary(f"verify: {report['graphs_checked']} graph(s), {len(report['violations'])} violation(s), "
             f"{len(report['boundary'])} boundary, complete={report['complete']}")
    return report["exit_status"]


def cmd_extremal(args, cfg: RunConfig) -> int:
    res = H.extremal(args.metric, args.cls, args.n, args.k, args.m, cfg, args.allow_n8)
    report = H.extremal_report(res, cfg)
    emit(H.extremal_csv(res) if cfg.fmt == "csv" else H.to_json(report), cfg)
    _summary(f"extremal {res.metric}: max {res.max_value:.12g} ({len(res.argmax)}), "
             f"min {res.min_value:.12g} ({len(res.argmin)}), claims match={res.match} unique={res.unique}")
    return report["exit_status"]


def cmd_conjecture(args, cfg: RunConfig) -> int:
    report = H.conjecture(args.id, parse_range(args.n), parse_range(args.k) if args.k else None,
                          parse_range(args.m) if args.m else None, cfg, args.samples, args.allow_n8)
    if cfg.fmt == "csv":
        rows = report.get("counterexamples") or report.get("graphs") or report.get("entries") or []
        cols = list(dict.fromkeys(c for r in rows for c in r)) or ["status"]
        emit(H.rows_to_csv(rows, cols), cfg)
    else:
        emit(H.to_json(report), cfg)
    _summary(f"{args.id}: {report['status']}")
    return report["exit_status"]


def cmd_trend(args, cfg: RunConfig) -> int:
    report = H.trend(args.cls, parse_range(args.n), cfg, args.samples, args.allow_n8)
    emit(H.trend_csv(report) if cfg.fmt == "csv" else H.to_json(report), cfg)
    return report["exit_status"]


def cmd_enum(args, cfg: RunConfig) -> int:
    graphs = []
    for n in parse_range(args.n):
        graphs += H.class_graphs(args.cls, n, args.m, cfg, args.allow_n8)[0]
    if cfg.max_graphs is not None:
        graphs = graphs[:cfg.max_graphs]
    if cfg.output:
        with open(cfg.output, "w") as fh:
            write_graph6_lines(graphs, fh)
    else:
        write_graph6_lines(graphs, sys.stdout)
    return H.EXIT_OK


def _summary(line: str) -> None:
    print(line, file=sys.stderr)


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "conjecture": cmd_conjecture,
    "trend": cmd_trend,
    "enum": cmd_enum,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return H.EXIT_USAGE if e.code else H.EXIT_OK
    try:
        cfg = make_config(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, H.HarnessError, EnumerationError, ValueError) as e:
        print(f"kyfanli {args.command}: error: {e}", file=sys.stderr)
        return H.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
