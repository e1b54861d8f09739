"""Command-line front end: ``pathmajority {build,query,verify,gen,bench}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from ._tau import as_tau
from .fileio import (
    INDEX_KINDS,
    TreeData,
    build_index,
    format_tree,
    index_mode,
    load_index,
    parse_queries,
    read_tree_file,
    save_index,
)
from .minority import MinorityIndex
from .multilabel import oracle_multi_majorities
from .oracle import SHAPES, GeneratorSpec, SplitMix64, generate_multi, generate_parents_labels, oracle_majorities, oracle_tally
from .tree import build_tree

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_tau(args) -> Fraction:
    """``--tau`` takes a decimal (``0.35``), ``--tau-rational`` a ratio (``7/20``).

    Both are read exactly; a float is never involved.
    """
    if (args.tau is None) == (args.tau_rational is None):
        raise UsageError("give exactly one of --tau or --tau-rational")
    raw = args.tau if args.tau is not None else args.tau_rational
    if args.tau is not None and "/" in raw:
        raise UsageError("--tau takes a decimal; use --tau-rational for p/q")
    if args.tau_rational is not None and "/" not in raw:
        raise UsageError("--tau-rational takes p/q")
    try:
        return as_tau(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def _add_tau(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", help="threshold as a decimal, e.g. 0.35")
    p.add_argument("--tau-rational", help="threshold as p/q, e.g. 7/20")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def format_labels(labels) -> str:
    return " ".join(map(str, labels)) if labels else "-"


def _map_ordered(fn, items, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_build(args) -> int:
    tau = parse_tau(args)
    data = read_tree_file(args.tree)
    kind = args.index
    if args.mode and kind == "basic":
        raise UsageError("--mode applies to stratified indexes only")
    index = build_index(data, tau, kind, args.kappa, args.mode)
    save_index(args.out, data, index, kind, args.kappa)
    return EXIT_OK


def run_queries(loaded, queries, flavor: str, jobs: int = 1) -> list:
    if flavor == "minority":
        m = loaded.minority()
        orig = m.tree.original_labels
        tau = loaded.tau

        def one(q):
            lab, _ = m.query_internal(q[0], q[1], tau)
            return "-" if lab is None else str(orig[lab])
    else:
        index = loaded.majority

        def one(q):
            return format_labels(index.query(q[0], q[1])[0])

    return _map_ordered(one, queries, jobs)


def cmd_query(args) -> int:
    loaded = load_index(args.index_file)
    queries = parse_queries(_read_text(args.queries), loaded.data.n, args.queries)
    try:
        lines = run_queries(loaded, queries, args.flavor, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write("".join(line + "\n" for line in lines))
    return EXIT_OK


def verify_tree(data: TreeData, tau: Fraction, queries, kappa: Optional[int] = None) -> Optional[tuple]:
    """First ``(index, u, v, expected, got)`` disagreeing with the oracle, or None."""
    indexes = [(kind, build_index(data, tau, kind, kappa)) for kind in INDEX_KINDS]
    tree = None if data.multi else build_tree(data.parents, data.labels)
    minority = MinorityIndex(tree) if tree is not None else None
    for u, v in queries:
        if data.multi:
            expected = oracle_multi_majorities(data.parents, data.label_lists, u, v, tau)
        else:
            expected = oracle_majorities(tree, u, v, tau)
        for kind, index in indexes:
            got = index.query(u, v)[0]
            if got != expected:
                return kind, u, v, format_labels(expected), format_labels(got)
        if minority is not None:
            lab, _ = minority.query_internal(u, v, tau)
            tally, length = oracle_tally(tree, u, v)
            ok = [l for l, c in tally.items() if c * tau.denominator <= tau.numerator * length]
            valid = lab in ok if lab is not None else not ok
            if not valid:
                want = "any of " + format_labels(sorted(tree.original_labels[l] for l in ok)) if ok else "-"
                got = "-" if lab is None else str(tree.original_labels[lab])
                return "minority", u, v, want, got
    return None


def cmd_verify(args) -> int:
    tau = parse_tau(args)
    data = read_tree_file(args.tree)
    queries = parse_queries(_read_text(args.queries), data.n, args.queries)
    bad = verify_tree(data, tau, queries, args.kappa)
    if bad is None:
        print(f"ok: {len(queries)} queries agree with the oracle")
        return EXIT_OK
    kind, u, v, expected, got = bad
    print(f"mismatch: index={kind} u={u} v={v} expected={expected} got={got}")
    return EXIT_MISMATCH


def cmd_gen(args) -> int:
    try:
        spec = GeneratorSpec(args.shape, args.n, args.sigma, args.seed)
        if args.multi:
            parents, lists = generate_multi(spec, args.multi)
            data = TreeData(parents, None, lists)
        else:
            parents, labels = generate_parents_labels(spec)
            data = TreeData(parents, labels)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(format_tree(data))
    return EXIT_OK


@dataclass
class BenchReport:
    n: int
    sigma: int
    tau: str
    index: str
    mode: Optional[str]
    kappa: Optional[int]
    build_seconds: float
    queries: int
    candidates_inspected: dict = field(default_factory=dict)
    verifications: dict = field(default_factory=dict)
    latency_us: dict = field(default_factory=dict)


def _summary(values) -> dict:
    arr = np.asarray(values, dtype=float)
    return {"mean": float(arr.mean()), "max": float(arr.max())} if len(arr) else {"mean": 0.0, "max": 0.0}


def bench(data: TreeData, tau: Fraction, kind: str, queries, kappa: Optional[int] = None) -> BenchReport:
    t0 = time.perf_counter()
    index = build_index(data, tau, kind, kappa)
    build = time.perf_counter() - t0
    cands, vers, lat = [], [], []
    for u, v in queries:
        t0 = time.perf_counter()
        _, stats = index.query(u, v)
        lat.append((time.perf_counter() - t0) * 1e6)
        cands.append(stats.candidates_inspected)
        vers.append(stats.verifications)
    inner = getattr(index, "index", index)
    pct = np.percentile(lat, [50, 90, 99]) if lat else [0.0, 0.0, 0.0]
    return BenchReport(
        n=data.n,
        sigma=inner.tree.sigma,
        tau=f"{tau.numerator}/{tau.denominator}",
        index=kind,
        mode=index_mode(index),
        kappa=getattr(inner, "kappa", None),
        build_seconds=round(build, 6),
        queries=len(queries),
        candidates_inspected=_summary(cands),
        verifications=_summary(vers),
        latency_us={"p50": float(pct[0]), "p90": float(pct[1]), "p99": float(pct[2]), "max": max(lat, default=0.0)},
    )


def random_queries(n: int, count: int, seed: int) -> list:
    rng = SplitMix64(seed)
    return [(1 + rng.below(n), 1 + rng.below(n)) for _ in range(count)]


def cmd_bench(args) -> int:
    data = read_tree_file(args.tree)
    try:
        taus = [as_tau(t) for t in args.taus.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    queries = random_queries(data.n, args.queries, args.seed)
    kinds = INDEX_KINDS if args.index == "all" else (args.index,)
    reports = [asdict(bench(data, t, k, queries, args.kappa)) for t in taus for k in kinds]
    json.dump({"reports": reports}, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathmajority", description="Path tau-majority and tau-minority queries on labeled trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and save an index")
    p.add_argument("tree")
    _add_tau(p)
    p.add_argument("--index", choices=INDEX_KINDS, default="basic")
    p.add_argument("--kappa", type=int)
    p.add_argument("--mode", choices=("linear", "superlinear"))
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("query", help="answer a file of 'u v' lines")
    p.add_argument("index_file")
    p.add_argument("queries", help="query file, or - for stdin")
    p.add_argument("--flavor", choices=("majority", "minority"), default="majority")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_query)

    p = sub.add_parser("verify", help="check every index against the brute-force oracle")
    p.add_argument("tree")
    p.add_argument("queries")
    _add_tau(p)
    p.add_argument("--kappa", type=int)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="write a generated tree to stdout")
    p.add_argument("--shape", choices=SHAPES, default="random-attachment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--multi", type=int, metavar="K", help="emit a multi-label tree with up to K labels per node")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("bench", help="build and query, then report statistics as JSON")
    p.add_argument("tree")
    p.add_argument("--taus", default="0.1", help="comma-separated thresholds")
    p.add_argument("--queries", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--index", choices=INDEX_KINDS + ("all",), default="all")
    p.add_argument("--kappa", type=int)
    p.set_defaults(fn=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kappa", None) is not None and args.kappa < 1:
        parser.error("--kappa must be at least 1")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.fn(args)
    except (UsageError, OSError, ValueError) as exc:  # ValueError covers FormatError and tree validation
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
