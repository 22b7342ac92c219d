"""Command-line front end: decompose, width, hc, verify, bench."""

from __future__ import annotations

import argparse
import json
import sys
import time
import random

from .graph import Graph, parse_edge_list
from .cuts import sm_cut_function
from .branchdec import BranchDecomposition, SizeLimitExceeded
from .splitdec import split_decompose
from .pipeline import approx_sm_decomposition
from .solver import solve_hc
from . import oracles
from .generators import (caterpillar_decomposition, grid_graph,
                         random_connected_graph)

EXIT_OK = 0
EXIT_NO = 1
EXIT_PARSE = 2
EXIT_REFUSED = 3


def _load_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _load_decomposition(path: str) -> BranchDecomposition:
    with open(path) as fh:
        data = json.load(fh)
    if "decomposition" in data:
        data = data["decomposition"]
    return BranchDecomposition.from_json(data)


def _decomposition_report(g: Graph, bd: BranchDecomposition) -> dict:
    smf = sm_cut_function(g)
    cert = []
    width = 0
    for a, _ in bd.cuts():
        val = smf(a)
        width = max(width, val)
        cert.append({"cut": sorted(v for v in g.vertices if (a >> v) & 1),
                     "sm": val})
    return {"width": width, "width_certificate": cert,
            "decomposition": bd.to_json()}


def cmd_decompose(args) -> int:
    g = _load_graph(args.file)
    bd = approx_sm_decomposition(g)
    print(json.dumps(_decomposition_report(g, bd), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_width(args) -> int:
    g = _load_graph(args.file)
    if args.exact:
        width = oracles.brute_sm_width(g)
    else:
        bd = approx_sm_decomposition(g)
        width = bd.f_width(sm_cut_function(g))
    print(f"sm-width {width}")
    return EXIT_OK


def cmd_hc(args) -> int:
    g = _load_graph(args.file)
    if g.n < 3 or not g.is_connected():
        print("NOT HAMILTONIAN")
        return EXIT_NO
    if args.decomposition:
        bd = _load_decomposition(args.decomposition)
    else:
        bd = approx_sm_decomposition(g)
    ok, witness = solve_hc(g, bd, seed=args.seed)
    if ok:
        print("HAMILTONIAN")
        print(" ".join(f"{u}-{v}" for u, v in witness))
        return EXIT_OK
    print("NOT HAMILTONIAN")
    return EXIT_NO


def cmd_verify(args) -> int:
    g = _load_graph(args.file)
    failures = []

    dec = split_decompose(g) if g.n >= 2 and g.is_connected() else None
    if dec is not None:
        if dec.recompose() == g:
            print("ok: split decomposition recomposes to the input")
        else:
            failures.append("recomposition mismatch")
    if g.n > 14:
        print("refused: input too large for the brute-force sweep")
        return EXIT_REFUSED
    if g.n >= 2 and g.is_connected():
        bd = approx_sm_decomposition(g)
        width = bd.f_width(sm_cut_function(g))
        if g.n <= oracles.BRUTE_WIDTH_LIMIT:
            exact = oracles.brute_sm_width(g)
            if width <= 18 * exact:
                print(f"ok: approx width {width} within 18x exact {exact}")
            else:
                failures.append(f"width {width} exceeds 18x exact {exact}")
        checks = []
        if g.n <= 8:
            hcs = oracles.enumerate_hamiltonian_cycles(g)

            def on_trim(gg, a, before, after):
                checks.append(oracles.verify_preservation(
                    gg, a, before, after, method="cycles", hcs=hcs))
        else:
            on_trim = None
        got, witness = solve_hc(g, bd, seed=args.seed, on_trim=on_trim)
        want, _ = oracles.brute_hc(g)
        if got == want:
            print(f"ok: solver agrees with the oracle (hamiltonian={got})")
        else:
            failures.append(f"solver says {got}, oracle says {want}")
        if on_trim is not None:
            if all(checks):
                print(f"ok: all {len(checks)} trims preserve completability")
            else:
                failures.append("a trim lost a completable certificate")
    for msg in failures:
        print(f"FAIL: {msg}")
    return EXIT_OK if not failures else EXIT_NO


def _bench_row(task) -> str:
    family, n, k, seed = task
    if family == "grid":
        cols = max(2, round(n / k))
        g = grid_graph(k, cols)
        bd = caterpillar_decomposition(list(g.vertices))
    else:
        rng = random.Random(f"bench-{n}-{seed}")
        g = random_connected_graph(n, rng)
        bd = approx_sm_decomposition(g)
    try:
        smw_exact = oracles.brute_sm_width(g)
    except SizeLimitExceeded:
        smw_exact = -1
    smw_approx = approx_sm_decomposition(g).f_width(sm_cut_function(g))
    trace: dict = {}
    start = time.perf_counter()
    solve_hc(g, bd, seed=seed, trace=trace)
    millis = int((time.perf_counter() - start) * 1000)
    return f"{g.n},{seed},{smw_exact},{smw_approx},{trace['max_family']},{millis}"


def cmd_bench(args) -> int:
    ns = [int(x) for x in args.n.split(",")]
    ks = [int(x) for x in args.k.split(",")] if args.k else [0]
    tasks = []
    for n in ns:
        for k in ks:
            for s in range(args.samples):
                tasks.append((args.family, n, k, args.seed + s))
    if args.jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(args.jobs) as pool:
            rows = pool.map(_bench_row, tasks)
    else:
        rows = [_bench_row(t) for t in tasks]
    print("n,seed,smw_exact,smw_approx,max_family,millis")
    for row in rows:
        print(row)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a pre-subcommand value from being reset to the default
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="global seed for field sampling and benchmarks")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker fan-out for the benchmark sweep")
    parser = argparse.ArgumentParser(
        prog="smhc",
        description="Hamiltonian cycles via split-matching-width decompositions")
    parser.add_argument("--seed", type=int, default=0,
                        help="global seed for field sampling and benchmarks")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker fan-out for the benchmark sweep")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("decompose", help="emit an sm decomposition as JSON")
    p.add_argument("file")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("width", help="print the sm-width of the input")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--approx", action="store_true")
    p.set_defaults(fn=cmd_width)

    p = sub.add_parser("hc", help="decide Hamiltonicity (exit 0 yes, 1 no)")
    p.add_argument("file")
    p.add_argument("--decomposition", help="JSON decomposition to use")
    p.set_defaults(fn=cmd_hc)

    p = sub.add_parser("verify", help="run the brute-force oracle sweep")
    p.add_argument("file")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="CSV benchmark sweep")
    p.add_argument("--n", required=True, help="comma-separated sizes")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--k", help="comma-separated cut sizes (grid family)")
    p.add_argument("--family", choices=["random", "grid"], default="random")
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeLimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
