"""Command-line driver: estimates, exact censuses, sampling, and graph6 scans."""

from __future__ import annotations

import argparse
import json
import math
import sys

from .counts import COMPUTE_MAX_N, compute_gn, embedded_table, graph_count
from .errors import InternalInvariantError, LightsOutError
from .exact import brute_force_universally_solvable, exact_counts
from .graph6 import parse_graph6, write_graph6
from .graphs import (Configuration, Graph, is_connected,
                     is_universally_solvable, solve_configuration)
from .montecarlo import (MODE_ALL, MODE_CONNECTED, EstimateRequest,
                         default_workers, run_estimate)
from .partitions import class_weight, partition_stream, representative_permutation
from .rng import TrialStream
from .sampling import pair_orbits, sample_uniform_connected_graph, \
    sample_uniform_graph

SCHEMA_VERSION = "1"

ESTIMATE_CSV_HEADER = ("n,mode,trials,seed,solvable_count,p_solvable,moe95,"
                       "connected_count,p_connected,elapsed_ms")
EXACT_CSV_HEADER = "n,total,solvable,connected,connected_solvable"
CHECK_CSV_HEADER = "index,n,graph6,solvable,connected"


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(payload_kind, request, payload):
    return json.dumps({"schema_version": SCHEMA_VERSION,
                       "command": payload_kind,
                       "request": request,
                       "result": payload}, indent=2) + "\n"


def _cmd_estimate(args):
    mode = MODE_CONNECTED if args.connected else MODE_ALL
    workers = args.workers if args.workers else default_workers()
    req = EstimateRequest(n=args.n, trials=args.trials, mode=mode,
                          seed=args.seed, workers=workers)
    res = run_estimate(req)
    elapsed_ms = round(res.elapsed_seconds * 1000)
    if args.format == "json":
        request = {"n": req.n, "mode": req.mode, "trials": req.trials,
                   "seed": req.seed, "workers": req.workers}
        payload = {"solvable_count": res.solvable_count,
                   "p_solvable": res.p_solvable,
                   "moe95": res.moe95,
                   "connected_count": res.connected_count,
                   "p_connected": res.p_connected,
                   "elapsed_ms": elapsed_ms}
        _emit(_json_doc("estimate", request, payload), args.out)
    else:
        conn_count = "" if res.connected_count is None else res.connected_count
        p_conn = "" if res.p_connected is None else f"{res.p_connected:.6f}"
        row = (f"{req.n},{req.mode},{req.trials},{req.seed},{res.solvable_count},"
               f"{res.p_solvable:.6f},{res.moe95:.6f},{conn_count},{p_conn},"
               f"{elapsed_ms}")
        _emit(f"{ESTIMATE_CSV_HEADER}\n{row}\n", args.out)
    return 0


def _cmd_exact(args):
    row = exact_counts(args.n)
    if args.format == "json":
        payload = {"n": row.n, "total": str(row.total),
                   "solvable": str(row.solvable),
                   "connected": str(row.connected),
                   "connected_solvable": str(row.connected_solvable)}
        _emit(_json_doc("exact", {"n": args.n}, payload), args.out)
    else:
        _emit(f"{EXACT_CSV_HEADER}\n{row.n},{row.total},{row.solvable},"
              f"{row.connected},{row.connected_solvable}\n", args.out)
    return 0


def _cmd_sample(args):
    lines = []
    records = []
    for i in range(args.count):
        rng = TrialStream(args.seed, i)
        if args.connected:
            g = sample_uniform_connected_graph(args.n, rng)
        else:
            g = sample_uniform_graph(args.n, rng)
        if args.format == "json":
            records.append({"n": g.n, "edges": sorted(list(e) for e in g.edges)})
        else:
            lines.append(write_graph6(g).decode("ascii"))
    if args.format == "json":
        request = {"n": args.n, "count": args.count, "seed": args.seed,
                   "connected": bool(args.connected)}
        _emit(_json_doc("sample", request, records), args.out)
    else:
        _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _cmd_gn(args):
    if args.n is None and args.max is None:
        raise ValueError("gn needs --n or --max")
    ns = [args.n] if args.n is not None else list(range(1, args.max + 1))
    values = [(n, graph_count(n, compute=args.compute)) for n in ns]
    if args.format == "json":
        payload = [{"n": n, "g_n": str(v)} for n, v in values]
        request = {"n": args.n, "max": args.max, "compute": bool(args.compute)}
        _emit(_json_doc("gn", request, payload), args.out)
    elif args.n is not None:
        _emit(f"{values[0][1]}\n", args.out)
    else:
        _emit("".join(f"{n} {v}\n" for n, v in values), args.out)
    return 0


def _read_graph6_file(path):
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield line


def _cmd_check(args):
    rows = []
    for idx, line in enumerate(_read_graph6_file(args.infile)):
        g = parse_graph6(line)
        rows.append((idx, g.n, line.decode("ascii"),
                     is_universally_solvable(g), is_connected(g)))
    if args.format == "json":
        payload = [{"index": i, "n": n, "graph6": s, "solvable": solv,
                    "connected": conn} for i, n, s, solv, conn in rows]
        _emit(_json_doc("check", {"in": args.infile}, payload), args.out)
    else:
        body = "".join(f"{i},{n},{s},{int(solv)},{int(conn)}\n"
                       for i, n, s, solv, conn in rows)
        _emit(f"{CHECK_CSV_HEADER}\n{body}", args.out)
    return 0


def _cmd_solve(args):
    try:
        on_set = [int(tok) for tok in args.config.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--config must be a comma list of labels, got {args.config!r}")
    lines = []
    for line in _read_graph6_file(args.infile):
        g = parse_graph6(line)
        press = solve_configuration(g, Configuration.from_vertices(g.n, on_set))
        if press is None:
            lines.append("unsolvable")
        else:
            lines.append(",".join(str(v) for v in sorted(press)))
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0


def _selfcheck():
    """Embedded invariant suite; raises InternalInvariantError on failure."""
    # Closed-form pair-orbit count vs. exhaustive orbits, every class, n <= 12.
    for n in range(1, 13):
        for p in partition_stream(n):
            cw = class_weight(p)
            orbits = pair_orbits(representative_permutation(p))
            if orbits.count != cw.c:
                raise InternalInvariantError(
                    f"orbit count mismatch for n={n}, partition {p.counts}")
        print(f"ok: pair-orbit closed form matches exhaustive orbits (n={n})")

    # Weight sums against the tabulated unlabeled-graph counts, n <= 11.
    table = embedded_table()
    for n in range(1, 12):
        total = sum(class_weight(p).weight for p in partition_stream(n))
        if total != math.factorial(n) * table.get(n):
            raise InternalInvariantError(f"weight sum mismatch at n={n}")
    print("ok: class weights sum to n! * g_n (n <= 11)")

    # Press simulation vs. matrix invertibility on every labeled graph, n <= 4.
    for n in range(1, 5):
        for bits in range(1 << (n * (n - 1) // 2)):
            g = Graph(n, bits)
            if brute_force_universally_solvable(g) != is_universally_solvable(g):
                raise InternalInvariantError(
                    f"oracle disagreement at n={n}, edge bits {bits}")
    print("ok: brute-force solvability matches invertibility (n <= 4)")


def _cmd_selfcheck(args):
    _selfcheck()
    print("selfcheck passed")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lightsout",
        description="Lights Out solvability on uniform random unlabeled graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, formats=("csv", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("estimate", help="Monte Carlo probability estimate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--connected", action="store_true",
                   help="sample connected graphs only (rejection)")
    p.add_argument("--workers", type=int, default=None)
    add_output_flags(p)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("exact", help="exact census of unlabeled graphs (n <= 8)")
    p.add_argument("--n", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("sample", help="emit uniformly sampled graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    add_output_flags(p, formats=("graph6", "json"))
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("gn", help="number of unlabeled graphs on n vertices")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--compute", action="store_true",
                   help=f"recompute from the partition sum (n <= {COMPUTE_MAX_N})")
    add_output_flags(p)
    p.set_defaults(func=_cmd_gn)

    p = sub.add_parser("check", help="solvable/connected verdicts for a graph6 file")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    add_output_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="press-set for a configuration on graph6 input")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE.g6")
    p.add_argument("--config", required=True,
                   help="comma-separated 1-based labels of lights that are on")
    p.add_argument("--out", metavar="FILE", default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("selfcheck", help="run the embedded invariant suite")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (LightsOutError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
