"""Command-line front end.

Subcommands: classify, solve, verify, table, census. All structured output
is a single JSON report (sorted keys, so identical inputs give identical
bytes); --format text renders the same report as prose. Exit codes: 0 ok,
1 usage or parse error, 2 verdict mismatch / invariant violation / invalid
witness, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import census as census_mod
from .construct import (
    solve_constructive,
    solve_constructive_to,
)
from .errors import (
    CapacityExceeded,
    IllegalMoveAt,
    NotDoublyFree,
    NotSolvableStart,
    ParseError,
    PreconditionFailed,
    SolitaireError,
)
from .families import cycle_graph, cycle_order, is_star_shape, path_graph, path_order
from .graphio import (
    classification_to_json,
    family_graph,
    parse_graph,
    serialize_graph,
    witness_from_json,
    witness_to_json,
)
from .invariants import (
    classify_cycle,
    classify_path,
    doubly_free_predicate,
    star_certificate,
)
from .model import Graph, MoveSequence, replay, trace
from .oracle import (
    Verdict,
    classify,
    estimate_state_bytes,
    min_unjumps,
    solve_from,
    witness_to,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAPACITY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_bytes(text: str) -> int:
    t = text.strip()
    factor = 1
    for suffix, f in (("GiB", 1 << 30), ("MiB", 1 << 20), ("KiB", 1 << 10),
                      ("G", 1 << 30), ("M", 1 << 20), ("K", 1 << 10)):
        if t.endswith(suffix):
            factor = f
            t = t[: -len(suffix)]
            break
    try:
        return int(float(t) * factor)
    except ValueError:
        raise UsageError(f"cannot parse byte size {text!r}")


def load_graph_spec(spec: str) -> Graph:
    """Named family, or a file holding an edge list."""
    fam = family_graph(spec)
    if fam is not None:
        return fam
    if spec == "-":
        return parse_graph(sys.stdin.read())
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_graph(fh.read())
    raise ParseError(
        f"{spec!r} is neither a family spec (path:N, cycle:N, star:N, "
        "doublestar:L,R, H) nor a readable file"
    )


def _closed_form_for(g: Graph):
    """(kind, verdict-ish dict) per shape, or None for general graphs."""
    if g.n >= 4 and is_star_shape(g):
        out = {"verdict": Verdict.NOT_SOLVABLE.value}
        if g.n <= 14:  # exhaustive 2^n certificate check only at desk scale
            report = star_certificate(g.n).verify()
            out["certificate"] = {
                "leaf_count_preserved": report.leaf_count_always_preserved,
                "center_toggled": report.center_always_toggled,
                "proves_not_solvable": report.proves_not_solvable,
            }
        return "star", out
    order = path_order(g)
    if order is not None:
        v = classify_path(g.n)
        kind = "path"
    else:
        order = cycle_order(g)
        if order is None:
            return None
        v = classify_cycle(g.n)
        kind = "cycle"
    starts = sorted(order[p - 1] for p in v.admissible_starts)
    matrix = {
        str(order[p - 1]): sorted(order[q - 1] for q in v.end_pegs[p])
        for p in v.admissible_starts
    }
    return kind, {"verdict": v.level.value, "starts": starts, "matrix": matrix}


def cmd_classify(args, report: dict) -> int:
    g = load_graph_spec(args.graph)
    report["input"] = {"spec": args.graph, "graph": serialize_graph(g)}
    results: dict = {}
    report["results"] = results
    closed = _closed_form_for(g)
    if closed is not None:
        results["closed_form"] = {"shape": closed[0], **closed[1]}
    if g.max_degree() >= 3 and not is_star_shape(g):
        results["doubly_free_predicate"] = doubly_free_predicate(g)
    oracle_cls = None
    try:
        oracle_cls = classify(g, args.memory_budget)
        results["oracle"] = classification_to_json(g, oracle_cls)
        del results["oracle"]["graph"]
        report["memory"] = {
            "budget": args.memory_budget,
            "estimated_bytes": estimate_state_bytes(g.n),
        }
    except CapacityExceeded as exc:
        results["oracle"] = None
        results["capacity_exceeded"] = str(exc)
        if closed is None:
            report["error"] = str(exc)
            return EXIT_CAPACITY
    checks = []
    report["cross_checks"] = checks
    if oracle_cls is not None and closed is not None:
        match = oracle_cls.verdict.value == closed[1]["verdict"]
        if "matrix" in closed[1]:
            oracle_matrix = {
                str(h): sorted(oracle_cls.matrix[h])
                for h in oracle_cls.matrix
                if oracle_cls.matrix[h]
            }
            match = match and oracle_matrix == closed[1]["matrix"]
        checks.append({"kind": "oracle-vs-closed-form", "match": match})
    if oracle_cls is not None and "doubly_free_predicate" in results:
        full = frozenset(g.vertices())
        oracle_doubly = all(oracle_cls.matrix[h] == full for h in oracle_cls.matrix)
        checks.append(
            {
                "kind": "doubly-free-predicate-vs-oracle",
                "match": results["doubly_free_predicate"] == oracle_doubly,
            }
        )
    if any(not c["match"] for c in checks):
        return EXIT_MISMATCH
    return EXIT_OK


def _witness_payload(g: Graph, seq: MoveSequence, want_trace: bool) -> dict:
    final = replay(g, seq)  # every reported witness must replay
    payload = {
        "witness": witness_to_json(seq),
        "moves": len(seq.moves),
        "unjumps": seq.unjump_count(),
        "final_pegs": sorted(final.peg_vertices()),
    }
    if want_trace:
        payload["trace"] = [sorted(c.peg_vertices()) for c in trace(g, seq)]
    return payload


def cmd_solve(args, report: dict) -> int:
    g = load_graph_spec(args.graph)
    report["input"] = {
        "spec": args.graph,
        "graph": serialize_graph(g),
        "hole": args.hole,
        "method": args.method,
    }
    if args.target is not None:
        report["input"]["target"] = args.target
    results: dict = {}
    report["results"] = results
    seq = None
    if args.method == "oracle":
        report["memory"] = {
            "budget": args.memory_budget,
            "estimated_bytes": estimate_state_bytes(g.n, witness=True),
        }
        if args.target is None:
            res = solve_from(g, args.hole, args.memory_budget)
            if res is not None:
                seq = res.witness
                results["end_pegs"] = sorted(res.end_pegs)
        else:
            seq = witness_to(g, args.hole, args.target, args.memory_budget)
    elif args.method == "min-unjumps":
        if args.target is not None:
            raise UsageError("--target is not supported with --method min-unjumps")
        report["memory"] = {
            "budget": args.memory_budget,
            "estimated_bytes": estimate_state_bytes(g.n, witness=True),
        }
        res = min_unjumps(g, args.hole, args.memory_budget)
        if res is not None:
            seq = res.witness
            results["min_unjumps"] = res.count
    else:  # constructive
        try:
            if g.n >= 4 and is_star_shape(g):
                results["reason"] = "stars are not solvable"
            elif args.target is not None:
                seq = solve_constructive_to(g, args.hole, args.target)
            else:
                seq = census_mod.line_solver_witness(g, args.hole)
                if seq is None:
                    seq = solve_constructive(g, args.hole)
        except NotSolvableStart as exc:
            results["reason"] = str(exc)
        except NotDoublyFree as exc:
            results["reason"] = f"not doubly freely solvable: {exc}"
    if seq is None:
        results.setdefault("solvable", False)
    else:
        results["solvable"] = True
        results.update(_witness_payload(g, seq, args.trace))
    if seq is not None and args.cross_check:
        res = solve_from(g, args.hole, args.memory_budget)
        final = sorted(replay(g, seq).peg_vertices())
        ok = res is not None and final[0] in res.end_pegs
        report["cross_checks"] = [{"kind": "oracle-replay", "match": ok}]
        if not ok:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, report: dict) -> int:
    g = load_graph_spec(args.graph)
    with open(args.witness) as fh:
        seq = witness_from_json(json.load(fh))
    report["input"] = {"spec": args.graph, "witness_file": args.witness}
    try:
        final = replay(g, seq)
    except IllegalMoveAt as exc:
        report["results"] = {"legal": False, "illegal_move_index": exc.index,
                             "message": str(exc)}
        return EXIT_MISMATCH
    payload = {"legal": True, "final_pegs": sorted(final.peg_vertices()),
               "moves": len(seq.moves), "unjumps": seq.unjump_count()}
    if args.trace:
        payload["trace"] = [sorted(c.peg_vertices()) for c in trace(g, seq)]
    report["results"] = payload
    return EXIT_OK


def cmd_table(args, report: dict) -> int:
    lo = 2 if args.family == "path" else 3
    rows = []
    mismatches = 0
    for n in range(lo, args.max_n + 1):
        v = classify_path(n) if args.family == "path" else classify_cycle(n)
        row = {
            "n": n,
            "verdict": v.level.value,
            "starts": sorted(v.admissible_starts),
            "ends": {str(h): sorted(v.end_pegs[h]) for h in sorted(v.end_pegs)},
        }
        g = path_graph(n) if args.family == "path" else cycle_graph(n)
        try:
            cls = classify(g, args.memory_budget)
            starts = sorted(h for h in cls.matrix if cls.matrix[h])
            ends = {str(h): sorted(cls.matrix[h]) for h in starts}
            row["oracle_verdict"] = cls.verdict.value
            row["match"] = (
                cls.verdict.value == row["verdict"]
                and starts == row["starts"]
                and ends == row["ends"]
            )
            if not row["match"]:
                mismatches += 1
        except CapacityExceeded:
            row["oracle_verdict"] = None
            row["match"] = None
        rows.append(row)
    report["results"] = {"family": args.family, "rows": rows}
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_census(args, report: dict) -> int:
    tasks: list[tuple[int, tuple]] = []
    for n in range(2, args.max_n + 1):
        for g in census_mod.labeled_connected_graphs(n):
            tasks.append((n, tuple(g.sorted_edges())))
    if args.samples:
        lo, hi = args.n_range
        rng = random.Random(args.seed)
        for _ in range(args.samples):
            g = census_mod.sample_solver_graph(rng, lo, hi)
            tasks.append((g.n, tuple(g.sorted_edges())))
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            records = list(pool.map(census_mod.check_graph_edges, tasks, chunksize=256))
    else:
        records = [census_mod.check_graph_edges(t) for t in tasks]
    by_shape: dict[str, int] = {}
    by_verdict: dict[str, int] = {}
    failures = []
    for rec in records:
        by_shape[rec["shape"]] = by_shape.get(rec["shape"], 0) + 1
        by_verdict[rec["verdict"]] = by_verdict.get(rec["verdict"], 0) + 1
        if rec["failures"]:
            failures.append(rec)
    report["results"] = {
        "graphs_checked": len(records),
        "by_shape": dict(sorted(by_shape.items())),
        "by_verdict": dict(sorted(by_verdict.items())),
        "counterexamples": failures,
    }
    return EXIT_MISMATCH if failures else EXIT_OK


def _render_text(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines += _render_text(v, indent + 1)
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags work before or after the subcommand; the subparser
    copies use SUPPRESS so they never clobber a value parsed earlier."""
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("json", "text"), default=d("json"))
    p.add_argument(
        "--memory-budget",
        default=d("2GiB"),
        help="state-table budget for the exact oracle (bytes; K/M/G suffixes)",
    )
    p.add_argument("--threads", type=int, default=d(1))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--timing", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="include wall-clock timing in the report")


def build_parser() -> _Parser:
    p = _Parser(prog="revpeg", description=__doc__)
    _add_global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add_command(name, help_text):
        c = sub.add_parser(name, help=help_text)
        _add_global_flags(c, suppress=True)
        return c

    c = add_command("classify", "oracle + closed-form classification")
    c.add_argument("graph")

    s = add_command("solve", "produce a replay-checked witness")
    s.add_argument("graph")
    s.add_argument("--hole", type=int, required=True)
    s.add_argument("--target", type=int)
    s.add_argument(
        "--method",
        choices=("oracle", "constructive", "min-unjumps"),
        default="constructive",
    )
    s.add_argument("--trace", action="store_true",
                   help="emit the configuration after every move")
    s.add_argument("--cross-check", action="store_true",
                   help="also run the oracle and compare")

    v = add_command("verify", "replay a serialized witness")
    v.add_argument("witness")
    v.add_argument("graph")
    v.add_argument("--trace", action="store_true")

    t = add_command("table", "closed-form vs oracle tables")
    t.add_argument("--family", choices=("path", "cycle"), required=True)
    t.add_argument("--max-n", type=int, default=12)

    n = add_command("census", "exhaustive + sampled trichotomy check")
    n.add_argument("--max-n", type=int, default=6)
    n.add_argument("--samples", type=int, default=0)
    n.add_argument("--n-range", default="7:10",
                   help="sampled graph sizes, LO:HI")
    return p


_COMMANDS = {
    "classify": cmd_classify,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "table": cmd_table,
    "census": cmd_census,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.memory_budget = _parse_bytes(args.memory_budget)
        if hasattr(args, "n_range") and isinstance(args.n_range, str):
            lo, _, hi = args.n_range.partition(":")
            args.n_range = (int(lo), int(hi or lo))
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report: dict = {"command": args.command}
    started = time.monotonic()
    try:
        code = _COMMANDS[args.command](args, report)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityExceeded as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (PreconditionFailed, NotSolvableStart, SolitaireError) as exc:
        report["error"] = f"{type(exc).__name__}: {exc}"
        code = EXIT_MISMATCH
    if args.timing:
        report["timing_ms"] = round((time.monotonic() - started) * 1000, 3)
    report["exit_code"] = code
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(report)))
    return code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
