"""Command-line front end.

Subcommands: ``params``, ``enumerate``, ``count``, ``estimate``, ``verify``,
``formulas``, ``svg``, ``fixtures``.  Input is either a point file
(``--input``; plain text with one ``x y`` pair per line and ``#`` comments,
or JSON ``{"points": [[x, y], ...]}``) or a generator spec (``--gen``, e.g.
``convex:6``, ``grid:3x3``, ``random:7,42``).

Exit codes: 0 success, 1 usage or input error, 2 enumeration budget
exhausted, 3 verification mismatch, 4 internal invariant violation.

Structure streams and reports go to stdout and are byte-identical across
runs; wall-clock timing goes to stderr only.  ``--parallel`` fans the
search out over root subtrees with multiprocessing; results are merged in
a fixed order, so output is identical to the single-threaded mode.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .counting import (
    CountReport,
    convex_ham_count,
    convex_path_count,
    estimate,
    pseudotriangle_poly_count,
    pseudotriangle_surround_count,
)
from .families import FamilySpec
from .geom import InternalInvariantError, PointSet
from .oracle import brute_ham, brute_paths, brute_poly, brute_surround, cross_check
from .params import param_report
from .paths import EnumerationOutcome, enumerate_ham_paths, enumerate_paths
from .polygons import (
    enumerate_polygonalizations,
    enumerate_surrounding,
    hull_cycle,
    polygon_children,
)
from .svg import render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TRUNCATED = 2
EXIT_MISMATCH = 3
EXIT_INVARIANT = 4


class CliError(Exception):
    """Input or usage problem; message goes to stderr, exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise CliError(f"{self.prog}: {message}")


def parse_points_text(text: str) -> PointSet:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            col = raw.index(line) + 1
            raise CliError(
                f"line {lineno}, column {col}: expected 'x y', got {line!r}"
            )
        try:
            rows.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            bad = tokens[0] if not _is_int(tokens[0]) else tokens[1]
            col = raw.index(bad) + 1
            raise CliError(
                f"line {lineno}, column {col}: {bad!r} is not an integer"
            ) from None
    try:
        return PointSet(rows)
    except ValueError as e:
        raise CliError(str(e)) from None


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def parse_points_json(text: str) -> PointSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CliError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or "points" not in data:
        raise CliError('JSON input must be an object with a "points" array')
    pts = data["points"]
    if not isinstance(pts, list):
        raise CliError('"points" must be an array of [x, y] pairs')
    rows = []
    for i, entry in enumerate(pts):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
            raise CliError(f"points[{i}] must be a pair of integers, got {entry!r}")
        rows.append((entry[0], entry[1]))
    try:
        return PointSet(rows)
    except ValueError as e:
        raise CliError(str(e)) from None


def load_input(args) -> PointSet:
    if args.gen is not None:
        try:
            return FamilySpec.from_string(args.gen).build()
        except ValueError as e:
            raise CliError(str(e)) from None
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise CliError(str(e)) from None
    if text.lstrip().startswith("{"):
        return parse_points_json(text)
    return parse_points_text(text)


def _write_out(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


_ENUMERATORS = {
    "paths": enumerate_paths,
    "ham": enumerate_ham_paths,
    "surround": enumerate_surrounding,
    "poly": enumerate_polygonalizations,
}


def _subtree_worker(task) -> tuple[int, int, bool, list | None]:
    points, kind, roots, collect = task
    s = PointSet(points)
    collected: list | None = [] if collect else None
    sink = collected.append if collect else None
    if kind in ("paths", "ham"):
        fn = enumerate_paths if kind == "paths" else enumerate_ham_paths
        outcome = fn(s, sink, _starts=roots)
    else:
        fn = enumerate_surrounding if kind == "surround" else enumerate_polygonalizations
        outcome = fn(s, sink, _roots=roots)
    return outcome.count, outcome.nodes_visited, outcome.truncated, collected


def _run_enumeration(s: PointSet, kind: str, budget: int | None,
                     parallel: int | None, collect: bool):
    """Returns (outcome, structures or None)."""
    if parallel is None or parallel <= 1 or s.n == 0:
        collected: list | None = [] if collect else None
        sink = collected.append if collect else None
        outcome = _ENUMERATORS[kind](s, sink, budget)
        return outcome, collected
    if budget is not None:
        raise CliError("--budget requires single-process (deterministic) mode")
    import multiprocessing

    if kind in ("paths", "ham"):
        roots = [[i] for i in range(s.n)]
        prefix_count = 0
        prefix_nodes = 0
        prefix: list = []
    else:
        probe = _ENUMERATORS[kind](s, budget=0)
        if probe.degenerate:
            return EnumerationOutcome(0, 0, degenerate=True), ([] if collect else None)
        root = hull_cycle(s)
        kids = polygon_children(s, root)
        roots = [[k] for k in kids]
        emit_root = kind == "surround" or len(root) == s.n
        prefix_count = 1 if emit_root else 0
        prefix_nodes = 1
        prefix = [root] if (collect and emit_root) else []
    points = tuple(tuple(p) for p in s.points)
    tasks = [(points, kind, r, collect) for r in roots]
    total_count, total_nodes, truncated = prefix_count, prefix_nodes, False
    structures: list | None = list(prefix) if collect else None
    if tasks:
        with multiprocessing.Pool(processes=parallel) as pool:
            for count, nodes, trunc, chunk in pool.map(_subtree_worker, tasks):
                total_count += count
                total_nodes += nodes
                truncated = truncated or trunc
                if collect:
                    structures.extend(chunk)
    return EnumerationOutcome(total_count, total_nodes, truncated), structures


def _fmt_structure(seq: Sequence[int]) -> str:
    return ",".join(str(i) for i in seq)


def cmd_params(args) -> int:
    s = load_input(args)
    if s.n == 0:
        raise CliError("params needs a nonempty point set")
    report = param_report(s)
    if args.format == "json":
        _write_out(args, json.dumps(report.to_json_dict()) + "\n")
    else:
        d = report.to_json_dict()
        wl = d["witness_line"]
        _write_out(args, (
            f"n={d['n']} offline={d['offline']} inhull={d['inhull']} m={d['m']} "
            f"max_collinear={d['max_collinear']} "
            f"witness_line={'-' if wl is None else _fmt_structure(wl)}\n"
        ))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    s = load_input(args)
    t0 = time.perf_counter()
    outcome, structures = _run_enumeration(
        s, args.kind, args.budget, args.parallel, collect=True)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        payload = {
            "kind": args.kind,
            **outcome.to_json_dict(),
            "structures": [list(seq) for seq in structures],
        }
        _write_out(args, json.dumps(payload) + "\n")
    else:
        lines = [_fmt_structure(seq) for seq in structures]
        summary = (
            f"# count={outcome.count} nodes_visited={outcome.nodes_visited} "
            f"truncated={str(outcome.truncated).lower()}"
        )
        _write_out(args, "".join(line + "\n" for line in lines) + summary + "\n")
    print(f"elapsed={elapsed:.3f}s", file=sys.stderr)
    return EXIT_TRUNCATED if outcome.truncated else EXIT_OK


def cmd_count(args) -> int:
    s = load_input(args)
    t0 = time.perf_counter()
    outcome, _ = _run_enumeration(s, args.kind, args.budget, args.parallel,
                                  collect=False)
    elapsed = time.perf_counter() - t0
    ratio = outcome.nodes_visited / outcome.count if outcome.count else None
    if args.format == "json":
        payload = {"kind": args.kind, **outcome.to_json_dict(),
                   "nodes_per_structure": ratio}
        _write_out(args, json.dumps(payload) + "\n")
    else:
        _write_out(args, (
            f"kind={args.kind} count={outcome.count} "
            f"nodes_visited={outcome.nodes_visited} "
            f"nodes_per_structure={'-' if ratio is None else format(ratio, '.3f')} "
            f"truncated={str(outcome.truncated).lower()}\n"
        ))
    print(f"elapsed={elapsed:.3f}s", file=sys.stderr)
    return EXIT_TRUNCATED if outcome.truncated else EXIT_OK


def cmd_estimate(args) -> int:
    s = load_input(args)
    if s.n == 0:
        raise CliError("estimate needs a nonempty point set")
    report = estimate(s)
    payload = report.to_json_dict()
    if args.empirical:
        counts, ratios = _empirical(s, report, args.budget)
        payload["counts"] = counts.to_json_dict()
        payload["log2_count_over_scale"] = ratios
    if args.format == "json":
        _write_out(args, json.dumps(payload) + "\n")
    else:
        keys = ["n", "offline", "inhull", "m", "path_scale", "ham_scale",
                "poly_scale", "proven_ham_lower_log2"]
        line = " ".join(f"{k}={_fmt_number(payload[k])}" for k in keys)
        extra = ""
        if args.empirical:
            extra = "".join(
                f"\nempirical_{k}={_fmt_number(v)}"
                for k, v in sorted(payload["log2_count_over_scale"].items())
            )
        _write_out(args, line + extra + "\n")
    return EXIT_OK


def _fmt_number(v) -> str:
    if isinstance(v, float):
        return format(v, ".6g")
    return str(v)


def _empirical(s: PointSet, report, budget: int | None):
    import math

    counts = {}
    for kind in ("paths", "ham", "surround", "poly"):
        outcome, _ = _run_enumeration(s, kind, budget, None, collect=False)
        counts[kind] = None if outcome.truncated else outcome.count
    count_report = CountReport(path=counts["paths"], ham=counts["ham"],
                               surround=counts["surround"], poly=counts["poly"])
    scales = {"paths": report.path_scale, "ham": report.ham_scale,
              "surround": report.poly_scale, "poly": report.poly_scale}
    ratios = {}
    for kind, count in counts.items():
        scale = scales[kind]
        if count and scale > 0:
            ratios[kind] = math.log2(count) / scale
    return count_report, ratios


def cmd_verify(args) -> int:
    s = load_input(args)
    try:
        report = cross_check(s, args.oracle_limit)
    except ValueError as e:
        raise CliError(str(e)) from None
    if args.format == "json":
        _write_out(args, json.dumps(report.to_json_dict()) + "\n")
    else:
        lines = []
        for kind, check in report.classes.items():
            status = "match" if check.match else "MISMATCH"
            line = (f"{kind}: oracle={check.oracle_count} "
                    f"enumerator={check.enum_count} {status}")
            if check.witness is not None:
                line += f" witness={_fmt_structure(check.witness)}"
            lines.append(line)
        lines.append("VERIFY " + ("OK" if report.all_match else "MISMATCH"))
        _write_out(args, "".join(line + "\n" for line in lines))
    return EXIT_OK if report.all_match else EXIT_MISMATCH


_FORMULAS = {
    "convex-ham": (convex_ham_count, 2),
    "convex-path": (convex_path_count, 1),
    "pseudo-poly": (pseudotriangle_poly_count, 3),
    "pseudo-surround": (pseudotriangle_surround_count, 3),
}


def cmd_formulas(args) -> int:
    try:
        lo, _, hi = args.n_range.partition("..")
        lo, hi = int(lo), int(hi or lo)
    except ValueError:
        raise CliError(f"cannot parse range {args.n_range!r}; use e.g. 3..12") from None
    fn, min_n = _FORMULAS[args.family]
    if lo < min_n:
        raise CliError(f"{args.family} is defined for n >= {min_n}")
    if hi < lo:
        raise CliError("empty range")
    values = {n: fn(n) for n in range(lo, hi + 1)}
    if args.format == "json":
        _write_out(args, json.dumps(
            {"family": args.family, "values": {str(n): v for n, v in values.items()}}
        ) + "\n")
    else:
        _write_out(args, "".join(f"{n} {v}\n" for n, v in values.items()))
    return EXIT_OK


def cmd_svg(args) -> int:
    s = load_input(args)
    overlay = None
    if args.overlay:
        try:
            overlay = [int(v) for v in args.overlay.split(",")]
        except ValueError:
            raise CliError(f"cannot parse overlay {args.overlay!r}") from None
    try:
        payload = render_svg(s, overlay, args.overlay_kind)
    except ValueError as e:
        raise CliError(str(e)) from None
    _write_out(args, payload)
    return EXIT_OK


FIXTURE_INSTANCES = {
    "convex4": "convex:4",
    "convex5": "convex:5",
    "convex6": "convex:6",
    "pseudotriangle4": "pseudotriangle:4",
    "pseudotriangle5": "pseudotriangle:5",
    "pseudotriangle6": "pseudotriangle:6",
    "collinear5": "collinear:5",
    "one_sided_4_3": "one_sided:4,3",
    "square_center": None,  # literal points below
    "grid3x3": "grid:3x3",
}

SQUARE_CENTER = ((0, 0), (4, 0), (4, 4), (0, 4), (2, 2))


def fixture_point_set(name: str) -> PointSet:
    spec = FIXTURE_INSTANCES[name]
    if spec is None:
        return PointSet(SQUARE_CENTER)
    return FamilySpec.from_string(spec).build()


def cmd_fixtures(args) -> int:
    limit = args.oracle_limit
    out: dict = {"oracle_limit": limit, "instances": {}}
    for name, spec in FIXTURE_INSTANCES.items():
        s = fixture_point_set(name)
        if s.n > limit:
            continue
        counts = {
            "path": brute_paths(s, limit)[0],
            "ham": brute_ham(s, limit)[0],
            "surround": brute_surround(s, limit)[0],
            "poly": brute_poly(s, limit)[0],
        }
        out["instances"][name] = {
            "gen": spec,
            "points": [list(p) for p in s.points],
            "counts": counts,
        }
    _write_out(args, json.dumps(out, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="noncross", description=__doc__.splitlines()[0]
                     if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--input", metavar="FILE",
                           help="point file (text 'x y' lines or JSON); '-' for stdin")
        group.add_argument("--gen", metavar="SPEC",
                           help="generator spec, e.g. convex:6 or random:7,42")

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="FILE", help="write output to FILE")

    p = sub.add_parser("params", help="structural parameters of the input")
    add_input(p)
    add_common(p)
    p.set_defaults(fn=cmd_params)

    for name, helptext in (("enumerate", "list structures, one per line"),
                           ("count", "count structures without listing them")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("kind", choices=("paths", "ham", "surround", "poly"))
        add_input(p)
        add_common(p)
        p.add_argument("--budget", type=int, metavar="N",
                       help="abort after N search-tree nodes (exit code 2)")
        p.add_argument("--deterministic", action="store_true",
                       help="single-threaded depth-first order (the default)")
        p.add_argument("--parallel", type=int, metavar="W",
                       help="distribute root subtrees over W worker processes")
        p.set_defaults(fn=cmd_enumerate if name == "enumerate" else cmd_count)

    p = sub.add_parser("estimate", help="log-scale count estimates")
    add_input(p)
    add_common(p)
    p.add_argument("--empirical", action="store_true",
                   help="also enumerate and report log2(count)/scale ratios")
    p.add_argument("--budget", type=int, metavar="N",
                   help="node budget for --empirical enumeration")
    p.set_defaults(fn=cmd_estimate)

    p = sub.add_parser("verify", help="cross-check enumerators against oracles")
    add_input(p)
    add_common(p)
    p.add_argument("--oracle-limit", type=int, default=8, metavar="N")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("formulas", help="closed-form count tables")
    p.add_argument("--family", choices=sorted(_FORMULAS), required=True)
    p.add_argument("--n", dest="n_range", required=True, metavar="A..B")
    add_common(p)
    p.set_defaults(fn=cmd_formulas)

    p = sub.add_parser("svg", help="render the point set as standalone SVG")
    add_input(p)
    p.add_argument("--overlay", metavar="I,J,K",
                   help="comma-separated structure to draw on top")
    p.add_argument("--overlay-kind", choices=("path", "polygon"), default="path")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_svg, format="svg")

    p = sub.add_parser("fixtures", help="emit oracle counts for the named instances")
    p.add_argument("--oracle-limit", type=int, default=9, metavar="N")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_fixtures, format="json")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as e:
        print(f"internal invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


def entry() -> None:
    sys.exit(main())
