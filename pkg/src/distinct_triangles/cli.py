"""Command line interface.

Usage::

    distinct-triangles count square.txt --classes
    distinct-triangles classify kite.txt
    distinct-triangles ngon 9 --list
    distinct-triangles search --circle 10 --n 5 --format json
    distinct-triangles search --grid 5 --exactly 1
    distinct-triangles verify theorem2
    distinct-triangles render hexagon.txt -o hexagon.svg

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 semantic error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from typing import List, Optional

from distinct_triangles import __version__
from distinct_triangles.circle import count_partitions3, nearest_integer_n2_over_12, partitions3
from distinct_triangles.congruence import distinct_triangles
from distinct_triangles.geometry import GeometryError
from distinct_triangles.pointfile import POINTS, PointFileError, PointSet, read
from distinct_triangles.quads import case_bound, classify_quad
from distinct_triangles.search import (
    DEFAULT_WITNESSES,
    SearchError,
    build_ground_set,
    exactly_t_subsets,
    max_points_with_exactly,
    min_triangles,
    similarity_classes,
)
from distinct_triangles.svg import render_svg
from distinct_triangles.verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3
SCHEMA = 1

log = logging.getLogger("distinct_triangles")


class SemanticError(Exception):
    pass


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _load(path: str) -> PointSet:
    try:
        return read(path)
    except OSError as exc:
        raise SemanticError(f"cannot read {path}: {exc.strerror}") from None


# --- commands -------------------------------------------------------------------

def cmd_count(args) -> dict:
    ps = _load(args.input)
    try:
        classes = ps.classes()
    except GeometryError as exc:
        raise SemanticError(str(exc)) from None
    report = {"command": "count", "kind": ps.kind, "n": len(ps), "distinct_triangle_count": classes.count}
    if args.classes:
        report["classes"] = [list(sig) for sig in classes.sorted_classes()]
    if classes.count == 0:
        print("warning: no noncollinear triple", file=sys.stderr)
    return report


def _text_count(r: dict) -> str:
    lines = [f"points: {r['n']}", f"distinct triangles: {r['distinct_triangle_count']}"]
    for sig in r.get("classes", []):
        lines.append("  " + " ".join(str(s) for s in sig))
    return "\n".join(lines)


def cmd_classify(args) -> dict:
    ps = _load(args.input)
    if ps.kind != POINTS:
        raise SemanticError(f"classify needs a 'points' file, got '{ps.kind}'")
    if len(ps) != 4:
        raise SemanticError(f"classify needs exactly 4 points, got {len(ps)}")
    try:
        case = classify_quad(ps.points)
    except GeometryError as exc:
        raise SemanticError(str(exc)) from None
    bound = case_bound(case).min_distinct_triangles
    actual = distinct_triangles(ps.points).count
    return {
        "command": "classify",
        "case": case.tag.value,
        "flags": {
            "is_rectangle": case.is_rectangle,
            "is_square": case.is_square,
            "is_isosceles_trapezoid": case.is_isosceles_trapezoid,
        },
        "bound": bound,
        "actual": actual,
        "bound_respected": actual >= bound,
    }


def _text_classify(r: dict) -> str:
    flags = [k for k, v in r["flags"].items() if v]
    case = r["case"] + (f"({', '.join(flags)})" if flags else "")
    status = "ok" if r["bound_respected"] else "VIOLATED"
    return f"case: {case}\nbound: {r['bound']}\nactual: {r['actual']}\nbound {status}"


def cmd_ngon(args) -> dict:
    n = args.n
    if n < 3:
        raise SemanticError("n must be at least 3")
    p = count_partitions3(n)
    rounded = nearest_integer_n2_over_12(n)
    report = {"command": "ngon", "n": n, "p_n_3": p, "nearest_n2_over_12": rounded, "agree": p == rounded}
    if args.list:
        report["partitions"] = [list(t) for t in partitions3(n)]
    return report


def _text_ngon(r: dict) -> str:
    lines = [f"n = {r['n']}", f"p(n,3) = {r['p_n_3']}", f"[n^2/12] = {r['nearest_n2_over_12']}",
             f"agree: {'yes' if r['agree'] else 'no'}"]
    for t in r.get("partitions", []):
        lines.append("  " + "+".join(map(str, t)))
    return "\n".join(lines)


def cmd_search(args) -> dict:
    try:
        if args.grid is not None:
            ground = build_ground_set("grid", k=args.grid)
        elif args.circle is not None:
            ground = build_ground_set("circle", D=args.circle, with_center=args.center)
        else:
            ground = build_ground_set("lattice", r=args.lattice)
        common = dict(max_witnesses=args.witnesses, jobs=args.jobs)
        if args.exactly is not None and args.n is None:
            row = max_points_with_exactly(ground, args.exactly, args.budget, **common)
            report = {"command": "search", "mode": "max_points_with_exactly", **row.to_dict(ground)}
            report["all_witness_sites"] = [[ground.site_label(i) for i in w] for w in row.witnesses]
            witnesses = row.witnesses
        elif args.exactly is not None:
            res = exactly_t_subsets(ground, args.n, args.exactly, args.budget, **common)
            report = {"command": "search", "mode": "exactly", **res.to_dict(ground)}
            witnesses = res.witnesses
        else:
            res = min_triangles(ground, args.n, args.budget, cutoff=args.cutoff, **common)
            report = {"command": "search", "mode": "min_triangles", **res.to_dict(ground)}
            witnesses = res.witnesses
        report["witnesses_distinct_up_to"] = "congruence"
        similar = similarity_classes(ground, witnesses)
        if similar is not None:
            report["witness_similarity_classes"] = similar
    except SearchError as exc:
        raise SemanticError(str(exc)) from None
    return report


def _text_search(r: dict) -> str:
    if r["mode"] == "max_points_with_exactly":
        lines = [f"ground: {r['exhaustive_over']}", f"t = {r['t']}",
                 f"max points with exactly t triangles: {r['max_n']}"]
        for w in r.get("all_witness_sites", []):
            lines.append("witness: " + ", ".join(w))
    else:
        lines = [f"ground: {r['ground']}", f"n = {r['n']}"]
        label = "best count" if r["mode"] == "min_triangles" else f"subsets with exactly {r['cutoff']}"
        value = r["best_count"] if r["best_count"] is not None else "none"
        lines.append(f"{label}: {value}")
        for w in r.get("witness_sites", []):
            lines.append("witness: " + ", ".join(w))
        lines.append(f"nodes explored: {r['nodes_explored']}")
    msg = "witnesses are pairwise non-congruent"
    if "witness_similarity_classes" in r:
        msg += f"; {r['witness_similarity_classes']} up to similarity"
    lines.append(msg)
    lines.append(f"exhaustive over {r.get('ground', r.get('exhaustive_over'))}" if r["exhaustive"]
                 else "TRUNCATED by budget: not exhaustive")
    return "\n".join(lines)


def cmd_verify(args) -> dict:
    progress = (lambda msg: log.info(msg)) if args.verbose else None
    checks = run_suite(args.suite, seed=args.seed, jobs=args.jobs, progress=progress)
    return {
        "command": "verify",
        "suite": args.suite,
        "ok": all(c.ok for c in checks),
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
    }


def _text_verify(r: dict) -> str:
    lines = [f"{'PASS' if c['ok'] else 'FAIL'} {c['name']}: {c['detail']}" for c in r["checks"]]
    lines.append(f"suite {r['suite']}: {'passed' if r['ok'] else 'FAILED'}")
    return "\n".join(lines)


def cmd_render(args) -> dict:
    ps = _load(args.input)
    try:
        ps.check()
    except GeometryError as exc:
        raise SemanticError(str(exc)) from None
    if len(ps) < 1:
        raise SemanticError("nothing to draw")
    svg = render_svg(ps)
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise SemanticError(f"cannot write {args.output}: {exc.strerror}") from None
    n = len(ps)
    return {"command": "render", "output": args.output, "vertices": n, "segments": n * (n - 1) // 2}


def _text_render(r: dict) -> str:
    return f"wrote {r['output']}: {r['vertices']} vertices, {r['segments']} segments"


COMMANDS = {
    "count": (cmd_count, _text_count),
    "classify": (cmd_classify, _text_classify),
    "ngon": (cmd_ngon, _text_ngon),
    "search": (cmd_search, _text_search),
    "verify": (cmd_verify, _text_verify),
    "render": (cmd_render, _text_render),
}


# --- argument parsing ----------------------------------------------------------

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--log", metavar="PATH", default=default(None),
                        help="append a JSON run record to PATH")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for randomized suites")
    parser.add_argument("--jobs", type=int, default=default(1), help="search worker processes")
    parser.add_argument("-v", "--verbose", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distinct-triangles",
                                     description="Count distinct triangles determined by planar point sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count distinct triangles of a point file")
    p.add_argument("input")
    p.add_argument("--classes", action="store_true", help="list every triangle class")

    p = sub.add_parser("classify", parents=[common], help="classify a 4-point set")
    p.add_argument("input")

    p = sub.add_parser("ngon", parents=[common], help="triangle count of the regular n-gon")
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true", help="list the partitions of n into three parts")

    p = sub.add_parser("search", parents=[common], help="extremal subset search over a ground set")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--grid", type=int, metavar="K", help="K x K integer grid")
    g.add_argument("--circle", type=int, metavar="D", help="D equally spaced points on a circle")
    g.add_argument("--lattice", type=int, metavar="R", help="triangular lattice ball of radius R")
    p.add_argument("--center", action="store_true", help="add the circle centre")
    p.add_argument("--n", type=int, help="subset size")
    p.add_argument("--exactly", type=int, metavar="T", help="subsets with exactly T triangles")
    p.add_argument("--cutoff", type=int, help="only consider subsets with at most this many triangles")
    p.add_argument("--budget", type=int, help="maximum search nodes")
    p.add_argument("--witnesses", type=int, default=DEFAULT_WITNESSES, help="maximum witnesses kept")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)

    p = sub.add_parser("render", parents=[common], help="draw a configuration as SVG")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    return parser


def _append_record(path: str, args, result: Optional[dict], exit_code: int, wall: float) -> None:
    params = {k: v for k, v in vars(args).items() if k not in ("log", "format", "verbose")}
    record = {
        "schema": SCHEMA,
        "command": args.command,
        "parameters": params,
        "result": result,
        "exit_code": exit_code,
        "wall_time": round(wall, 6),
        "version": __version__,
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(_jsonable(record), sort_keys=True) + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command == "search" and args.n is None and args.exactly is None:
        parser.error("search needs --n and/or --exactly")
    run, text = COMMANDS[args.command]

    start = time.perf_counter()
    result = None
    try:
        result = run(args)
        code = EXIT_OK
        if args.command == "verify" and not result["ok"]:
            code = EXIT_FAIL
        if args.command == "classify" and not result["bound_respected"]:
            code = EXIT_FAIL
    except PointFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except (SemanticError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_SEMANTIC

    if result is not None:
        result = {"schema": SCHEMA, **result}
        if args.format == "json":
            print(json.dumps(_jsonable(result), indent=2, sort_keys=True))
        else:
            print(text(result))
    if args.log:
        _append_record(args.log, args, result, code, time.perf_counter() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
