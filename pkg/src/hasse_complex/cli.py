"""Command-line tool for OFF surface meshes.

Exit status: 0 success / PASS, 1 domain failure (FAIL, non-orientable,
refused collapse), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections import Counter

from .errors import (
    ComplexError,
    LinkConditionError,
    NonManifoldError,
    OffParseError,
)
from .mesh import (
    POSITION_POLICIES,
    collapse_edge,
    link_condition,
    load_off,
    orient,
    vertex_tangent,
    write_off,
)
from .simplexset import SimplexSet

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _fmt_set(s: SimplexSet) -> str:
    return " ".join("{" + ",".join(map(str, x.name)) + "}" for x in sorted(s, key=lambda x: (x.level, x.name)))


def _counts_line(mesh) -> str:
    V, E, F = mesh.counts().levels
    return f"V={V} E={E} F={F}"


def _load(path):
    if not os.path.isfile(path):
        raise _UsageError(f"cannot read {path}")
    return load_off(path)


def _edge(mesh, keys):
    e = mesh.get_simplex(keys)
    if e is None or e.level != 1:
        raise _UsageError(f"edge {keys[0]} {keys[1]} is not in the mesh")
    return e


def cmd_info(args, out) -> int:
    mesh = _load(args.input)
    hist = Counter(len(e._up) for e in mesh.level(1))
    bad = sorted(e.name for e in mesh.level(1) if len(e._up) > 2)
    try:
        report = orient(mesh)
        verdict = "yes" if report.orientable else "no"
        components = str(report.components)
    except NonManifoldError:
        verdict, components = "no", "n/a"
    print(f"{_counts_line(mesh)} χ={mesh.euler_characteristic()} orientable={verdict}", file=out)
    print(f"components: {components}", file=out)
    hist_txt = " ".join(f"{k}:{hist[k]}" for k in sorted(hist)) or "none"
    print(f"edge coface histogram: {hist_txt}", file=out)
    bad_txt = " ".join("{" + ",".join(map(str, e)) + "}" for e in bad) or "none"
    print(f"non-manifold edges: {bad_txt}", file=out)
    return EXIT_OK


def cmd_check_link(args, out) -> int:
    mesh = _load(args.input)
    e = _edge(mesh, args.edge)
    rep = link_condition(mesh, e)
    a, b = e.name
    print(f"Link({a}) = {_fmt_set(rep.link_a)}", file=out)
    print(f"Link({b}) = {_fmt_set(rep.link_b)}", file=out)
    print(f"Link({a},{b}) = {_fmt_set(rep.link_ab)}", file=out)
    print(f"Link({a}) & Link({b}) = {_fmt_set(rep.intersection)}", file=out)
    print(f"link condition: {'PASS' if rep.passed else 'FAIL'}", file=out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_decimate(args, out) -> int:
    out_dir = os.path.dirname(os.path.abspath(args.output))
    if not os.path.isdir(out_dir):
        raise _UsageError(f"output directory {out_dir} does not exist")
    mesh = _load(args.input)
    e = _edge(mesh, args.edge)
    before = _counts_line(mesh)
    try:
        p = collapse_edge(mesh, e, policy=args.policy, guard=args.guard)
    except LinkConditionError as err:
        print(f"error: {err}; output not written", file=sys.stderr)
        return EXIT_FAIL
    write_off(mesh, args.output)
    print(f"before: {before}", file=out)
    print(f"after: {_counts_line(mesh)}", file=out)
    print(f"new vertex: {p.name[0]}", file=out)
    return EXIT_OK


def cmd_tangents(args, out) -> int:
    mesh = _load(args.input)
    try:
        report = orient(mesh)
    except NonManifoldError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL
    if not report.orientable:
        edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in report.conflicts)
        print(f"error: mesh is not orientable (conflicting edges: {edges})", file=sys.stderr)
        return EXIT_FAIL
    print("vertex T_yz T_zx T_xy", file=out)
    for v in sorted(mesh.level(0), key=lambda v: v.name):
        key = v.name[0]
        if not any(rel.upper._up for rel in v._up.values()):
            print(f"{key} isolated", file=out)
            continue
        t = vertex_tangent(mesh, v)
        comps = (t[1, 2], t[2, 0], t[0, 1])
        print(f"{key} " + " ".join(f"{c:.17g}" for c in comps), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hasse-complex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="counts, Euler characteristic, orientability")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check-link", help="link condition for one edge")
    p.add_argument("input")
    p.add_argument("--edge", nargs=2, type=int, required=True, metavar=("A", "B"))
    p.set_defaults(func=cmd_check_link)

    p = sub.add_parser("decimate", help="collapse one edge and write the result")
    p.add_argument("input")
    p.add_argument("--edge", nargs=2, type=int, required=True, metavar=("A", "B"))
    p.add_argument("--policy", choices=POSITION_POLICIES, default="midpoint")
    p.add_argument("--no-guard", dest="guard", action="store_false", help="skip the link-condition check")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_decimate)

    p = sub.add_parser("tangents", help="per-vertex tangent 2-forms")
    p.add_argument("input")
    p.set_defaults(func=cmd_tangents)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OffParseError as err:
        print(f"error: {args.input}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ComplexError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
