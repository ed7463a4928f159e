"""``splicenorm`` command line interface.

Exit status: 0 on success, 1 on a domain error (bad file, malformed
diagram, unsupported dimension, failed verification), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .alexander import alexander_factors, alexander_polynomial
from .checks import run_corpus
from .diagram import format_diagram, load_diagram, random_diagram, validate, parse_diagram
from .errors import DiagramError, GeometryError, InvariantViolation, NotDivisibleError
from .fibration import characteristic_hyperplanes, classify_facets, is_fibered
from .geometry import essential_basis, unit_ball
from .linking import linking_matrix
from .norms import newton_polytope, norm_report
from .svg import render_ball_svg


class UsageError(Exception):
    pass


def _q(x) -> str:
    return str(Fraction(x))


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_phi(text: str, r: int) -> tuple[Fraction, ...]:
    try:
        phi = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--phi: cannot parse {text!r}") from None
    if len(phi) != r:
        raise UsageError(f"--phi has {len(phi)} entries but the link has {r} components")
    return phi


def _load(path: str):
    if path == "-":
        return parse_diagram(sys.stdin.read())
    return load_diagram(path)


def cmd_validate(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        d = parse_diagram(fh.read(), check=False)
    rep = validate(d)
    if args.json:
        _emit({"errors": rep.errors, "warnings": rep.warnings, "ok": rep.ok,
               "r": d.r, "p": d.p, "q": d.q})
    else:
        for e in rep.errors:
            print(f"error: {e}")
        for w in rep.warnings:
            print(f"warning: {w}")
        if rep.ok:
            print(f"ok: r={d.r} p={d.p} q={d.q}")
    return 0 if rep.ok else 1


def cmd_linking(args) -> int:
    d = _load(args.file)
    lm = linking_matrix(d)
    if args.json:
        _emit({"arrows": list(lm.arrows), "columns": list(lm.columns),
               "entries": [list(r) for r in lm.entries],
               "valence": lm.valence,
               "node_multiplier": {k: _q(v) for k, v in lm.node_multiplier.items()}})
        return 0
    print("\t".join(["arrow", *lm.columns]))
    for j, row in zip(lm.arrows, lm.entries):
        print("\t".join([j, *map(str, row)]))
    return 0


def cmd_alexander(args) -> int:
    d = _load(args.file)
    if args.raw:
        fac = alexander_factors(d)
        obj = {"numerator": [[list(e), k] for e, k in fac.numerator],
               "denominator": [[list(e), k] for e, k in fac.denominator],
               "zero_factors": fac.zero_factors}
        if args.json:
            _emit(obj)
        else:
            for side in ("numerator", "denominator"):
                print(side + ": " + " ".join(f"(t^{tuple(e)}-1)^{k}" for e, k in obj[side]))
            print(f"zero_factors: {fac.zero_factors}")
        return 0
    f = alexander_polynomial(d)
    if args.json:
        _emit({"nvars": f.nvars, "terms": f.to_json()})
    else:
        print(f)
    return 0


def cmd_newton(args) -> int:
    d = _load(args.file)
    P = newton_polytope(d)
    if args.essential:
        P = essential_basis(d).project(P)
    if args.json:
        _emit({"dim": P.dim, "vertices": [_vec(v) for v in P.vertices]})
    else:
        for v in P.vertices:
            print(" ".join(_vec(v)))
    return 0


def cmd_norm(args) -> int:
    d = _load(args.file)
    rep = norm_report(d, _parse_phi(args.phi, d.r))
    if args.json:
        _emit(rep.to_json())
        return 0
    yn = {True: "yes", False: "no"}
    line = (f"thurston={rep.thurston} alexander={rep.alexander} "
            f"coincide={yn[rep.coincide]} fibered={yn[rep.fibered]}")
    if rep.knot_offset is not None:
        line += f" knot_offset={rep.knot_offset}"
    print(line)
    return 0


def cmd_ball(args) -> int:
    d = _load(args.file)
    ball = unit_ball(d)
    if args.json:
        _emit({"b_e": ball.dim, "vertices": [_vec(v) for v in ball.vertices]})
    else:
        for v in ball.vertices:
            print(" ".join(_vec(v)))
    return 0


def cmd_fibered(args) -> int:
    d = _load(args.file)
    phi = _parse_phi(args.phi, d.r)
    fib = is_fibered(d, phi)
    if args.json:
        _emit({"phi": _vec(phi), "fibered": fib})
    else:
        print("fibered" if fib else "not fibered")
    return 0


def cmd_hyperplanes(args) -> int:
    d = _load(args.file)
    hs = characteristic_hyperplanes(d)
    if args.json:
        _emit([{"node": h.node, "normal": list(h.normal), "reduced": list(h.reduced)}
               for h in hs])
    else:
        for h in hs:
            print(f"{h.node}\tnormal={list(h.normal)}\treduced={list(h.reduced)}")
    return 0


def cmd_facets(args) -> int:
    d = _load(args.file)
    rep = classify_facets(d)
    if args.json:
        _emit(rep.to_json())
    else:
        for f in rep.facets:
            verts = " ".join("(" + ",".join(_vec(v)) + ")" for v in f.vertices)
            print(f"facet {verts} fibered={'yes' if f.fibered else 'no'}")
        for h in rep.incidences:
            print(f"hyperplane {h.hyperplane.node}: vertices {list(h.vertices_on)}, "
                  f"facets crossed {list(h.facets_crossed)}")
    return 0


def cmd_plot(args) -> int:
    d = _load(args.file)
    svg = render_ball_svg(d)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_verify(args) -> int:
    res = run_corpus(args.count, args.seed, max_nodes=args.max_nodes,
                     max_degree=args.max_degree, weight_bound=args.weight_bound,
                     n_classes=args.classes)
    for key, fails in res.failures.items():
        for msg in fails:
            print(f"FAIL {key}: {msg}")
    print(f"checked {res.checked} diagrams, {len(res.failures)} with violations")
    return 0 if res.ok else 1


def cmd_gen(args) -> int:
    d = random_diagram(args.seed, args.max_nodes, args.max_degree, args.weight_bound)
    sys.stdout.write(format_diagram(d))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="splicenorm",
                                 description="Norms and fibrations of graph links "
                                             "from splice diagrams.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True, json_flag=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help=".spl file ('-' for stdin)")
        if json_flag:
            p.add_argument("--json", action="store_true", help="JSON output")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a diagram and list problems")
    add("linking", cmd_linking, "linking numbers (TSV or JSON)")
    p = add("alexander", cmd_alexander, "Alexander polynomial")
    p.add_argument("--raw", action="store_true", help="print factor lists")
    p = add("newton", cmd_newton, "Newton polytope vertices")
    p.add_argument("--essential", action="store_true",
                   help="project to essential coordinates")
    p = add("norm", cmd_norm, "Thurston and Alexander norms of a class")
    p.add_argument("--phi", required=True, help="comma separated class, e.g. 1,0,0")
    add("ball", cmd_ball, "vertices of the reduced unit ball")
    p = add("fibered", cmd_fibered, "is a class fibered?")
    p.add_argument("--phi", required=True)
    add("hyperplanes", cmd_hyperplanes, "characteristic hyperplanes")
    add("facets", cmd_facets, "classify facets of the reduced ball")
    p = add("plot", cmd_plot, "SVG of a 2-D reduced ball", json_flag=False)
    p.add_argument("-o", "--output", help="output file (default stdout)")

    def corpus_opts(p):
        p.add_argument("--max-nodes", type=int, default=3)
        p.add_argument("--max-degree", type=int, default=4)
        p.add_argument("--weight-bound", type=int, default=5)

    p = add("verify", cmd_verify, "run the identity checks on a random corpus",
            file=False, json_flag=False)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--classes", type=int, default=100, help="random classes per diagram")
    corpus_opts(p)
    p = add("gen", cmd_gen, "print a random diagram", file=False, json_flag=False)
    p.add_argument("--seed", type=int, default=0)
    corpus_opts(p)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (OSError, DiagramError, GeometryError, NotDivisibleError,
            InvariantViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main


if __name__ == "__main__":
    sys.exit(main())
