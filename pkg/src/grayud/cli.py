"""Command-line entry point: ``grayud {generate,certify,sweep,render}``.

Exit codes: 0 success, 1 usage or parse error, 2 domain or degenerate
parameters, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from .embedding import (
    DEFAULT_SEP, DEFAULT_TOL, TWO_PI_3, DegenerateParameters, assemble, build_g0,
    extract_graph, rotation_permutation, validate,
)
from .graph import gray_graph, grid3_configuration, levi_graph
from .render import EmbeddingParseError, RenderStyle, embedding_from_json, embedding_to_json, sweep_to_csv, to_svg
from .sweep import sweep
from .symmetry import find_isomorphism, is_automorphism, is_semiregular

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def write_output(text: str, path=None):
    """Write to stdout, or atomically replace ``path``."""
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _angle(value, degrees):
    return math.radians(value) if degrees else value


def _positive(name, value):
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")


def cmd_generate(args):
    if args.source == "lcf":
        g = gray_graph()
    elif args.source == "levi":
        g = levi_graph(grid3_configuration(3))
    else:
        e = assemble(args.h, _angle(args.theta, args.degrees), sep_threshold=args.sep_threshold)
        g = extract_graph(e)
    write_output(g.to_json(), args.out)
    return EXIT_OK


def certificate(h, theta, tol, sep_threshold):
    """Run the full certification pipeline; returns ``(document, exit_code)``."""
    doc = {"params": {"h": h, "theta": theta}, "tol": tol, "sep_threshold": sep_threshold}
    try:
        e = assemble(h, theta, sep_threshold=sep_threshold)
    except DegenerateParameters as exc:
        doc.update(status=exc.reason, reason=str(exc), passed=False)
        return doc, EXIT_DOMAIN
    report = validate(e, tol, sep_threshold)
    g = extract_graph(e)
    z3 = rotation_permutation(e, 3, tol)
    z3_ok = z3 is not None and is_automorphism(g, z3) and is_semiregular(z3, 3)
    cert = find_isomorphism(g, gray_graph())
    iso_ok = cert is not None and cert.verified
    checks = {
        "unit_edges": report.max_edge_length_error <= tol,
        "separation": not report.coincident_pairs,
        "z3_symmetry": z3_ok,
        "isomorphic_to_gray": iso_ok and report.isomorphic_to_gray,
    }
    perm = report.induced_symmetry_permutation
    doc.update(
        n_vertices=g.n,
        n_edges=len(g.edges),
        n_solid=g.roles.count("solid"),
        n_hollow=g.roles.count("hollow"),
        max_edge_length_error=report.max_edge_length_error,
        min_vertex_separation=report.min_vertex_separation,
        accidental_unit_pairs=[list(p) for p in report.accidental_unit_pairs],
        symmetry_order=report.symmetry_order,
        symmetry_permutation=list(perm.image) if perm is not None else None,
        z3_permutation=list(z3.image) if z3 is not None else None,
        isomorphism=cert.to_dict() if cert is not None else None,
        checks=checks,
        passed=all(checks.values()),
    )
    doc["status"] = "valid" if doc["passed"] else "verification_failed"
    return doc, EXIT_OK if doc["passed"] else EXIT_VERIFY


def cmd_certify(args):
    _positive("--tol", args.tol)
    _positive("--sep-threshold", args.sep_threshold)
    doc, code = certificate(args.h, _angle(args.theta, args.degrees), args.tol, args.sep_threshold)
    write_output(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    if code == EXIT_DOMAIN:
        print(f"degenerate parameters: {doc['reason']}", file=sys.stderr)
    elif code == EXIT_VERIFY:
        failed = [k for k, v in doc["checks"].items() if not v]
        print(f"verification failed: {', '.join(failed)}", file=sys.stderr)
    return code


def cmd_sweep(args):
    _positive("--tol", args.tol)
    _positive("--sep-threshold", args.sep_threshold)
    h_lo, h_hi = args.h_range
    t_lo, t_hi = (_angle(x, args.degrees) for x in args.theta_range)
    if not (0 < h_lo <= h_hi < 1):
        raise DomainError("--h-range must satisfy 0 < LO <= HI < 1")
    if not (0 <= t_lo <= t_hi <= TWO_PI_3 + 1e-12):
        raise DomainError("--theta-range must lie within [0, 120 degrees]")
    steps_h, steps_t = args.steps
    if steps_h < 0 or steps_t < 0:
        raise DomainError("--steps must be non-negative")
    fmap = sweep((h_lo, h_hi), (t_lo, t_hi), steps_h, steps_t, args.tol, args.sep_threshold)
    write_output(sweep_to_csv(fmap), args.out)
    return EXIT_OK


def _load_embedding(args):
    if args.source == "construction":
        return assemble(args.h, _angle(args.theta, args.degrees), sep_threshold=args.sep_threshold)
    if args.source == "g0":
        return build_g0(args.h, sep_threshold=args.sep_threshold)
    try:
        with open(args.source, encoding="utf-8") as fh:
            return embedding_from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.source}: {exc.strerror}") from None


def cmd_render(args):
    e = _load_embedding(args)
    if args.format == "json":
        text = embedding_to_json(e)
    else:
        text = to_svg(e, RenderStyle(circles=args.circles))
    write_output(text, args.out)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="grayud", description="Unit-distance polycirculant drawings of the Gray graph.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def params(p, h=0.6, theta=0.3):
        p.add_argument("--h", type=float, default=h, help="hexagon circumradius in edge units, 0 < h < 1")
        p.add_argument("--theta", type=float, default=theta, help="vector star rotation (radians)")
        p.add_argument("--degrees", action="store_true", help="read angles in degrees")
        p.add_argument("--sep-threshold", type=float, default=DEFAULT_SEP)

    p = sub.add_parser("generate", help="emit the Gray graph as JSON")
    p.add_argument("--source", choices=("lcf", "levi", "construction"), default="lcf")
    params(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("certify", help="build, validate and certify one parameter point")
    params(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="feasibility map over (h, theta) as CSV")
    p.add_argument("--h-range", nargs=2, type=float, default=(0.1, 0.95), metavar=("LO", "HI"))
    p.add_argument("--theta-range", nargs=2, type=float, default=None, metavar=("LO", "HI"))
    p.add_argument("--steps", nargs=2, type=int, default=(32, 32), metavar=("H", "T"))
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--sep-threshold", type=float, default=DEFAULT_SEP)
    p.add_argument("--degrees", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("render", help="draw an embedding as SVG (or export it as JSON)")
    p.add_argument("--source", default="construction",
                   help="'construction', 'g0', or the path of an embedding JSON file")
    params(p)
    p.add_argument("--circles", action="store_true", help="overlay unit circles at hollow vertices")
    p.add_argument("--format", choices=("svg", "json"), default="svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "theta_range", "unset") is None:
        args.theta_range = (0.0, 120.0) if args.degrees else (0.0, TWO_PI_3)
    try:
        return args.func(args)
    except DegenerateParameters as exc:
        print(f"degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, EmbeddingParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
