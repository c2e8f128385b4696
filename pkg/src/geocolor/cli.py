"""Command line interface: ``geocolor {generate,color,verify,bounds,exact,render}``.

Every command that writes a coloring re-verifies it first and exits with
status 1 if the promised properties do not hold.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import platform
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .bounds import asymptotic_report, bounds_report
from .convex import color_convex, color_k4
from .errors import GeoColorError, NotConvex
from .general import color_general
from .geometry import PointSet, is_convex_position, random_point_set, regular_polygon
from .graph import Coloring, complete_geometric, verify
from .oracle import solve
from .render import render_svg

log = logging.getLogger("geocolor")


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


class _Run:
    """Collects what a command read and wrote, for the optional manifest."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.digests: dict[str, str] = {}
        self.outputs: list[str] = []

    def load_json(self, path: str) -> Any:
        raw = _read(path)
        self.digests[path] = hashlib.sha256(raw).hexdigest()
        return json.loads(raw)

    def load_points(self, path: str) -> PointSet:
        return PointSet.from_json(self.load_json(path))

    def emit(self, path: str | None, text: str) -> None:
        _write(path, text)
        if path not in (None, "-"):
            self.outputs.append(path)

    def manifest(self) -> dict:
        params = {
            k: v for k, v in sorted(vars(self.args).items()) if k not in ("func", "manifest", "verbose") and not callable(v)
        }
        return {
            "command": self.args.command,
            "inputs": self.digests,
            "parameters": params,
            "outputs": self.outputs,
            "versions": {"geocolor": __version__, "python": platform.python_version(), "numpy": np.__version__},
        }


def _check(report, *, proper: bool, complete: bool) -> None:
    if complete and not report.is_complete:
        raise SystemExit(f"verification failed: {len(report.completeness_violations)} color pairs never meet")
    if proper and not report.is_proper:
        raise SystemExit(f"verification failed: {len(report.proper_violations)} intersecting pairs share a color")


def cmd_generate(run: _Run) -> None:
    a = run.args
    if a.kind == "convex":
        S = regular_polygon(a.n)
    else:
        S = random_point_set(a.n, np.random.default_rng(a.seed), box=a.box)
    run.emit(a.output, dumps(S.to_json()))


def cmd_color(run: _Run) -> None:
    a = run.args
    S = run.load_points(a.points)
    n = len(S)
    if a.mode == "convex":
        if not is_convex_position(S):
            raise NotConvex("convex mode needs points in convex position")
        if n == 4:
            psi, alpha = color_k4(S)
            coloring = psi if a.k4_variant == "psi" else alpha
            report = verify(coloring)
            _check(report, proper=a.k4_variant == "alpha", complete=True)
            extra = {"case": "small", "variant": a.k4_variant}
        else:
            coloring, trace = color_convex(n, S)
            report = verify(coloring)
            _check(report, proper=True, complete=True)
            if report.k != (n * n + n) // 4:
                raise SystemExit(f"verification failed: {report.k} colors instead of {(n * n + n) // 4}")
            extra = trace.to_json()
        out = coloring.to_json()
    else:
        result = color_general(S)
        report = verify(result.coloring)
        _check(report, proper=False, complete=True)
        out = {**result.coloring.to_json(), "partial": True}
        extra = result.config.to_json()
    if report.singleton_classes > n:
        raise SystemExit(f"verification failed: {report.singleton_classes} singleton classes exceed n={n}")
    run.emit(a.output, dumps(out))
    if a.trace:
        run.emit(a.trace, dumps(extra))
    if a.bounds:
        run.emit(a.bounds, dumps(bounds_report(complete_geometric(S)).to_json()))


def cmd_verify(run: _Run) -> None:
    a = run.args
    S = run.load_points(a.points)
    coloring = Coloring.from_json(run.load_json(a.coloring), S)
    report = verify(coloring)
    run.emit(a.output, dumps(report.to_json()))
    if (a.require_proper and not report.is_proper) or (a.require_complete and not report.is_complete):
        raise SystemExit(1)


def cmd_bounds(run: _Run) -> None:
    a = run.args
    S = run.load_points(a.points)
    G = complete_geometric(S)
    report = asymptotic_report(len(S), G) if a.asymptotic else bounds_report(G)
    run.emit(a.output, dumps(report.to_json()))


def cmd_exact(run: _Run) -> None:
    a = run.args
    S = run.load_points(a.points)
    result = solve(complete_geometric(S), a.mode, warm_start=not a.no_warm_start)
    report = verify(result.witness)
    _check(report, proper=a.mode == "alpha", complete=True)
    run.emit(a.output, dumps({"mode": a.mode, "k": result.k, "witness": result.witness.to_json()}))


def cmd_render(run: _Run) -> None:
    a = run.args
    S = run.load_points(a.points)
    coloring = Coloring.from_json(run.load_json(a.coloring), S)
    run.emit(a.output, render_svg(coloring))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geocolor", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true")
    common.add_argument("--manifest", help="write a JSON run manifest to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a point set")
    p.add_argument("kind", choices=["convex", "random"])
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, default=10**4, help="half-width of the sampling box (random kind)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", parents=[common], help="construct and self-check a complete coloring")
    p.add_argument("points")
    p.add_argument("--mode", choices=["convex", "general"], default="convex")
    p.add_argument("--k4-variant", choices=["psi", "alpha"], default="alpha")
    p.add_argument("-o", "--output")
    p.add_argument("--trace", help="write the construction trace (convex) or configuration (general)")
    p.add_argument("--bounds", help="also write the bounds report for the point set")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="report properness and completeness of a coloring")
    p.add_argument("points")
    p.add_argument("coloring")
    p.add_argument("--require-proper", action="store_true")
    p.add_argument("--require-complete", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="bounds report for the complete graph on a point set")
    p.add_argument("points")
    p.add_argument("--asymptotic", action="store_true", help="also check the asymptotic coefficients (n > 18)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", parents=[common], help="exact psi or alpha by exhaustive search (at most 15 edges)")
    p.add_argument("points")
    p.add_argument("--mode", "--exact", dest="mode", choices=["psi", "alpha"], default="psi")
    p.add_argument("--no-warm-start", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("render", parents=[common], help="draw a colored geometric graph as SVG")
    p.add_argument("points")
    p.add_argument("coloring")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    run = _Run(args)
    try:
        args.func(run)
    except GeoColorError as exc:
        print(f"geocolor: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.manifest:
        Path(args.manifest).write_text(dumps(run.manifest()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
