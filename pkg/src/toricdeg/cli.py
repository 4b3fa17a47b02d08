"""Command-line interface.

Exit codes: 0 success, 1 malformed input or filesystem error, 2 a well-formed
request with no answer on the surface (``DomainError``), 3 a reproduction run
with failing checks.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import reference
from .cones import nef_extremal_rays
from .ehrhart import (
    ehrhart_polynomial,
    hilbert_polynomial,
    normal_defect_report,
    scale_to_integral,
)
from .errors import DomainError
from .global_body import cox_generators_report, global_body, global_semigroup_generators
from .lattice import make_surface, parse_surface_vector
from .okounkov import FlagSpec, okounkov_polygon
from .optimizer import NEF, NEGATIVE, optimize
from .zariski import zariski_decompose

COMMANDS = ("info", "zariski", "body", "defect", "optimize", "global", "hilbert", "ehrhart")
FORMATS = ("json", "text", "csv", "svg")


@dataclass
class JobSpec:
    surface: str
    command: str
    divisor: tuple | None = None
    curve: tuple | None = None
    output: str = "text"
    degree_bound: int = 6
    polygon: list | None = None


def _q(x) -> str:
    return str(Fraction(x))


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_q(x) for x in v) + ")"


def _need(job: JobSpec, *names):
    for name in names:
        if getattr(job, name) is None:
            raise ValueError(f"{job.command} needs --{name}")


# --------------------------------------------------------------------------
# svg


def polygon_svg(vertices: Sequence[tuple], scale: int = 40, margin: int = 20) -> str:
    """Polygon over its integer grid, y axis pointing up."""
    xs = [Fraction(v[0]) for v in vertices] or [Fraction(0)]
    ys = [Fraction(v[1]) for v in vertices] or [Fraction(0)]
    x0, x1 = int(min(xs).__floor__()), int(max(xs).__ceil__())
    y0, y1 = int(min(ys).__floor__()), int(max(ys).__ceil__())
    width = (x1 - x0) * scale + 2 * margin
    height = (y1 - y0) * scale + 2 * margin

    def px(x, y):
        return float((x - x0) * scale + margin), float((y1 - y) * scale + margin)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for x in range(x0, x1 + 1):
        a, b = px(x, y0), px(x, y1)
        lines.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="#ddd"/>')
    for y in range(y0, y1 + 1):
        a, b = px(x0, y), px(x1, y)
        lines.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="#ddd"/>')
    pts = " ".join("{},{}".format(*px(Fraction(x), Fraction(y))) for x, y in vertices)
    lines.append(f'<polygon points="{pts}" fill="#9cc3e6" fill-opacity="0.6" stroke="#1f4e79" stroke-width="2"/>')
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            cx, cy = px(x, y)
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="#555"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# commands


def _info(S, job):
    nef = nef_extremal_rays(S)
    data = {
        "surface": S.name,
        "rank": S.rank,
        "canonical": list(S.canonical),
        "negative_curves": [list(c) for c in S.negative_curves],
        "nef_extremal_rays": [list(n) for n in nef],
    }
    text = (
        f"{S.name}: Picard rank {S.rank}, K = {_fmt_vec(S.canonical)}\n"
        f"{len(S.negative_curves)} negative curves, {len(nef)} extremal nef classes\n"
        + "\n".join(_fmt_vec(c) for c in S.negative_curves)
    )
    return data, text


def _zariski(S, job):
    _need(job, "divisor")
    dec = zariski_decompose(S, job.divisor)
    data = {
        "positive": _vec(dec.positive),
        "negative": [{"curve": list(c), "coefficient": _q(a)} for c, a in dec.negative],
    }
    neg = " + ".join(f"{_q(a)}*{_fmt_vec(c)}" for c, a in dec.negative) or "0"
    return data, f"P = {_fmt_vec(dec.positive)}\nN = {neg}"


def _body(S, job):
    _need(job, "divisor", "curve")
    poly = okounkov_polygon(S, job.divisor, FlagSpec(job.curve))
    data = poly.to_json()
    text = f"nu = {_q(poly.nu)}, mu = {_q(poly.mu)}, area = {_q(poly.area)}\nvertices: " + ", ".join(
        f"({_q(x)}, {_q(y)})" for x, y in poly.vertices
    )
    return data, text, poly.vertices


def _defect(S, job):
    _need(job, "divisor", "curve")
    rep = normal_defect_report(S, job.divisor, FlagSpec(job.curve))
    text = (
        f"k0 = {rep.k0}\nEhrhart(k0 Delta) = {rep.ehrhart}\nHilbert(k0 D)     = {rep.hilbert}\n"
        f"normal: {'yes' if rep.is_normal else 'no'}"
    )
    return rep.to_json(), text


def optimizer_rows(results) -> list[list[str]]:
    header = ["divisor", "optimal nef curves", "optimal negative curves", "min S", "P.(-K)"]
    rows = [header]
    for r in results:
        rows.append(
            [
                _fmt_vec(r.divisor),
                " ".join(_fmt_vec(c) for c in r.curves_of_kind(NEF)) or "-",
                " ".join(_fmt_vec(c) for c in r.curves_of_kind(NEGATIVE)) or "-",
                _q(r.optimum),
                _q(r.hilbert_second),
            ]
        )
    return rows


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _optimize(S, job):
    _need(job, "divisor")
    res = optimize(S, job.divisor)
    rows = optimizer_rows([res])
    text = "\n".join(f"{h:>24}: {v}" for h, v in zip(rows[0], rows[1]))
    text += f"\ninduces normal degeneration: {'yes' if res.induces_normal else 'no'}"
    return res.to_json(), text, rows


def _global(S, job):
    _need(job, "curve")
    body = global_body(S, FlagSpec(job.curve))
    gens = global_semigroup_generators(body, job.degree_bound)
    data = {
        "surface": S.name,
        "flag_curve": list(body.flag.curve),
        "coordinates": ["nu1", "nu2", "H"] + [f"E{i}" for i in range(1, S.r + 1)],
        "rays": [list(r) for r in body.cone.rays],
        "facets": [list(f) for f in body.cone.facets],
        "hilbert": {
            "verified": gens.verified,
            "degree_bound": gens.hilbert_verified_to,
            "grading": list(body.grading),
            "added_generators": [list(g) for g in gens.added],
        },
    }
    text = [f"{len(body.cone.rays)} rays, {len(body.cone.facets)} facets (f.x >= 0)", "rays:"]
    text += ["  " + " ".join(f"{x:>3}" for x in r) for r in body.cone.rays]
    text.append("facets:")
    text += ["  " + " ".join(f"{x:>3}" for x in f) for f in body.cone.facets]
    status = "verified" if gens.verified else "NOT verified"
    text.append(f"extremal rays generate the semigroup up to degree {job.degree_bound}: {status}")
    if gens.verified:
        cox = cox_generators_report(S, body, gens)
        data["cox_generators"] = [{"class": list(c), "description": d} for c, d in cox]
        text.append("Cox ring generators:")
        text += [f"  {_fmt_vec(c)}  {d}" for c, d in cox]
    else:
        text += ["missing generators:"] + ["  " + _fmt_vec(g) for g in gens.added]
    return data, "\n".join(text)


def _hilbert(S, job):
    _need(job, "divisor")
    p = hilbert_polynomial(S, job.divisor)
    return p.to_json(), str(p)


def _ehrhart(S, job):
    if job.polygon is not None:
        verts = job.polygon
    else:
        _need(job, "divisor", "curve")
        verts = okounkov_polygon(S, job.divisor, FlagSpec(job.curve)).vertices
    k0, integral = scale_to_integral(verts)
    p = ehrhart_polynomial(integral)
    data = {"k0": k0, "vertices": [_vec(v) for v in integral], "ehrhart": p.to_json()}
    return data, f"k0 = {k0}\n{p}", integral


_HANDLERS = {
    "info": _info,
    "zariski": _zariski,
    "body": _body,
    "defect": _defect,
    "optimize": _optimize,
    "global": _global,
    "hilbert": _hilbert,
    "ehrhart": _ehrhart,
}


def render(job: JobSpec) -> str:
    """Run a job and serialize its result; raises on errors."""
    if job.command not in _HANDLERS:
        raise ValueError(f"unknown command {job.command!r}")
    if job.output not in FORMATS:
        raise ValueError(f"unknown format {job.output!r}")
    S = make_surface(job.surface) if job.polygon is None or job.surface else None
    out = _HANDLERS[job.command](S, job)
    data, text = out[0], out[1]
    if job.output == "json":
        return json.dumps(data, indent=2) + "\n"
    if job.output == "text":
        return text + "\n"
    if job.output == "svg":
        if job.command not in ("body", "ehrhart"):
            raise ValueError("svg output is available for body and ehrhart")
        return polygon_svg(out[2])
    if job.command == "optimize":
        return _csv(out[2])
    if job.command in ("body", "ehrhart"):
        return _csv([["x", "y"]] + [[_q(x), _q(y)] for x, y in out[2]])
    raise ValueError(f"csv output is not available for {job.command}")


def run(job: JobSpec, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        stdout.write(render(job))
    except DomainError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


# --------------------------------------------------------------------------
# reproduction


def _write_atomic(path: str, content: str) -> None:
    folder = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check(report, name, fn):
    try:
        expected, actual = fn()
        ok = expected == actual
    except Exception as exc:  # a failing check is reported, not raised
        expected, actual, ok = "(computation)", f"{type(exc).__name__}: {exc}", False
    report.append({"check": name, "passed": ok, "expected": _jsonable(expected), "actual": _jsonable(actual)})
    return ok


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def reproduce_paper(outdir: str, surface_factory: Callable = make_surface) -> dict:
    """Recompute the published reference values and write artifacts to ``outdir``.

    Returns ``{"passed": bool, "checks": [...], "first_failure": name or None}``.
    Raises ``OSError`` when ``outdir`` cannot be used.
    """
    if not outdir:
        raise FileNotFoundError("empty output directory path")
    os.makedirs(outdir, exist_ok=True)
    checks: list[dict] = []

    X5 = surface_factory("X5")
    results = []
    for i, row in enumerate(reference.X5_TABLE, start=1):
        holder = {}

        def table_row(row=row, holder=holder):
            res = optimize(X5, row["divisor"])
            holder["res"] = res
            expected = (Fraction(row["optimum"]), set(map(tuple, row["nef"])), 16, Fraction(row["second"]))
            actual = (res.optimum, set(res.curves_of_kind(NEF)), len(set(res.curves_of_kind(NEGATIVE))),
                      res.hilbert_second)
            return expected, actual

        _check(checks, f"X5 optimizer table row {i} {_fmt_vec(row['divisor'])}", table_row)
        if "res" in holder:
            results.append(holder["res"])
    _write_atomic(os.path.join(outdir, "x5_optimizer_table.csv"), _csv(optimizer_rows(results)))

    for name, (D, C, coeffs) in reference.HILBERT.items():
        S = surface_factory(name)
        _check(checks, f"{name} Hilbert polynomial", lambda S=S, D=D, coeffs=coeffs: (
            tuple(Fraction(c) for c in coeffs),
            (lambda p: (p.a2, p.a1, p.a0))(hilbert_polynomial(S, D)),
        ))
        _check(checks, f"{name} normal degeneration", lambda S=S, D=D, C=C: (
            True, normal_defect_report(S, D, C).is_normal,
        ))
        try:
            poly = okounkov_polygon(S, D, C)
            _write_atomic(os.path.join(outdir, f"{name.lower()}_polygon.svg"), polygon_svg(poly.vertices))
            _write_atomic(os.path.join(outdir, f"{name.lower()}_polygon.json"), json.dumps(poly.to_json(), indent=2))
        except DomainError:
            pass

    def x5_body():
        body = global_body(X5, reference.X5_FLAG)
        _write_atomic(os.path.join(outdir, "x5_global_body.json"), json.dumps(
            {"rays": [list(r) for r in body.cone.rays], "facets": [list(f) for f in body.cone.facets]}, indent=1))
        facets = set(body.cone.facets)
        printed = set(map(tuple, reference.X5_FACETS))
        negated = {tuple(-x for x in f) for f in printed}
        return (reference.X5_RAY_COUNT, len(printed), True), (
            len(body.cone.rays), len(facets), facets in (printed, negated))

    _check(checks, "X5 global body (rays, facets, facet rows)", x5_body)

    L3 = surface_factory("L3")

    def l3_body():
        body = global_body(L3, reference.L3_FLAG)
        gens = global_semigroup_generators(body, 6)
        cox = {c for c, _ in cox_generators_report(L3, body, gens)} if gens.verified else set()
        _write_atomic(os.path.join(outdir, "l3_global_body.json"), json.dumps(
            {"rays": [list(r) for r in body.cone.rays], "facets": [list(f) for f in body.cone.facets]}, indent=1))
        printed = set(map(tuple, reference.L3_FACETS))
        expected_cox = set(L3.negative_curves) | {reference.L3_COX_EXTRA}
        return (set(map(tuple, reference.L3_RAYS)), True, True, expected_cox), (
            set(body.cone.rays),
            set(body.cone.facets) in (printed, {tuple(-x for x in f) for f in printed}),
            gens.verified,
            cox,
        )

    _check(checks, "L3 global body (rays, facets, Hilbert basis, Cox generators)", l3_body)

    failures = [c["check"] for c in checks if not c["passed"]]
    report = {"passed": not failures, "first_failure": failures[0] if failures else None, "checks": checks}
    _write_atomic(os.path.join(outdir, "report.json"), json.dumps(report, indent=2) + "\n")
    return report


# --------------------------------------------------------------------------
# argument parsing


def _parse_polygon(text: str) -> list[tuple[Fraction, Fraction]]:
    pts = []
    for part in text.split(";"):
        if part.strip():
            xy = [Fraction(v.strip()) for v in part.split(",")]
            if len(xy) != 2:
                raise ValueError(f"bad polygon vertex {part!r}")
            pts.append(tuple(xy))
    return pts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricdeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("surface_pos", nargs="?", metavar="SURFACE", help="X1..X8, L3 or S6")
        p.add_argument("--surface", help="same as the positional SURFACE")
        p.add_argument("--divisor", help="comma separated coordinates in H, E_1, ... (p/q allowed)")
        p.add_argument("--curve", help="flag curve class, comma separated")
        p.add_argument("--format", default="text", choices=FORMATS)
        p.add_argument("--degree-bound", type=int, default=6)
        p.add_argument("--out", help="write output to this file instead of stdout")
        if name == "ehrhart":
            p.add_argument("--polygon", help="vertices 'x,y;x,y;...' instead of --divisor/--curve")
    rep = sub.add_parser("reproduce", help="recompute the published reference values")
    rep.add_argument("--out", required=True, help="output directory")
    return parser


def _job_from_args(args) -> JobSpec:
    surface = args.surface or args.surface_pos
    polygon = _parse_polygon(args.polygon) if getattr(args, "polygon", None) else None
    if surface is None and polygon is None:
        raise ValueError("a surface is required")
    S = make_surface(surface) if surface else None
    divisor = parse_surface_vector(S, args.divisor) if args.divisor else None
    curve = parse_surface_vector(S, args.curve) if args.curve else None
    if curve is not None and any(Fraction(x).denominator != 1 for x in curve):
        raise ValueError("curve classes must be integral")
    return JobSpec(surface or "", args.command, divisor, curve, args.format, args.degree_bound, polygon)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0

    if args.command == "reproduce":
        try:
            report = reproduce_paper(args.out)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        for c in report["checks"]:
            print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['check']}")
            if not c["passed"]:
                print(f"      expected: {c['expected']}\n      actual:   {c['actual']}")
        return 0 if report["passed"] else 3

    try:
        job = _job_from_args(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        buf = io.StringIO()
        code = run(job, stdout=buf)
        if code == 0:
            try:
                _write_atomic(args.out, buf.getvalue())
            except OSError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
        return code
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
