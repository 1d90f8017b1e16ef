"""Command-line front end.

Usage:
    length-distortion bounds mp --p 0.5 --q 3.37
    length-distortion bounds table --format csv --out table1.csv
    length-distortion length --map kp --p 0.5 --curve I
    length-distortion length --map f0 --curve diameter --truncated 1e-2 --truncated 1e-4
    length-distortion experiment --name theorem2 --alpha1-arg 0.785398 --p1 0.9

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 tolerance failure, 2 usage, domain or I/O error.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import sys

import click

from . import experiments
from ._validation import DomainError
from .bounds import m_p
from .maps import ExpCayleyMap, SlitMap
from .quadrature import (
    DEFAULT_REL_TOL,
    PoleProximityError,
    QuadratureError,
    arc_length,
    diameter_I,
    horizontal_diameter,
    semicircle_Cprime,
    truncated_length,
    upper_semicircle,
)

MACHINE_DIGITS = 12
TEXT_DIGITS = 6
TABLE_HEADER = ["p", "q_star", "m_star", "lower_bound", "paper_m_star", "rel_err"]


def _num(x, digits: int = MACHINE_DIGITS):
    """Round a float to ``digits`` significant digits, leaving other values alone."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, float)):
        x = float(x)
        if not math.isfinite(x):
            return str(x)
        return float(f"{x:.{digits}g}")
    if isinstance(x, (list, tuple)):
        return [_num(v, digits) for v in x]
    if isinstance(x, dict):
        return {k: _num(v, digits) for k, v in x.items()}
    return x


def _text(x, digits: int) -> str:
    x = _num(x, digits)
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.{digits}g}"
    if isinstance(x, list):
        return " ".join(_text(v, digits) for v in x)
    return str(x)


def _render_table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_text(v, MACHINE_DIGITS) for v in row])
        return buf.getvalue()
    cells = [header] + [[_text(v, TEXT_DIGITS) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(2)


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


FORMAT = click.Choice(["text", "csv", "json"])


@click.group()
def main():
    """Length-distortion bounds for meromorphic univalent maps."""


@main.group()
def bounds():
    """Bound constants and the table of minima."""


@bounds.command("mp")
@click.option("--p", "p", type=float, required=True, help="Pole position in (√2−1, 1).")
@click.option("--q", "q", type=float, required=True, help="Scale ratio q > 1.")
def bounds_mp(p, q):
    """Print M_p(q)."""
    try:
        value = m_p(p, q)
    except DomainError as exc:
        _fail(str(exc))
    click.echo(f"{value:.12g}")


@bounds.command("table")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write to this file instead of stdout.")
def bounds_table(fmt, out):
    """Reproduce the table of minima of M_p over q."""
    rows, report = experiments.reproduce_table1()
    data = []
    for row, (_, _, published_m, _) in zip(rows, experiments.PUBLISHED_MINIMA):
        rel = abs(row.m_star - published_m) / published_m
        data.append([row.p, row.q_star, row.m_star, row.lower_bound, published_m, rel])
    if fmt == "json":
        doc = {
            "passed": report.passed,
            "rows": [dict(zip(TABLE_HEADER, _num(r))) for r in data],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _render_table(TABLE_HEADER, data, fmt)
    _emit(text, out)
    if not report.passed:
        for check in report.checks:
            if not check.passed:
                click.echo(f"FAIL {check.name}: {check.value} vs {check.target}", err=True)
        sys.exit(1)


CURVES = {
    "I": diameter_I,
    "Cprime": semicircle_Cprime,
    "upper": upper_semicircle,
    "diameter": horizontal_diameter,
}


@main.command("length")
@click.option("--map", "map_name", type=click.Choice(["kp", "f0"]), required=True)
@click.option("--p", "p", type=float, default=None, help="Pole position for --map kp.")
@click.option("--curve", type=click.Choice(sorted(CURVES)), required=True,
              help="I: vertical diameter; Cprime: left semicircle; upper: upper semicircle; "
                   "diameter: (−1, 1).")
@click.option("--rel-tol", type=float, default=DEFAULT_REL_TOL, show_default=True)
@click.option("--truncated", "eps", type=float, multiple=True,
              help="Cut the divergent end short by this parameter distance (repeatable).")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
def length(map_name, p, curve, rel_tol, eps, fmt):
    """Arc length of the image of a curve."""
    try:
        if map_name == "kp":
            if p is None:
                _fail("--p is required for --map kp")
            m = SlitMap(p)
        else:
            m = ExpCayleyMap()
        c = CURVES[curve]()
        if eps:
            results = truncated_length(m, c, sorted(eps, reverse=True), rel_tol=rel_tol)
        elif map_name == "f0" and curve == "diameter":
            _fail("the image of (−1, 1) under f0 has infinite length; "
                  "use 'length --truncated EPS' for truncated lengths")
        else:
            results = [(None, arc_length(m, c, rel_tol))]
    except (DomainError, PoleProximityError) as exc:
        _fail(str(exc))
    except QuadratureError as exc:
        _fail(str(exc), 1)
    header = ["eps", "length", "error"] if eps else ["length", "error"]
    rows = [([e] if eps else []) + [r.value, r.error] for e, r in results]
    if fmt == "json":
        doc = {"map": map_name, "p": p, "curve": curve,
               "results": [dict(zip(header, _num(r))) for r in rows]}
        click.echo(json.dumps(doc, indent=2))
    elif fmt == "csv":
        click.echo(_render_table(header, rows, "csv"), nl=False)
    else:
        for row in rows:
            prefix = f"eps={row[0]:g}  " if eps else ""
            click.echo(f"{prefix}{row[-2]:.12g}  ± {row[-1]:.3g}")


def _report_text(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_num(report.to_dict()), indent=2) + "\n"
    header = ["check", "value", "target", "tolerance", "comparison", "origin",
              "error_estimate", "passed"]
    rows = [
        [c.name, c.value, c.target, c.tolerance, c.comparison, c.origin,
         c.error_estimate, c.passed]
        for c in report.checks
    ]
    if fmt == "csv":
        return _render_table(header, rows, "csv")
    text = f"experiment {report.experiment}: {'PASS' if report.passed else 'FAIL'}" \
           f" ({report.wall_time:.3f} s)\n"
    text += _render_table(header, rows, "text")
    for note in report.notes:
        text += f"note: {note}\n"
    return text


@main.command("experiment")
@click.option("--name", type=click.Choice(sorted(experiments.EXPERIMENTS)), required=True)
@click.option("--p", "p", type=float, multiple=True,
              help="Pole position (extremal, corollary); repeatable for conjecture.")
@click.option("--alpha1-arg", type=float, default=None,
              help="Argument θ ∈ (0, π) of α₁ = e^{iθ} (theorem2).")
@click.option("--p1", type=float, default=None, help="Pole position p₁ (theorem2).")
@click.option("--theta", type=float, default=None, help="Rotation angle (corollary).")
@click.option("--rel-tol", type=float, default=None, help="Comparison tolerance (extremal).")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def experiment(name, p, alpha1_arg, p1, theta, rel_tol, fmt, out):
    """Run one experiment and print its report."""
    kwargs = {}
    try:
        if name in ("extremal", "corollary"):
            if len(p) != 1:
                _fail(f"experiment {name} needs exactly one --p")
            kwargs["p"] = p[0]
        if name == "extremal" and rel_tol is not None:
            kwargs["rel_tol"] = rel_tol
        if name == "corollary":
            if theta is None:
                _fail("experiment corollary needs --theta")
            kwargs["theta"] = theta
        if name == "theorem2":
            if alpha1_arg is None or p1 is None:
                _fail("experiment theorem2 needs --alpha1-arg and --p1")
            if not 0 < alpha1_arg < math.pi:
                _fail("--alpha1-arg must lie in (0, π)")
            kwargs["alpha1"] = cmath.exp(1j * alpha1_arg)
            kwargs["p1"] = p1
        if name == "conjecture":
            if not p:
                _fail("experiment conjecture needs at least one --p")
            kwargs["p_list"] = list(p)
        report = experiments.run(name, **kwargs)
    except (DomainError, PoleProximityError) as exc:
        _fail(str(exc))
    except QuadratureError as exc:
        _fail(str(exc), 1)
    _emit(_report_text(report, fmt), out)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
