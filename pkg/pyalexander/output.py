# -*- coding: utf-8 -*-
"""
Text and JSON renderings of curves, fibre tables and analysis reports.

JSON keys keep their insertion order and nothing depends on timing or
thread count, so equal inputs give byte-identical output.
"""

import json
from typing import List, Sequence

from .curve import X, Y, Curve
from .filtration import FiberData
from .laurent import LaurentPoly, canonical_render
from .pipeline import AnalysisReport, Verdicts


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def terms_json(poly: LaurentPoly) -> List[dict]:
    return [{"exp": list(exp), "coef": c} for exp, c in poly.terms()]


def zeta_coeffs(zeta: LaurentPoly, order: int) -> List[int]:
    return [zeta.coeff((k,)) for k in range(order + 1)]


def curve_json(curve: Curve) -> dict:
    return {
        "r": curve.r,
        "branches": [
            {
                "name": name,
                "multiplicity": semigroup.multiplicity,
                "generators": list(semigroup.generators),
                "conductor": semigroup.conductor,
            }
            for name, semigroup in zip(curve.names(), curve.semigroups)
        ],
        "intersection": [list(row) for row in curve.intersection],
        "delta": list(curve.delta),
    }


def emit_json(report: AnalysisReport) -> str:
    """The full report in the stable JSON schema."""
    obj = curve_json(report.curve)
    obj["alexander"] = {"terms": terms_json(report.alexander)}
    obj["zeta"] = {"coeffs": zeta_coeffs(report.zeta, report.order)}
    obj["checks"] = report.verdicts.as_dict()
    return dumps(obj)


def error_json(error: Exception, exit_code: int) -> str:
    return dumps(
        {
            "error": {
                "type": type(error).__name__,
                "message": str(error),
                "exit_code": exit_code,
            }
        }
    )


def fibers_json(fibers: Sequence[FiberData]) -> List[dict]:
    return [
        {
            "v": list(f.v),
            "c": f.dim,
            "d": [{"S": [i + 1 for i in s], "dim": d} for s, d in f.subspace_dims.items()],
            "member": f.member,
            "chi": f.euler,
        }
        for f in fibers
    ]


def render_zeta(zeta: LaurentPoly) -> str:
    return canonical_render(zeta)


def render_verdicts(verdicts: Verdicts) -> str:
    return "\n".join(
        f"{name}: {'PASS' if ok else 'FAIL'}" for name, ok in verdicts.as_dict().items()
    )


def render_curve_summary(curve: Curve) -> str:
    lines = [f"r = {curve.r}"]
    for name, semigroup in zip(curve.names(), curve.semigroups):
        generators = ", ".join(str(g) for g in semigroup.generators)
        lines.append(
            f"branch {name}: multiplicity {semigroup.multiplicity}, "
            f"semigroup <{generators}>, conductor {semigroup.conductor}"
        )
    if curve.r > 1:
        lines.append("intersection:")
        for row in curve.intersection:
            lines.append("  " + " ".join(f"{m:>3}" for m in row))
    lines.append(f"delta = {tuple(curve.delta)}")
    return "\n".join(lines)


def render_semigroup(curve: Curve, elements: Sequence[tuple], upper: Sequence[int]) -> str:
    lines = [render_curve_summary(curve)]
    lines.append(f"semigroup of values in [0, {tuple(upper)}]:")
    lines.extend("  " + str(v) for v in elements)
    return "\n".join(lines)


def render_fibers(fibers: Sequence[FiberData]) -> str:
    lines = ["v\tc(v)\td(S,v)\tmember\tchi"]
    for f in fibers:
        dims = " ".join(
            f"{{{','.join(str(i + 1) for i in s)}}}={d}" for s, d in f.subspace_dims.items()
        )
        lines.append(f"{f.v}\t{f.dim}\t{dims}\t{'yes' if f.member else 'no'}\t{f.euler}")
    return "\n".join(lines)


def equation_text(poly) -> str:
    return str(poly.to_sympy(X, Y))


def render_equations(curve: Curve) -> str:
    lines = [
        f"branch {name}: {equation_text(f)} = 0"
        for name, f in zip(curve.names(), curve.equations)
    ]
    lines.append(f"curve: {equation_text(curve.equation())} = 0")
    return "\n".join(lines)


def equations_json(curve: Curve) -> dict:
    return {
        "branches": [
            {"name": name, "equation": equation_text(f)}
            for name, f in zip(curve.names(), curve.equations)
        ],
        "equation": equation_text(curve.equation()),
    }


def render_report(report: AnalysisReport) -> str:
    """The full report as text."""
    names = report.curve.names()
    lines = [render_curve_summary(report.curve), f"box = {report.box.upper}"]
    label = "alexander" if report.r > 1 else "knot polynomial"
    lines.append(f"{label}: {canonical_render(report.alexander)}")
    lines.append(f"zeta (up to t^{report.order}): {render_zeta(report.zeta)}")
    members = sum(1 for f in report.fibers if f.member)
    lines.append(f"fibres: {len(report.fibers)} value vectors, {members} in the semigroup")
    if report.r > 1:
        lines.append("variables: " + ", ".join(f"t{i + 1} = {n}" for i, n in enumerate(names)))
    for route, message in report.errors.items():
        lines.append(f"{route} route failed: {message}")
    lines.append(render_verdicts(report.verdicts))
    return "\n".join(lines) + "\n"
