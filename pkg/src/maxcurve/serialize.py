"""JSON file formats.  Rationals are always strings such as "3/4" or "-2"."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from .analysis import GcCertificate, NodeSet
from .poly import Curve, Line, Poly, as_line
from .combinatorics import dim_pi


class FormatError(ValueError):
    """Malformed input file; the message starts with the offending location."""


def rational_to_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: Any, where: str = "$") -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"{where}: expected a rational string, got {type(s).__name__}")
    if isinstance(s, int):
        return Fraction(s)
    text = s.strip()
    if not text or any(c in text for c in ".eE"):
        raise FormatError(f"{where}: {s!r} is not of the form 'p' or 'p/q'")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{where}: {s!r} is not of the form 'p' or 'p/q'") from None


def point_to_json(p) -> list[str]:
    return [rational_to_str(p[0]), rational_to_str(p[1])]


def nodeset_to_json(X: NodeSet, degree: int) -> dict:
    return {"degree": degree, "nodes": [point_to_json(p) for p in X]}


def nodeset_from_json(data: Any) -> tuple[NodeSet, Optional[int]]:
    if not isinstance(data, dict) or "nodes" not in data:
        raise FormatError("$: expected an object with a 'nodes' array")
    nodes = data["nodes"]
    if not isinstance(nodes, list):
        raise FormatError("$.nodes: expected an array")
    pts = []
    for i, p in enumerate(nodes):
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"$.nodes[{i}]: expected a pair [x, y]")
        pts.append(
            (rational_from_str(p[0], f"$.nodes[{i}][0]"), rational_from_str(p[1], f"$.nodes[{i}][1]"))
        )
    degree = data.get("degree")
    if degree is not None and (isinstance(degree, bool) or not isinstance(degree, int) or degree < 0):
        raise FormatError("$.degree: expected a non-negative integer")
    return NodeSet(tuple(pts)), degree


def line_to_json(line: Line) -> list[str]:
    return [str(line.a), str(line.b), str(line.c)]


def line_from_json(data: Any, where: str = "$") -> Line:
    if not isinstance(data, list) or len(data) != 3:
        raise FormatError(f"{where}: expected a line [a, b, c]")
    a, b, c = (rational_from_str(v, f"{where}[{i}]") for i, v in enumerate(data))
    if a == 0 and b == 0:
        raise FormatError(f"{where}: line needs (a, b) != (0, 0)")
    return Line.from_coeffs(a, b, c)


def poly_to_json(p: Poly) -> dict:
    return {"degree_bound": p.degree_bound, "coeffs": [rational_to_str(c) for c in p.coeffs]}


def poly_from_json(data: Any, where: str = "$") -> Poly:
    if not isinstance(data, dict) or "coeffs" not in data or "degree_bound" not in data:
        raise FormatError(f"{where}: expected {{'degree_bound', 'coeffs'}}")
    n = data["degree_bound"]
    coeffs = data["coeffs"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise FormatError(f"{where}.degree_bound: expected a non-negative integer")
    if not isinstance(coeffs, list) or len(coeffs) != dim_pi(n):
        raise FormatError(f"{where}.coeffs: expected {dim_pi(n)} coefficients")
    return Poly(n, tuple(rational_from_str(c, f"{where}.coeffs[{i}]") for i, c in enumerate(coeffs)))


def curve_to_json(f: Curve) -> dict:
    factors = []
    for fac in f.factors:
        line = as_line(fac)
        factors.append(line_to_json(line) if line is not None else poly_to_json(fac))
    return {"factors": factors, "squarefree": f.squarefree_certified}


def curve_from_json(data: Any, where: str = "$") -> Curve:
    if not isinstance(data, dict) or not isinstance(data.get("factors"), list) or not data["factors"]:
        raise FormatError(f"{where}: expected a curve with a non-empty 'factors' array")
    factors = []
    for i, fac in enumerate(data["factors"]):
        loc = f"{where}.factors[{i}]"
        if isinstance(fac, list):
            factors.append(line_from_json(fac, loc))
        else:
            p = poly_from_json(fac, loc)
            if p.degree < 1:
                raise FormatError(f"{loc}: factor must have degree >= 1")
            line = as_line(p)
            factors.append(line if line is not None else p)
    declared = data.get("squarefree", False)
    if not isinstance(declared, bool):
        raise FormatError(f"{where}.squarefree: expected true or false")
    structural = Curve.from_factors(factors, components_squarefree=declared)
    return Curve(structural.factors, declared and structural.squarefree_certified)


def curves_to_json(curves) -> dict:
    return {"curves": [curve_to_json(c) for c in curves]}


def curves_from_json(data: Any) -> list[Curve]:
    if isinstance(data, dict) and "factors" in data:
        return [curve_from_json(data)]
    if not isinstance(data, dict) or not isinstance(data.get("curves"), list):
        raise FormatError("$: expected {'curves': [...]} or a single curve")
    return [curve_from_json(c, f"$.curves[{i}]") for i, c in enumerate(data["curves"])]


def certificate_to_json(cert: GcCertificate) -> dict:
    return {str(i): [line_to_json(l) for l in lines] for i, lines in enumerate(cert.lines)}


def certificate_from_json(data: Any) -> GcCertificate:
    if not isinstance(data, dict):
        raise FormatError("$: expected an object mapping node index to lines")
    mapping = {}
    for key, lines in data.items():
        try:
            idx = int(key)
        except ValueError:
            raise FormatError(f"$[{key!r}]: node index must be an integer") from None
        if not isinstance(lines, list):
            raise FormatError(f"$[{key!r}]: expected an array of lines")
        mapping[idx] = [line_from_json(l, f"$[{key!r}][{j}]") for j, l in enumerate(lines)]
    try:
        return GcCertificate.from_mapping(mapping)
    except ValueError as exc:
        raise FormatError(f"$: {exc}") from None


def load_json(path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dump_json(data: Any, path) -> None:
    Path(path).write_text(json.dumps(data, indent=1, sort_keys=False) + "\n", encoding="utf-8")
