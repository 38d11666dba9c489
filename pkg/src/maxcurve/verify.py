"""Verifiers that compare node-set geometry against closed-form counts.

Each verifier returns a ``VerificationReport``.  Its ``predicted`` values
come only from :mod:`maxcurve.combinatorics`; its ``measured`` values come
only from incidence counts and ranks in :mod:`maxcurve.analysis`.  A report
passes iff the two dictionaries are equal.  Verifiers re-check their
hypotheses and answer ``inapplicable`` (naming the failed hypothesis)
instead of assuming them.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Callable, Iterable, Optional, Sequence

from . import combinatorics as comb
from .analysis import (
    GcCertificate,
    NodeSet,
    certificate_error,
    check_complement_correct,
    interpolate,
    is_correct,
    is_independent,
    is_maximal_curve,
    lagrange_interpolate,
    line_incidences,
    maximal_lines,
    nodes_on_curve,
    overfull_lines,
    uses_curve,
    vandermonde_rank,
)
from .constructions import (
    chung_yao,
    corrupt_onto_line,
    diagonal_curve,
    enlarge_independent_trace,
    enlarge_on_curve,
    grid_curves,
    principal_lattice,
    principal_lattice_certificate,
    random_general_position_lines,
    random_point_sampler,
    two_curve_correct_set,
)
from .poly import (
    Curve,
    Line,
    Poly,
    UnfactoredCurveError,
    evaluate,
    gcd_certificate,
    monomials,
    product_of_lines,
)
from .serialize import point_to_json

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"

# Gasca-Maeztu is known up to this degree; beyond it the maximal-line factor is only reported.
GM_KNOWN_DEGREE = 5


@dataclass
class VerificationReport:
    proposition: str
    parameters: dict[str, Any]
    measured: dict[str, Any]
    predicted: dict[str, Any]
    verdict: str
    witnesses: list = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {
            "proposition": self.proposition,
            "parameters": self.parameters,
            "measured": self.measured,
            "predicted": self.predicted,
            "verdict": self.verdict,
            "witnesses": [
                point_to_json(w) if isinstance(w, tuple) and len(w) == 2
                and all(isinstance(v, Fraction) for v in w) else w
                for w in self.witnesses
            ],
            "note": self.note,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, default=str)


def make_report(
    proposition: str,
    parameters: dict,
    measured: dict,
    predicted: dict,
    witnesses: Sequence = (),
    note: str = "",
) -> VerificationReport:
    verdict = PASS if measured == predicted else FAIL
    return VerificationReport(
        proposition, dict(parameters), dict(measured), dict(predicted), verdict,
        list(witnesses), note,
    )


def inapplicable(proposition: str, parameters: dict, precondition: str) -> VerificationReport:
    return VerificationReport(
        proposition, dict(parameters), {}, {}, INAPPLICABLE, [], precondition
    )


def failure(proposition: str, parameters: dict, cause: str) -> VerificationReport:
    return VerificationReport(
        proposition, dict(parameters), {"error": cause}, {"error": None}, FAIL, [], cause
    )


# ---------------------------------------------------------------------------
# hypothesis checks shared by the curve verifiers


def _curve_problem(X: NodeSet, f: Curve, n: int, name: str) -> Optional[str]:
    if not f.squarefree_certified:
        return f"{name} squarefree"
    if f.total_degree > n:
        return f"{name} degree <= n"
    if not is_maximal_curve(X, f, n):
        return f"{name} maximal"
    return None


def _coprime_problem(f: Curve, g: Curve, names: str) -> Optional[str]:
    try:
        h, _, _ = gcd_certificate(f, g)
    except UnfactoredCurveError:
        return f"{names} decidable common components"
    return f"{names} no common components" if h is not None else None


def _on(X: NodeSet, f: Curve) -> set[int]:
    return set(nodes_on_curve(X, f))


# ---------------------------------------------------------------------------
# single-set verifiers


def verify_correct(X: NodeSet, n: int, params: Optional[dict] = None) -> VerificationReport:
    params = {"n": n, **(params or {})}
    measured = {"nodes": len(X), "rank": vandermonde_rank(X, n)}
    predicted = {"nodes": comb.dim_pi(n), "rank": comb.dim_pi(n)}
    witnesses = []
    for idx in overfull_lines(X, n).values():
        witnesses.extend(idx)
    return make_report("n_correct", params, measured, predicted, sorted(set(witnesses)))


def verify_collinearity_bound(X: NodeSet, n: int, params: Optional[dict] = None) -> VerificationReport:
    """No line may carry more than n + 1 nodes of an n-independent set."""
    params = {"n": n, **(params or {})}
    over = overfull_lines(X, n)
    measured = {"independent": is_independent(X, n), "overfull_lines": len(over)}
    predicted = {"independent": True, "overfull_lines": 0}
    witnesses = sorted({i for idx in over.values() for i in idx})
    note = "; ".join(f"{l} carries {len(idx)} nodes" for l, idx in over.items())
    return make_report("collinearity_bound", params, measured, predicted, witnesses, note)


def verify_maximal_lines(
    X: NodeSet, n: int, expected: Optional[Sequence[Line]] = None, params: Optional[dict] = None
) -> VerificationReport:
    """Maximal lines meet pairwise at nodes, no three are concurrent, at most n + 2 of them."""
    params = {"n": n, **(params or {})}
    ml = maximal_lines(X, n)
    inc = line_incidences(X)
    bad_pairs = [
        (str(a), str(b)) for a, b in combinations(ml, 2)
        if not set(inc[a]) & set(inc[b])
    ]
    concurrent = []
    for a, b, c in combinations(ml, 3):
        p = a.intersection(b)
        if p is not None and c(p) == 0:
            concurrent.append((str(a), str(b), str(c)))
    measured = {
        "excess_over_bound": max(0, len(ml) - (n + 2)),
        "pairs_not_meeting_at_node": len(bad_pairs),
        "concurrent_triples": len(concurrent),
    }
    predicted = {"excess_over_bound": 0, "pairs_not_meeting_at_node": 0, "concurrent_triples": 0}
    if expected is not None:
        measured["maximal_lines"] = sorted(str(l) for l in ml)
        predicted["maximal_lines"] = sorted(str(l.normalized()) for l in expected)
    return make_report(
        "maximal_lines", params, measured, predicted,
        [list(p) for p in bad_pairs + concurrent],
    )


def verify_certificate(X: NodeSet, n: int, cert: GcCertificate, params: Optional[dict] = None) -> VerificationReport:
    params = {"n": n, **(params or {})}
    err = certificate_error(X, n, cert)
    measured = {"certificate_errors": 0 if err is None else 1}
    return make_report(
        "gc_certificate", params, measured, {"certificate_errors": 0},
        [] if err is None else [err[0]], "" if err is None else err[1],
    )


def _random_poly(rng: random.Random, n: int) -> Poly:
    return Poly(n, tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in monomials(n)))


def verify_interpolation(
    X: NodeSet, n: int, seed: int = 0, trials: int = 20, params: Optional[dict] = None
) -> VerificationReport:
    """Interpolation reproduces random polynomials of degree <= n exactly; so does the Lagrange sum."""
    params = {"n": n, "trials": trials, **(params or {})}
    if not is_correct(X, n):
        return inapplicable("interpolation_fidelity", params, "n-correct")
    rng = random.Random(seed)
    solve_bad = lagrange_bad = value_bad = 0
    witnesses = []
    for t in range(trials):
        p = _random_poly(rng, n)
        data = [evaluate(p, a) for a in X]
        q = interpolate(X, data, n)
        lq = lagrange_interpolate(X, data, n)
        if q.padded(n) != p.padded(n):
            solve_bad += 1
            witnesses.append(t)
        if lq.padded(n) != p.padded(n):
            lagrange_bad += 1
            witnesses.append(t)
        # arbitrary data, not sampled from a polynomial of known form
        arb = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in X]
        r = lagrange_interpolate(X, arb, n)
        if [evaluate(r, a) for a in X] != arb:
            value_bad += 1
            witnesses.append(t)
    measured = {"solve_mismatches": solve_bad, "lagrange_mismatches": lagrange_bad, "data_mismatches": value_bad}
    predicted = {"solve_mismatches": 0, "lagrange_mismatches": 0, "data_mismatches": 0}
    return make_report("interpolation_fidelity", params, measured, predicted, sorted(set(witnesses)))


# ---------------------------------------------------------------------------
# maximal-curve verifiers


def verify_maximality_equivalences(X: NodeSet, f: Curve, n: int, params: Optional[dict] = None) -> VerificationReport:
    """Maximal by count <=> used by every node off f <=> complement is (n-k)-correct."""
    k = f.total_degree
    params = {"n": n, "k": k, **(params or {})}
    if not f.squarefree_certified:
        return inapplicable("maximality_equivalences", params, "squarefree")
    if k > n or k < 1:
        return inapplicable("maximality_equivalences", params, "1 <= degree <= n")
    if not is_correct(X, n):
        return inapplicable("maximality_equivalences", params, "n-correct")
    on = _on(X, f)
    maximal = len(on) == comb.d_count(n, k)
    not_using = [a for a in range(len(X)) if a not in on and not uses_curve(X, a, f, n)]
    complement = check_complement_correct(X, f, n)
    measured = {"used_by_every_off_node": not not_using, "complement_correct": complement}
    predicted = {"used_by_every_off_node": maximal, "complement_correct": maximal}
    params["maximal"] = maximal
    return make_report("maximality_equivalences", params, measured, predicted, not_using)


def verify_product(X: NodeSet, f1: Curve, f2: Curve, n: int, params: Optional[dict] = None) -> VerificationReport:
    """Two coprime maximal curves: product maximal if k1 + k2 <= n, else they cover X."""
    k1, k2 = f1.total_degree, f2.total_degree
    params = {"n": n, "k1": k1, "k2": k2, **(params or {})}
    prop = "maximal_product"
    for problem in (_curve_problem(X, f1, n, "f1"), _curve_problem(X, f2, n, "f2"),
                    _coprime_problem(f1, f2, "f1,f2")):
        if problem:
            return inapplicable(prop, params, problem)
    if k1 + k2 <= n:
        on = _on(X, f1 * f2)
        return make_report(
            prop, params, {"product_nodes": len(on)},
            {"product_nodes": comb.d_count(n, k1 + k2)},
        )
    uncovered = sorted(set(range(len(X))) - _on(X, f1) - _on(X, f2))
    return make_report(prop, params, {"uncovered_nodes": len(uncovered)}, {"uncovered_nodes": 0}, uncovered)


def verify_quotient(X: NodeSet, f: Curve, h: Curve, n: int, params: Optional[dict] = None) -> VerificationReport:
    """If f and f*h are maximal, h is maximal for X minus f at degree n - deg f."""
    k, m = f.total_degree, h.total_degree
    params = {"n": n, "k": k, "m": m, **(params or {})}
    prop = "maximal_quotient"
    fh = f * h
    for problem in (_curve_problem(X, f, n, "f"), _curve_problem(X, fh, n, "f*h")):
        if problem:
            return inapplicable(prop, params, problem)
    rest = X.without(nodes_on_curve(X, f))
    return make_report(
        prop, params,
        {"nodes_on_h_off_f": len(nodes_on_curve(rest, h)), "rest_correct": is_correct(rest, n - k)},
        {"nodes_on_h_off_f": comb.d_count(n - k, m), "rest_correct": True},
    )


def verify_pairwise(X: NodeSet, f1: Curve, f2: Curve, n: int, params: Optional[dict] = None) -> VerificationReport:
    """Two coprime maximal curves share exactly H^n_{k1,k2} nodes."""
    k1, k2 = f1.total_degree, f2.total_degree
    params = {"n": n, "k1": k1, "k2": k2, **(params or {})}
    prop = "pairwise_intersection"
    for problem in (_curve_problem(X, f1, n, "f1"), _curve_problem(X, f2, n, "f2"),
                    _coprime_problem(f1, f2, "f1,f2")):
        if problem:
            return inapplicable(prop, params, problem)
    on1, on2 = _on(X, f1), _on(X, f2)
    common = sorted(on1 & on2)
    measured = {"common_nodes": len(common)}
    predicted = {"common_nodes": comb.hilbert_count(k1, k2, n)}
    witnesses: list = common
    if k1 + k2 >= n + 1:
        uncovered = sorted(set(range(len(X))) - on1 - on2)
        measured["uncovered_nodes"] = len(uncovered)
        predicted["uncovered_nodes"] = 0
        if uncovered:
            witnesses = uncovered
    return make_report(prop, params, measured, predicted, witnesses)


def verify_common_component(
    X: NodeSet, h: Optional[Curve], g1: Curve, g2: Curve, n: int, params: Optional[dict] = None
) -> VerificationReport:
    """f1 = h*g1 and f2 = h*g2 maximal with gcd h share d(n,m) + H^{n-m}_{s1,s2} nodes."""
    if h is None:
        return verify_pairwise(X, g1, g2, n, params)
    m, s1, s2 = h.total_degree, g1.total_degree, g2.total_degree
    params = {"n": n, "m": m, "s1": s1, "s2": s2, **(params or {})}
    prop = "common_component_intersection"
    f1, f2 = h * g1, h * g2
    for problem in (_curve_problem(X, f1, n, "h*g1"), _curve_problem(X, f2, n, "h*g2"),
                    _coprime_problem(g1, g2, "g1,g2")):
        if problem:
            return inapplicable(prop, params, problem)
    on_h, on1, on2 = _on(X, h), _on(X, g1), _on(X, g2)
    common = (on_h | on1) & (on_h | on2)
    measured = {"common_nodes": len(common)}
    predicted = {"common_nodes": comb.d_count(n, m) + comb.hilbert_count(s1, s2, n - m)}
    if s1 + s2 + m <= n + 2:
        off_h = set(range(len(X))) - on_h
        measured.update(
            h_nodes=len(on_h),
            g1_nodes_off_h=len(on1 & off_h),
            g2_nodes_off_h=len(on2 & off_h),
            g1_g2_common=len(on1 & on2),
            h_g1_g2_common=len(on_h & on1 & on2),
        )
        predicted.update(
            h_nodes=comb.d_count(n, m),
            g1_nodes_off_h=comb.d_count(n - m, s1),
            g2_nodes_off_h=comb.d_count(n - m, s2),
            g1_g2_common=s1 * s2,
            h_g1_g2_common=0,
        )
    if s1 + s2 + m <= n:
        measured["product_nodes"] = len(on_h | on1 | on2)
        predicted["product_nodes"] = comb.d_count(n, s1 + s2 + m)
    return make_report(prop, params, measured, predicted, sorted(common))


def verify_triple(
    X: NodeSet, f1: Curve, f2: Curve, f3: Curve, n: int, params: Optional[dict] = None
) -> VerificationReport:
    """Common nodes of three pairwise coprime maximal curves, governed by sigma."""
    ks = (f1.total_degree, f2.total_degree, f3.total_degree)
    s = comb.sigma(n, *ks)
    params = {"n": n, "k1": ks[0], "k2": ks[1], "k3": ks[2], "sigma": s, **(params or {})}
    prop = "triple_intersection"
    curves = (f1, f2, f3)
    for i, f in enumerate(curves):
        problem = _curve_problem(X, f, n, f"f{i + 1}")
        if problem:
            return inapplicable(prop, params, problem)
    for i, j in ((0, 1), (1, 2), (0, 2)):
        problem = _coprime_problem(curves[i], curves[j], f"f{i + 1},f{j + 1}")
        if problem:
            return inapplicable(prop, params, problem)
    ons = [_on(X, f) for f in curves]
    common = sorted(ons[0] & ons[1] & ons[2])
    c = len(common)
    measured: dict[str, Any] = {}
    predicted: dict[str, Any] = {}
    if s <= 0:
        measured["triple_common"] = c
        predicted["triple_common"] = 0
    if s >= -1:
        ex = comb.triple_sigma_expressions(n, *ks)
        for name in ("i", "ii", "iii", "iv", "v"):
            value = getattr(ex, name)
            if value is not None:
                measured[f"expr_{name}"] = c
                predicted[f"expr_{name}"] = value
        uncovered = sorted(set(range(len(X))) - ons[0] - ons[1] - ons[2])
        measured["uncovered_nodes"] = len(uncovered)
        predicted["uncovered_nodes"] = 0
        if uncovered:
            common = uncovered
    note = ""
    if s >= -1 and ex.v is None:
        note = "sigma(sigma+1)/2 inapplicable: pairs " + ",".join(
            f"{a}{b}" for a, b in ex.violating_pairs
        ) + " exceed n+2"
    return make_report(prop, params, measured, predicted, common, note)


def find_cascade(X: NodeSet, lines: Sequence[Line], n: int) -> Optional[list[int]]:
    """An ordering of ``lines`` whose i-th line adds exactly n + 2 - i new nodes, if any."""
    on = [set(nodes_on_curve(X, l)) for l in lines]
    k = len(lines)

    def search(order: list[int], covered: set[int]) -> Optional[list[int]]:
        if len(order) == k:
            return order
        want = n + 1 - len(order)
        for idx in range(k):
            if idx not in order and len(on[idx] - covered) == want:
                found = search(order + [idx], covered | on[idx])
                if found is not None:
                    return found
        return None

    return search([], set())


def verify_gc_maximal_decomposition(
    X: NodeSet, cert: GcCertificate, f: Curve, n: int, params: Optional[dict] = None
) -> VerificationReport:
    """In a GC set, a product of lines is maximal iff its lines admit the n+1, n, ... cascade."""
    lines = f.lines()  # raises UnfactoredCurveError for non-line factors
    k = len(lines)
    params = {"n": n, "k": k, **(params or {})}
    prop = "gc_cascade"
    if not 1 <= k <= n:
        return inapplicable(prop, params, "1 <= degree <= n")
    if not f.squarefree_certified:
        return inapplicable(prop, params, "squarefree")
    if certificate_error(X, n, cert) is not None:
        return inapplicable(prop, params, "GC certificate")
    maximal = len(_on(X, f)) == comb.d_count(n, k)
    order = find_cascade(X, lines, n)
    measured: dict[str, Any] = {"maximal": maximal}
    predicted: dict[str, Any] = {"maximal": order is not None}
    note = ""
    if order is not None:
        note = "cascade counts " + ",".join(str(n + 1 - i) for i in range(k))
    if maximal:
        has_ml = bool(set(lines) & set(maximal_lines(X, n)))
        if n <= GM_KNOWN_DEGREE:
            measured["maximal_line_factor"] = has_ml
            predicted["maximal_line_factor"] = True
        else:
            note += f"; maximal line factor present: {has_ml} (not asserted)"
    return make_report(prop, params, measured, predicted, order or [], note.strip("; "))


# ---------------------------------------------------------------------------
# combinatorial identity reports


def _identity_report(name: str, limit: int, check: Callable[[], Iterable]) -> VerificationReport:
    bad = list(check())
    return make_report(
        name, {"max": limit}, {"mismatches": len(bad)}, {"mismatches": 0},
        [list(b) for b in bad[:10]],
    )


def identity_reports(limit: int = 14, triple_limit: int = 12) -> list[VerificationReport]:
    """Exhaustive pointwise checks of the counting identities."""
    R = range(limit + 1)
    N, d, H = comb.dim_pi, comb.d_count, comb.hilbert_count

    def hilbert_enum():
        for k, m, n in product(R, R, R):
            if H(k, m, n) != len(comb.rect_slice(k, m, n).points):
                yield (k, m, n)

    def lattice_size():
        for n in R:
            if len(comb.triangular_lattice(n).points) != N(n):
                yield (n,)

    def d_closed_form():
        for n, k in product(R, R):
            if k <= n + 2 and d(n, k) != k * (2 * n + 3 - k) // 2:
                yield (n, k)
            if k >= n + 1 and d(n, k) != N(n):
                yield (n, k)

    def d_shift_diag():
        for n, m, k in product(R, R, R):
            if 0 <= k <= min(m, n) and m <= n and d(n, m) - d(n, k) != d(n - k, m - k):
                yield (n, m, k)

    def d_ext(a: int, b: int) -> int:
        return N(a) - N(a - b)  # d extended by zero to negative degrees

    def d_shift_rect():
        for n, m, k in product(R, R, R):
            if m <= n and k <= n - m + 2 and d(n, m) - m * k != d_ext(n - k, m):
                yield (n, m, k)

    def hilbert_small():
        for k, m, n in product(R, R, R):
            if k + m <= n + 2 and H(k, m, n) != k * m:
                yield (k, m, n)

    def hilbert_large():
        for k, m, n in product(R, R, R):
            if k + m >= n + 1 and H(k, m, n) != N(n) - N(n - k) - N(n - m):
                yield (k, m, n)

    def hilbert_deficit():
        # the corner (k-1, m-1) exists only for k, m >= 1
        for k, m, n in product(R[1:], R[1:], R):
            if (H(k, m, n) <= k * m - 1) != (k + m >= n + 3):
                yield (k, m, n)

    def hilbert_inclusion_exclusion():
        for k, m, n in product(R, R, R):
            tri = comb.triangular_lattice
            pts = tri(n).points
            pts = pts - tri(n - k, k, 0).points if n - k >= 0 else pts
            pts = pts - tri(n - m, 0, m).points if n - m >= 0 else pts
            if len(pts) != H(k, m, n):
                yield (k, m, n)

    def d_tilde_identity():
        for n, k in product(R, R):
            if comb.d_tilde(n, k) != d(n, k) - N(k - n - 3):
                yield (n, k)

    def five_expressions():
        for n in range(triple_limit + 1):
            for ks in product(range(n + 1), repeat=3):
                if comb.sigma(n, *ks) >= -1 and not comb.triple_sigma_expressions(n, *ks).agree:
                    yield (n, *ks)

    return [
        _identity_report("hilbert_count_enumeration", limit, hilbert_enum),
        _identity_report("triangular_lattice_size", limit, lattice_size),
        _identity_report("d_closed_forms", limit, d_closed_form),
        _identity_report("d_shift_diagonal", limit, d_shift_diag),
        _identity_report("d_shift_rectangle", limit, d_shift_rect),
        _identity_report("hilbert_small_rectangle", limit, hilbert_small),
        _identity_report("hilbert_large_rectangle", limit, hilbert_large),
        _identity_report("hilbert_deficit_criterion", limit, hilbert_deficit),
        _identity_report("hilbert_disjoint_decomposition", limit, hilbert_inclusion_exclusion),
        _identity_report("d_tilde_correction", limit, d_tilde_identity),
        _identity_report("five_expression_agreement", triple_limit, five_expressions),
    ]


# ---------------------------------------------------------------------------
# families and the suite


@dataclass(frozen=True)
class Family:
    """A constructed GC set together with the lines used to build it."""

    kind: str
    n: int
    seed: Optional[int]
    nodes: NodeSet
    certificate: GcCertificate
    lines: tuple[Line, ...]

    @property
    def label(self) -> dict:
        out = {"family": self.kind, "n": self.n}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def chung_yao_family(n: int, seed: int) -> Family:
    L = random_general_position_lines(n, seed)
    X, cert = chung_yao(L)
    return Family("chung-yao", n, seed, X, cert, L.lines)


def principal_family(n: int) -> Family:
    X = principal_lattice(n)
    lines = (
        [Line.from_coeffs(1, 0, -a) for a in range(n + 1)]
        + [Line.from_coeffs(0, 1, -b) for b in range(n + 1)]
        + [Line.from_coeffs(1, 1, -c) for c in range(n + 1)]
    )
    return Family("principal", n, None, X, principal_lattice_certificate(n), tuple(lines))


def _nonempty_subsets(items: Sequence, max_size: int):
    for size in range(1, max_size + 1):
        yield from combinations(items, size)


def _extra_lines(fam: Family, count: int) -> list[Line]:
    """Deterministic lines through exactly two nodes that are not family lines."""
    base = set(fam.lines)
    return [l for l, idx in line_incidences(fam.nodes).items() if l not in base and len(idx) == 2][:count]


@dataclass
class SuiteConfig:
    presets: tuple[str, ...] = ("all",)
    max_degree: int = 5
    seeds: int = 3
    principal_max_degree: int = 8
    principal_curve_degree: int = 3
    identity_limit: int = 14
    triple_limit: int = 12
    interpolation_trials: int = 20
    corrupt: bool = False
    degree: Optional[int] = None  # restrict geometric families to this single degree

    @classmethod
    def from_json(cls, data: dict) -> "SuiteConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        if "presets" in data:
            data["presets"] = tuple(data["presets"])
        return cls(**data)

    def degrees(self, top: Optional[int] = None, low: int = 1) -> range:
        top = self.max_degree if top is None else top
        if self.degree is not None:
            return range(self.degree, self.degree + 1) if low <= self.degree <= top else range(0)
        return range(low, top + 1)

    def wants(self, preset: str) -> bool:
        return "all" in self.presets or preset in self.presets


PRESETS = ("identities", "construction", "maximality", "pairwise", "triple", "gc", "all")


def _guard(reports: list, prop: str, params: dict, fn: Callable[[], Iterable[VerificationReport]]):
    try:
        reports.extend(fn())
    except Exception as exc:  # construction errors become failed reports
        reports.append(failure(prop, params, f"{type(exc).__name__}: {exc}"))


def _cy_families(cfg: SuiteConfig, reports: list) -> list[Family]:
    fams = []
    for n in cfg.degrees():
        for seed in range(cfg.seeds):
            try:
                fams.append(chung_yao_family(n, seed))
            except Exception as exc:
                reports.append(failure("construction", {"family": "chung-yao", "n": n, "seed": seed},
                                       f"{type(exc).__name__}: {exc}"))
    return fams


def construction_reports(cfg: SuiteConfig, cy: Sequence[Family]) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    for n in cfg.degrees(cfg.principal_max_degree, 0):
        fam = principal_family(n)
        lab = fam.label
        out.append(verify_correct(fam.nodes, n, lab))
        out.append(verify_certificate(fam.nodes, n, fam.certificate, lab))
        out.append(verify_maximal_lines(fam.nodes, n, None, lab))
        if n <= cfg.max_degree:
            out.append(verify_interpolation(fam.nodes, n, n, cfg.interpolation_trials, lab))
    for fam in cy:
        lab = fam.label
        out.append(verify_correct(fam.nodes, fam.n, lab))
        out.append(verify_collinearity_bound(fam.nodes, fam.n, lab))
        out.append(verify_certificate(fam.nodes, fam.n, fam.certificate, lab))
        out.append(verify_maximal_lines(fam.nodes, fam.n, fam.lines, lab))
        out.append(verify_interpolation(fam.nodes, fam.n, fam.seed or 0, cfg.interpolation_trials, lab))
        if cfg.corrupt:
            out.extend(corruption_reports(fam))
    for m, k in ((2, 2), (2, 3), (3, 3)):
        for delta in (0, 1):
            params = {"family": "two-curve", "m": m, "k": k, "delta": delta}
            _guard(out, "two_curve_construction", params,
                   lambda m=m, k=k, delta=delta, params=params: two_curve_reports(m, k, delta, params))
    for n in cfg.degrees(min(cfg.max_degree, 4)):
        params = {"family": "enlargement", "n": n}
        _guard(out, "enlargement", params, lambda n=n, params=params: enlargement_reports(n, params))
    return out


def corruption_reports(fam: Family) -> list[VerificationReport]:
    """Move a node onto a maximal line missing it; the set must then fail."""
    target = fam.lines[-1]
    node = next(i for i, p in enumerate(fam.nodes) if target(p) != 0)
    bad = corrupt_onto_line(fam.nodes, target, node, seed=fam.seed or 0)
    lab = {**fam.label, "corrupted_node": node}
    return [verify_correct(bad, fam.n, lab), verify_collinearity_bound(bad, fam.n, lab)]


def two_curve_reports(m: int, k: int, delta: int, params: dict) -> list[VerificationReport]:
    f, g = grid_curves(m, k)
    spec = two_curve_correct_set(f, g, delta)
    X, n = spec.nodes, spec.n
    on_f, on_g = _on(X, f), _on(X, g)
    measured = {
        "nodes": len(X),
        "correct": is_correct(X, n),
        "f_nodes": len(on_f),
        "g_nodes": len(on_g),
        "f_nodes_split": len(spec.intersections) + len(spec.cf),
    }
    predicted = {
        "nodes": comb.dim_pi(m + k - 2 + delta),
        "correct": True,
        "f_nodes": comb.d_count(n, m),
        "g_nodes": comb.d_count(n, k),
        "f_nodes_split": m * k + comb.dim_pi(m - 2 + delta),
    }
    return [make_report("two_curve_construction", {**params, "n": n}, measured, predicted)]


def enlargement_reports(n: int, params: dict) -> list[VerificationReport]:
    out = []
    line = Line.from_coeffs(1, -2, 1)
    start = NodeSet(tuple(line.point_at(t) for t in range(n + 1)))
    trace = enlarge_independent_trace(start, n, random_point_sampler(n))
    steps = [b - a for a, b in zip(trace.ranks, trace.ranks[1:])]
    out.append(make_report(
        "greedy_enlargement", params,
        {"correct": is_correct(trace.nodes, n), "rank_steps": sorted(set(steps))},
        {"correct": True, "rank_steps": [1] if steps else []},
    ))
    for k in range(1, n + 1):
        q = product_of_lines([Line.from_coeffs(1, 0, -a) for a in range(k)])
        Y = enlarge_on_curve(NodeSet(()), q, n, seed=k)
        out.append(make_report(
            "enlargement_on_curve", {**params, "k": k},
            {"nodes": len(Y), "independent": is_independent(Y, n)},
            {"nodes": comb.d_count(n, k), "independent": True},
        ))
    return out


def maximality_reports(cfg: SuiteConfig, cy: Sequence[Family]) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    fams = list(cy) + [principal_family(n) for n in cfg.degrees(cfg.principal_curve_degree)]
    for fam in fams:
        n, X, lab = fam.n, fam.nodes, fam.label
        extra = _extra_lines(fam, 3) if fam.kind == "chung-yao" else []
        curves = [product_of_lines(s) for s in _nonempty_subsets(fam.lines, n)]
        curves += [
            product_of_lines(s + (e,))
            for s in _nonempty_subsets(fam.lines, n - 1) for e in extra
        ]
        for f in curves:
            out.append(verify_maximality_equivalences(X, f, n, lab))
        maximal = [
            s for s in _nonempty_subsets(fam.lines, n)
            if is_maximal_curve(X, product_of_lines(s), n)
        ]
        for s1, s2 in combinations(maximal, 2):
            if set(s1) & set(s2):
                if set(s1) < set(s2):
                    rest = tuple(l for l in s2 if l not in s1)
                    out.append(verify_quotient(X, product_of_lines(s1), product_of_lines(rest), n, lab))
                continue
            out.append(verify_product(X, product_of_lines(s1), product_of_lines(s2), n, lab))
    return out


def _disjoint_pairs(lines: Sequence[Line], n: int):
    """Unordered pairs of disjoint nonempty line groups, each of size <= n."""
    k = len(lines)
    seen = set()
    for labels in product(range(3), repeat=k):
        a = tuple(i for i in range(k) if labels[i] == 1)
        b = tuple(i for i in range(k) if labels[i] == 2)
        if not a or not b or len(a) > n or len(b) > n:
            continue
        key = tuple(sorted((a, b)))
        if key in seen:
            continue
        seen.add(key)
        yield tuple(lines[i] for i in key[0]), tuple(lines[i] for i in key[1])


def _disjoint_triples(lines: Sequence[Line], n: int):
    k = len(lines)
    seen = set()
    for labels in product(range(4), repeat=k):
        groups = [tuple(i for i in range(k) if labels[i] == g) for g in (1, 2, 3)]
        if any(not g or len(g) > n for g in groups):
            continue
        key = tuple(sorted(groups))
        if key in seen:
            continue
        seen.add(key)
        yield tuple(tuple(lines[i] for i in g) for g in key)


def pairwise_reports(cfg: SuiteConfig, cy: Sequence[Family]) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    for fam in cy:
        n, X, lab = fam.n, fam.nodes, fam.label
        for a, b in _disjoint_pairs(fam.lines, n):
            out.append(verify_pairwise(X, product_of_lines(a), product_of_lines(b), n, lab))
        # common component h with coprime cofactors g1, g2
        idx = range(len(fam.lines))
        for labels in product(range(4), repeat=len(fam.lines)):
            h = [fam.lines[i] for i in idx if labels[i] == 1]
            g1 = [fam.lines[i] for i in idx if labels[i] == 2]
            g2 = [fam.lines[i] for i in idx if labels[i] == 3]
            if not h or not g1 or not g2 or len(h) + max(len(g1), len(g2)) > n:
                continue
            if labels.index(2) > labels.index(3):
                continue  # g1, g2 symmetric
            out.append(verify_common_component(
                X, product_of_lines(h), product_of_lines(g1), product_of_lines(g2), n, lab
            ))
    # pencils on principal lattices reach k1 + k2 > n + 2
    for n in cfg.degrees():
        X = principal_lattice(n)
        lab = {"family": "principal-pencils", "n": n}
        for k, m in product(range(1, n + 1), repeat=2):
            f, g = grid_curves(k, m)
            out.append(verify_pairwise(X, f, g, n, lab))
            out.append(verify_pairwise(X, f, diagonal_curve(n, m), n, lab))
        # h = x-pencil, g1 = y-pencil, g2 = diagonals
        for m, s1, s2 in product(range(1, n), repeat=3):
            if m + max(s1, s2) > n:
                continue
            h, g1 = grid_curves(m, s1)
            out.append(verify_common_component(X, h, g1, diagonal_curve(n, s2), n, lab))
    return out


def triple_reports(cfg: SuiteConfig, cy: Sequence[Family]) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    for fam in cy:
        n, X, lab = fam.n, fam.nodes, fam.label
        for a, b, c in _disjoint_triples(fam.lines, n):
            out.append(verify_triple(
                X, product_of_lines(a), product_of_lines(b), product_of_lines(c), n, lab
            ))
    # three pencils on principal lattices cover sigma >= 1
    for n in cfg.degrees():
        X = principal_lattice(n)
        for k1, k2, k3 in product(range(1, n + 1), repeat=3):
            f, g = grid_curves(k1, k2)
            out.append(verify_triple(X, f, g, diagonal_curve(n, k3), n,
                                     {"family": "principal-pencils", "n": n}))
    return out


def gc_reports(cfg: SuiteConfig, cy: Sequence[Family]) -> list[VerificationReport]:
    out: list[VerificationReport] = []
    fams = list(cy) + [principal_family(n) for n in cfg.degrees(min(cfg.max_degree, 4))]
    for fam in fams:
        n, X, lab = fam.n, fam.nodes, fam.label
        curves = [product_of_lines(s) for s in _nonempty_subsets(fam.lines, n)]
        if fam.kind == "chung-yao":
            extra = _extra_lines(fam, 3)
            curves += [
                product_of_lines(s + (e,))
                for s in _nonempty_subsets(fam.lines, n - 1) for e in extra
            ]
            # each certified fundamental polynomial is itself a maximal curve of degree n
            curves += [product_of_lines(fam.certificate[a]) for a in range(min(len(X), 3)) if n >= 1]
        for f in curves:
            out.append(verify_gc_maximal_decomposition(X, fam.certificate, f, n, lab))
    return out


def run_suite(cfg: SuiteConfig) -> list[VerificationReport]:
    """Deterministic list of reports for the selected presets."""
    for p in cfg.presets:
        if p not in PRESETS:
            raise ValueError(f"unknown preset {p!r}; choose from {', '.join(PRESETS)}")
    reports: list[VerificationReport] = []
    if cfg.wants("identities"):
        reports.extend(identity_reports(cfg.identity_limit, cfg.triple_limit))
    geometric = [p for p in PRESETS[1:-1] if cfg.wants(p)]
    if not geometric:
        return reports
    cy = _cy_families(cfg, reports)
    builders = {
        "construction": construction_reports,
        "maximality": maximality_reports,
        "pairwise": pairwise_reports,
        "triple": triple_reports,
        "gc": gc_reports,
    }
    for name in geometric:
        _guard(reports, name, {"preset": name}, lambda name=name: builders[name](cfg, cy))
    return reports


def suite_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.verdict != FAIL for r in reports)


def summarize(reports: Sequence[VerificationReport]) -> list[tuple[str, int, int, int]]:
    """Per-proposition counts of (pass, fail, inapplicable) in first-seen order."""
    table: dict[str, list[int]] = {}
    for r in reports:
        row = table.setdefault(r.proposition, [0, 0, 0])
        row[(PASS, FAIL, INAPPLICABLE).index(r.verdict)] += 1
    return [(name, *counts) for name, counts in table.items()]
