"""Generators for the node-set families used throughout the package.

Every generator is a deterministic function of its parameters and seed.
Random choices come from ``random.Random(seed)`` and all geometric
predicates (parallelism, concurrency, rank growth) are exact.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .analysis import GcCertificate, NodeSet, is_correct
from .combinatorics import d_count, dim_pi
from .linalg import RowEchelon
from .poly import Curve, Line, Point, as_line, monomial_values, product_of_lines

RESAMPLE_BUDGET = 64
CANDIDATE_BUDGET = 1024


class ResamplingBudgetExceeded(RuntimeError):
    pass


class SamplerExhausted(RuntimeError):
    pass


class CurveNotSamplable(ValueError):
    pass


class IntersectionDegenerate(ValueError):
    pass


def candidate_budget() -> int:
    """Candidate-point budget; the MAXCURVE_BUDGET environment variable overrides it."""
    raw = os.environ.get("MAXCURVE_BUDGET")
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError("MAXCURVE_BUDGET must be positive")
        return value
    return CANDIDATE_BUDGET


def principal_lattice(n: int, i0: int = 0, j0: int = 0) -> NodeSet:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return NodeSet(
        tuple(
            Point(Fraction(i + i0), Fraction(j + j0))
            for i in range(n + 1)
            for j in range(n + 1 - i)
        )
    )


def principal_lattice_certificate(n: int, i0: int = 0, j0: int = 0) -> GcCertificate:
    """Line factors of the fundamental polynomials of the principal lattice.

    Node (i, j) uses x = a for a < i, y = b for b < j, and x + y = c for
    c > i + j (shifted by the offset).
    """
    X = principal_lattice(n, i0, j0)
    per_node = []
    for p in X:
        i, j = int(p.x) - i0, int(p.y) - j0
        lines = [Line.from_coeffs(1, 0, -(a + i0)) for a in range(i)]
        lines += [Line.from_coeffs(0, 1, -(b + j0)) for b in range(j)]
        lines += [Line.from_coeffs(1, 1, -(c + i0 + j0)) for c in range(i + j + 1, n + 1)]
        per_node.append(tuple(lines))
    return GcCertificate(tuple(per_node))


@dataclass(frozen=True)
class GeneralPositionLines:
    lines: tuple[Line, ...]
    n: int

    def __post_init__(self):
        if len(self.lines) != self.n + 2:
            raise ValueError(f"need n + 2 = {self.n + 2} lines, got {len(self.lines)}")
        problem = general_position_violation(self.lines)
        if problem:
            raise ValueError(problem)


def general_position_violation(lines: Sequence[Line]) -> Optional[str]:
    for a, b in combinations(range(len(lines)), 2):
        if lines[a].is_parallel(lines[b]):
            return f"lines {a} and {b} are parallel"
    for a, b, c in combinations(range(len(lines)), 3):
        if lines[c](lines[a].intersection(lines[b])) == 0:
            return f"lines {a}, {b}, {c} are concurrent"
    return None


def _random_rational(rng: random.Random, bound: int = 9, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_general_position_lines(n: int, seed: int) -> GeneralPositionLines:
    if n < 0:
        raise ValueError("degree must be non-negative")
    rng = random.Random(seed)
    lines: list[Line] = []
    while len(lines) < n + 2:
        for _ in range(RESAMPLE_BUDGET):
            a, b = _random_rational(rng), _random_rational(rng)
            if a == 0 and b == 0:
                continue
            cand = Line.from_coeffs(a, b, _random_rational(rng))
            if general_position_violation(lines + [cand]) is None:
                lines.append(cand)
                break
        else:
            raise ResamplingBudgetExceeded(
                f"no admissible line after {RESAMPLE_BUDGET} draws"
            )
    return GeneralPositionLines(tuple(lines), n)


def chung_yao(L: GeneralPositionLines) -> tuple[NodeSet, GcCertificate]:
    """Pairwise intersections of n + 2 lines in general position, with their GC certificate.

    Nodes are ordered by the index pair (i, j), i < j, of the lines meeting there.
    """
    pairs = list(combinations(range(len(L.lines)), 2))
    nodes = tuple(L.lines[i].intersection(L.lines[j]) for i, j in pairs)
    cert = GcCertificate(
        tuple(
            tuple(l for k, l in enumerate(L.lines) if k not in (i, j))
            for i, j in pairs
        )
    )
    return NodeSet(nodes), cert


def grid_curves(k: int, m: int) -> tuple[Curve, Curve]:
    """x(x-1)...(x-k+1) and y(y-1)...(y-m+1)."""
    if k < 1 or m < 1:
        raise ValueError("grid curve degrees must be >= 1")
    f = product_of_lines([Line.from_coeffs(1, 0, -a) for a in range(k)])
    g = product_of_lines([Line.from_coeffs(0, 1, -b) for b in range(m)])
    return f, g


def diagonal_curve(n: int, k: int) -> Curve:
    """(x+y-n)(x+y-n+1)...(x+y-n+k-1): the k outermost diagonals of the principal lattice."""
    if not 1 <= k <= n + 1:
        raise ValueError("need 1 <= k <= n + 1")
    return product_of_lines([Line.from_coeffs(1, 1, -(n - c)) for c in range(k)])


def random_point_sampler(seed: int, bound: int = 12, max_den: int = 4) -> Iterator[Point]:
    rng = random.Random(seed)
    while True:
        yield Point(_random_rational(rng, bound, max_den), _random_rational(rng, bound, max_den))


def curve_point_sampler(q: Curve, seed: int, bound: int = 12, max_den: int = 4) -> Iterator[Point]:
    """Points on the line factors of q, visiting the factors round-robin."""
    lines = [as_line(f) for f in q.factors]
    if any(l is None for l in lines):
        raise CurveNotSamplable("curve has non-linear factors and no point source")
    rng = random.Random(seed)
    while True:
        for line in lines:
            yield line.point_at(_random_rational(rng, bound, max_den))


@dataclass
class EnlargementResult:
    nodes: NodeSet
    ranks: list[int]
    tried: int


def _greedy_extend(
    X: NodeSet,
    n: int,
    target: int,
    candidates: Iterable,
    accept: Callable[[Point], bool],
    budget: int,
) -> EnlargementResult:
    echelon = RowEchelon(dim_pi(n))
    for p in X:
        if not echelon.add(monomial_values(p, n)):
            raise ValueError(f"starting set is not {n}-independent")
    nodes = list(X.nodes)
    present = set(nodes)
    ranks = [echelon.rank]
    tried = 0
    it = iter(candidates)
    while len(nodes) < target:
        if tried >= budget:
            raise SamplerExhausted(
                f"reached {len(nodes)} of {target} nodes after {budget} candidates"
            )
        try:
            p = next(it)
        except StopIteration:
            raise SamplerExhausted(
                f"point source ran dry at {len(nodes)} of {target} nodes"
            ) from None
        tried += 1
        p = Point(Fraction(p[0]), Fraction(p[1]))
        if p in present or not accept(p):
            continue
        if echelon.add(monomial_values(p, n)):
            nodes.append(p)
            present.add(p)
            ranks.append(echelon.rank)
    return EnlargementResult(NodeSet(tuple(nodes)), ranks, tried)


def enlarge_independent_trace(
    X: NodeSet, n: int, sampler: Iterable, budget: Optional[int] = None
) -> EnlargementResult:
    return _greedy_extend(
        X, n, dim_pi(n), sampler, lambda p: True,
        candidate_budget() if budget is None else budget,
    )


def enlarge_independent(
    X: NodeSet, n: int, sampler: Iterable, budget: Optional[int] = None
) -> NodeSet:
    """Greedily add sampled points that raise the Vandermonde rank until X is n-correct."""
    return enlarge_independent_trace(X, n, sampler, budget).nodes


def enlarge_on_curve(
    X: NodeSet,
    q: Curve,
    n: int,
    sampler: Optional[Iterable] = None,
    seed: int = 0,
    budget: Optional[int] = None,
) -> NodeSet:
    """Grow an n-independent subset of q to d(n, deg q) nodes.

    Without a sampler, q must be a product of lines.  Degrees above n are
    accepted (the target is then dim_pi(n)) but carry no existence guarantee.
    """
    k = q.total_degree
    if not q.squarefree_certified:
        raise ValueError("curve must be certified free of multiple components")
    if any(q(p) != 0 for p in X):
        raise ValueError("starting nodes must lie on the curve")
    if sampler is None:
        sampler = curve_point_sampler(q, seed)
    return _greedy_extend(
        X, n, d_count(n, k), sampler, lambda p: q(p) == 0,
        candidate_budget() if budget is None else budget,
    ).nodes


@dataclass(frozen=True)
class TwoCurveSpec:
    f: Curve
    g: Curve
    delta: int
    intersections: NodeSet
    cf: NodeSet
    cg: NodeSet

    @property
    def m(self) -> int:
        return self.f.total_degree

    @property
    def k(self) -> int:
        return self.g.total_degree

    @property
    def n(self) -> int:
        return self.m + self.k - 2 + self.delta

    @property
    def nodes(self) -> NodeSet:
        return NodeSet(self.intersections.nodes + self.cf.nodes + self.cg.nodes)


def curve_intersections(f: Curve, g: Curve) -> NodeSet:
    """The deg f * deg g pairwise intersections of two line-factored curves."""
    if not (f.is_line_factored and g.is_line_factored):
        raise CurveNotSamplable("intersections are computed only for line-factored curves")
    pts = []
    for a in f.lines():
        for b in g.lines():
            p = a.intersection(b)
            if p is None:
                raise IntersectionDegenerate(f"lines {a} and {b} do not meet")
            pts.append(p)
    if len(set(pts)) != len(pts):
        raise IntersectionDegenerate("two factor intersections coincide")
    return NodeSet(tuple(pts))


def two_curve_correct_set(
    f: Curve,
    g: Curve,
    delta: int,
    seed: int = 0,
    f_points: Optional[Iterable] = None,
    g_points: Optional[Iterable] = None,
    intersections: Optional[NodeSet] = None,
    budget: Optional[int] = None,
) -> TwoCurveSpec:
    """Intersections of f and g plus correct subsets of f and g away from them.

    The result is (m + k - 2 + delta)-correct with f and g maximal.
    """
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    m, k = f.total_degree, g.total_degree
    if intersections is None:
        intersections = curve_intersections(f, g)
    if len(intersections) != m * k:
        raise IntersectionDegenerate(
            f"expected {m * k} intersection points, got {len(intersections)}"
        )
    for p in intersections:
        if f(p) != 0 or g(p) != 0:
            raise IntersectionDegenerate(f"{p} is not on both curves")
    budget = candidate_budget() if budget is None else budget
    taken = set(intersections.nodes)

    def correct_subset(curve, other, deg, points, sub_seed):
        if deg < 0:
            return NodeSet(())
        if points is None:
            points = curve_point_sampler(curve, sub_seed)
        return _greedy_extend(
            NodeSet(()), deg, dim_pi(deg), points,
            lambda p: curve(p) == 0 and other(p) != 0 and p not in taken,
            budget,
        ).nodes

    cf = correct_subset(f, g, m - 2 + delta, f_points, seed)
    taken.update(cf.nodes)
    cg = correct_subset(g, f, k - 2 + delta, g_points, seed + 1)
    if not is_correct(cf, m - 2 + delta) and m - 2 + delta >= 0:
        raise SamplerExhausted("C(f) is not correct")
    if not is_correct(cg, k - 2 + delta) and k - 2 + delta >= 0:
        raise SamplerExhausted("C(g) is not correct")
    return TwoCurveSpec(f, g, delta, intersections, cf, cg)


def corrupt_onto_line(
    X: NodeSet, line: Line, node: int, seed: int = 0
) -> NodeSet:
    """Move one node (not on ``line``) to a fresh point of ``line``."""
    if line(X[node]) == 0:
        raise ValueError("the moved node must not already lie on the line")
    rng = random.Random(seed)
    for _ in range(RESAMPLE_BUDGET):
        p = line.point_at(_random_rational(rng))
        if p not in X:
            nodes = list(X.nodes)
            nodes[node] = p
            return NodeSet(tuple(nodes))
    raise ResamplingBudgetExceeded("could not place the corrupted node")
