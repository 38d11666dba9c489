"""Interpolation-theoretic analysis of planar node sets.

All decisions reduce to exact rank computations on Vandermonde-type
matrices.  Results that depend only on (nodes, degree) are memoized, which
is safe because node sets and curves are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .combinatorics import d_count, dim_pi
from .linalg import (
    InconsistentSystemError,
    RationalMatrix,
    in_column_span,
    rank,
    solve_any,
    solve_many,
)
from .poly import (
    Curve,
    DegreeBoundError,
    Line,
    Point,
    Poly,
    evaluate,
    line_through,
    monomial_values,
    monomials,
    multiply,
    product_of_lines,
)


class DuplicateNodeError(ValueError):
    pass


class NodeNotIndependentError(ValueError):
    pass


class DependentNodeSetError(ValueError):
    pass


class NotSquarefreeError(ValueError):
    pass


@dataclass(frozen=True)
class NodeSet:
    nodes: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(Fraction(p[0]), Fraction(p[1])) for p in self.nodes)
        object.__setattr__(self, "nodes", pts)
        seen = {}
        for idx, p in enumerate(pts):
            if p in seen:
                raise DuplicateNodeError(
                    f"duplicate node {fmt_point(p)} at indices {seen[p]} and {idx}"
                )
            seen[p] = idx

    @classmethod
    def of(cls, points: Iterable) -> "NodeSet":
        return cls(tuple(points))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.nodes)

    def __getitem__(self, i: int) -> Point:
        return self.nodes[i]

    def index(self, pt) -> int:
        return self.nodes.index(Point(Fraction(pt[0]), Fraction(pt[1])))

    def __contains__(self, pt) -> bool:
        return Point(Fraction(pt[0]), Fraction(pt[1])) in self.nodes

    def subset(self, indices: Iterable[int]) -> "NodeSet":
        return NodeSet(tuple(self.nodes[i] for i in indices))

    def without(self, indices: Iterable[int]) -> "NodeSet":
        drop = set(indices)
        return NodeSet(tuple(p for i, p in enumerate(self.nodes) if i not in drop))

    def extended(self, points: Iterable) -> "NodeSet":
        return NodeSet(self.nodes + tuple(points))


def fmt_point(p) -> str:
    return f"({p[0]}, {p[1]})"


def vandermonde(X: NodeSet, n: int) -> RationalMatrix:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return RationalMatrix.from_rows(
        [monomial_values(p, n) for p in X], cols=dim_pi(n)
    )


@lru_cache(maxsize=1024)
def _rank(X: NodeSet, n: int) -> int:
    return rank(vandermonde(X, n))


def vandermonde_rank(X: NodeSet, n: int) -> int:
    return _rank(X, n)


def is_independent(X: NodeSet, n: int) -> bool:
    if n < 0:
        return len(X) == 0
    return _rank(X, n) == len(X)


def is_correct(X: NodeSet, n: int) -> bool:
    if n < 0:
        return False
    N = dim_pi(n)
    return len(X) == N and _rank(X, n) == N


@lru_cache(maxsize=256)
def _fundamentals_correct(X: NodeSet, n: int) -> tuple[Poly, ...]:
    V = vandermonde(X, n)
    N = len(X)
    eye = [[Fraction(int(i == j)) for i in range(N)] for j in range(N)]
    cols, _ = solve_many(V, eye)
    return tuple(Poly(n, c) for c in cols)


def fundamental_witness(X: NodeSet, A: int, n: int) -> tuple[Poly, bool]:
    """A polynomial equal to 1 at node A and 0 at the other nodes, and whether it is unique."""
    if not 0 <= A < len(X):
        raise IndexError(f"node index {A} out of range")
    if is_correct(X, n):
        return _fundamentals_correct(X, n)[A], True
    e = [Fraction(int(i == A)) for i in range(len(X))]
    try:
        coeffs, null_dim = solve_any(vandermonde(X, n), e)
    except InconsistentSystemError:
        raise NodeNotIndependentError(
            f"node {A} has no {n}-fundamental polynomial"
        ) from None
    return Poly(n, coeffs), null_dim == 0


def fundamental_polynomial(X: NodeSet, A: int, n: int) -> Poly:
    return fundamental_witness(X, A, n)[0]


def fundamental_polynomials(X: NodeSet, n: int) -> tuple[Poly, ...]:
    if is_correct(X, n):
        return _fundamentals_correct(X, n)
    return tuple(fundamental_polynomial(X, i, n) for i in range(len(X)))


def interpolate(X: NodeSet, data: Sequence, n: int) -> Poly:
    if len(data) != len(X):
        raise ValueError("need one data value per node")
    if not is_independent(X, n):
        raise DependentNodeSetError(f"node set is not {n}-independent")
    coeffs, _ = solve_any(vandermonde(X, n), [Fraction(c) for c in data])
    return Poly(n, coeffs)


def lagrange_interpolate(X: NodeSet, data: Sequence, n: int) -> Poly:
    """Sum of data values times fundamental polynomials."""
    if len(data) != len(X):
        raise ValueError("need one data value per node")
    total = Poly.zero(n)
    for c, p in zip(data, fundamental_polynomials(X, n)):
        c = Fraction(c)
        if c:
            total = total + p * c
    return total


def nodes_on_curve(X: NodeSet, f) -> tuple[int, ...]:
    """Indices of nodes where f (a Curve, Line or Poly) vanishes."""
    if isinstance(f, Poly):
        return tuple(i for i, p in enumerate(X) if evaluate(f, p) == 0)
    return tuple(i for i, p in enumerate(X) if f(p) == 0)


@lru_cache(maxsize=4096)
def _multiples_matrix(f: Curve, n: int) -> RationalMatrix:
    """Columns: coefficient vectors of f * x^i y^j with i + j <= n - deg f."""
    fp = f.expand()
    cols = [
        multiply(fp, Poly.from_terms({e: 1})).padded(n)
        for e in monomials(n - f.total_degree)
    ]
    return RationalMatrix.from_columns(cols, rows=dim_pi(n))


def uses_curve(X: NodeSet, A: int, f: Curve, n: int) -> bool:
    """Whether f divides the fundamental polynomial of node A (decided by span membership)."""
    k = f.total_degree
    if k > n:
        raise DegreeBoundError(f"curve degree {k} exceeds {n}")
    if f(X[A]) == 0:
        return False
    p = fundamental_polynomial(X, A, n)
    return in_column_span(_multiples_matrix(f, n), p.padded(n))


def is_maximal_curve(X: NodeSet, f: Curve, n: int) -> bool:
    if not f.squarefree_certified:
        raise NotSquarefreeError("maximality needs a curve certified free of multiple components")
    k = f.total_degree
    if k > n:
        raise DegreeBoundError(f"curve degree {k} exceeds {n}")
    return len(nodes_on_curve(X, f)) == d_count(n, k)


def check_complement_correct(X: NodeSet, f: Curve, n: int) -> bool:
    k = f.total_degree
    if k > n:
        raise DegreeBoundError(f"curve degree {k} exceeds {n}")
    return is_correct(X.without(nodes_on_curve(X, f)), n - k)


@lru_cache(maxsize=256)
def line_incidences(X: NodeSet) -> dict[Line, tuple[int, ...]]:
    """Every line through at least two nodes, mapped to the indices it carries."""
    groups: dict[Line, set[int]] = {}
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            line = line_through(X[i], X[j])
            s = groups.setdefault(line, set())
            s.add(i)
            s.add(j)
    return {line: tuple(sorted(s)) for line, s in groups.items()}


def maximal_lines(X: NodeSet, n: int) -> list[Line]:
    return [line for line, idx in line_incidences(X).items() if len(idx) == n + 1]


def overfull_lines(X: NodeSet, n: int) -> dict[Line, tuple[int, ...]]:
    """Lines carrying at least n + 2 nodes; any such line makes X n-dependent."""
    return {line: idx for line, idx in line_incidences(X).items() if len(idx) >= n + 2}


@dataclass(frozen=True)
class GcCertificate:
    """For each node, the n lines whose product is its fundamental polynomial."""

    lines: tuple[tuple[Line, ...], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[Line]]) -> "GcCertificate":
        size = len(mapping)
        if sorted(mapping) != list(range(size)):
            raise ValueError("certificate must cover node indices 0..len-1")
        return cls(tuple(tuple(mapping[i]) for i in range(size)))

    def __len__(self) -> int:
        return len(self.lines)

    def __getitem__(self, i: int) -> tuple[Line, ...]:
        return self.lines[i]


GC = "gc"
NOT_GC = "not_gc"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class GcResult:
    status: str
    certificate: Optional[GcCertificate] = None
    witness: Optional[int] = None
    reason: str = ""

    @property
    def is_gc(self) -> bool:
        return self.status == GC


def certificate_error(X: NodeSet, n: int, cert: GcCertificate) -> Optional[tuple[int, str]]:
    """First node whose certified line product is not its fundamental polynomial, or None."""
    if len(cert) != len(X):
        return (-1, f"certificate has {len(cert)} entries for {len(X)} nodes")
    for a, lines in enumerate(cert.lines):
        if len(lines) != n:
            return (a, f"node {a} has {len(lines)} lines, expected {n}")
        A = X[a]
        for line in lines:
            if line(A) == 0:
                return (a, f"line {line} passes through node {a}")
        for b, B in enumerate(X):
            if b != a and all(line(B) != 0 for line in lines):
                return (a, f"line product of node {a} does not vanish at node {b}")
    return None


def _peel_lines(X: NodeSet, A: int, n: int) -> list[Line]:
    p = fundamental_polynomial(X, A, n)
    found: list[Line] = []
    for line, idx in line_incidences(X).items():
        if A in idx:
            continue
        # distinct lines are coprime, so each one can be tested on its own
        if all(evaluate(p, line.point_at(t)) == 0 for t in range(n + 1)):
            found.append(line)
            if len(found) == n:
                break
    return found


def certify_gc(
    X: NodeSet, n: int, hint: Optional[GcCertificate] = None, search: bool = True
) -> GcResult:
    """Decide whether every fundamental polynomial of X is a product of n lines.

    A hint is verified first.  Otherwise each fundamental polynomial is
    stripped of every line through two or more nodes that divides it.  A
    linear factor of a fundamental polynomial of a correct set always
    carries at least two nodes (else the cofactor of degree n-1 would pass
    through N-2 > d(n, n-1) nodes), so a shortfall proves the set is not GC.
    ``search=False`` only checks the hint and answers INCONCLUSIVE if it fails.
    """
    if not is_correct(X, n):
        return GcResult(NOT_GC, reason=f"node set is not {n}-correct")
    if hint is not None:
        err = certificate_error(X, n, hint)
        if err is None:
            return GcResult(GC, certificate=hint)
        if not search:
            return GcResult(INCONCLUSIVE, witness=err[0], reason=err[1])
    elif not search:
        return GcResult(INCONCLUSIVE, reason="no certificate supplied")
    per_node = []
    for a in range(len(X)):
        if n == 0:
            per_node.append(())
            continue
        found = _peel_lines(X, a, n)
        if len(found) < n:
            return GcResult(
                NOT_GC,
                witness=a,
                reason=f"fundamental polynomial of node {a} has only "
                f"{len(found)} linear factors",
            )
        if not uses_curve(X, a, product_of_lines(found), n):
            return GcResult(
                INCONCLUSIVE, witness=a, reason=f"span check failed for node {a}"
            )
        per_node.append(tuple(found))
    return GcResult(GC, certificate=GcCertificate(tuple(per_node)))
