"""Dense bivariate polynomials, lines, and factored curves over the rationals.

Coefficients are stored in graded-lexicographic order
``1, x, y, x^2, xy, y^2, x^3, ...``; the monomial x^i y^j of total degree
d = i + j sits at index ``dim_pi(d - 1) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import NamedTuple, Optional, Sequence, Union

from .combinatorics import dim_pi


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))


class CoincidentPointsError(ValueError):
    pass


class DegreeBoundError(ValueError):
    pass


class UnfactoredCurveError(ValueError):
    pass


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[tuple[int, int], ...]:
    """Exponent pairs (i, j) of x^i y^j for total degree <= n, graded-lex order."""
    return tuple((d - j, j) for d in range(n + 1) for j in range(d + 1))


def monomial_index(i: int, j: int) -> int:
    return dim_pi(i + j - 1) + j


def monomial_values(pt: Point, n: int) -> tuple[Fraction, ...]:
    x, y = Fraction(pt[0]), Fraction(pt[1])
    xp = [Fraction(1)]
    yp = [Fraction(1)]
    for _ in range(n):
        xp.append(xp[-1] * x)
        yp.append(yp[-1] * y)
    return tuple(xp[i] * yp[j] for i, j in monomials(n))


@dataclass(frozen=True)
class Poly:
    degree_bound: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree_bound < 0:
            raise ValueError("degree bound must be non-negative")
        if len(self.coeffs) != dim_pi(self.degree_bound):
            raise ValueError(
                f"degree bound {self.degree_bound} needs {dim_pi(self.degree_bound)} "
                f"coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, degree_bound: Optional[int] = None) -> "Poly":
        coeffs = tuple(Fraction(c) for c in coeffs)
        if degree_bound is None:
            degree_bound = 0
            while dim_pi(degree_bound) < len(coeffs):
                degree_bound += 1
            coeffs = coeffs + (Fraction(0),) * (dim_pi(degree_bound) - len(coeffs))
        return cls(degree_bound, coeffs)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], object]) -> "Poly":
        """Build from {(i, j): coefficient of x^i y^j}."""
        deg = max((i + j for (i, j), c in terms.items() if c), default=0)
        coeffs = [Fraction(0)] * dim_pi(deg)
        for (i, j), c in terms.items():
            if c:
                coeffs[monomial_index(i, j)] += Fraction(c)
        return cls(deg, tuple(coeffs))

    @classmethod
    def zero(cls, degree_bound: int = 0) -> "Poly":
        return cls(degree_bound, (Fraction(0),) * dim_pi(degree_bound))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls(0, (Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls.from_terms({(1, 0): 1})

    @classmethod
    def y(cls) -> "Poly":
        return cls.from_terms({(0, 1): 1})

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def degree(self) -> int:
        """Effective total degree; -1 for the zero polynomial."""
        for idx in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[idx]:
                i, j = monomials(self.degree_bound)[idx]
                return i + j
        return -1

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {
            e: c for e, c in zip(monomials(self.degree_bound), self.coeffs) if c
        }

    def padded(self, n: int) -> tuple[Fraction, ...]:
        """Coefficient vector of length dim_pi(n)."""
        if self.degree > n:
            raise DegreeBoundError(f"degree {self.degree} exceeds bound {n}")
        size = dim_pi(n)
        if len(self.coeffs) >= size:
            return self.coeffs[:size]
        return self.coeffs + (Fraction(0),) * (size - len(self.coeffs))

    def trimmed(self) -> "Poly":
        d = max(self.degree, 0)
        return Poly(d, self.padded(d))

    def __call__(self, pt) -> Fraction:
        return evaluate(self, pt)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(self.degree_bound, other.degree_bound)
        a, b = self.padded(n), other.padded(n)
        return Poly(n, tuple(u + v for u, v in zip(a, b)))

    def __neg__(self) -> "Poly":
        return Poly(self.degree_bound, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return multiply(self, other)
        c = Fraction(other)
        return Poly(self.degree_bound, tuple(c * v for v in self.coeffs))

    __rmul__ = __mul__

    def is_proportional(self, other: "Poly") -> bool:
        """True when self = c * other for some nonzero constant c."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        n = max(self.degree_bound, other.degree_bound)
        a, b = self.padded(n), other.padded(n)
        ratio = None
        for u, v in zip(a, b):
            if bool(u) != bool(v):
                return False
            if u:
                r = u / v
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True

    def monic(self) -> "Poly":
        """Scaled so that the last nonzero graded-lex coefficient is 1."""
        lead = next((c for c in reversed(self.coeffs) if c), None)
        if lead is None:
            return self
        return self.trimmed() * (1 / lead)

    def __str__(self) -> str:
        parts = []
        for (i, j), c in self.terms().items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            coef = f"({c})" if c.denominator != 1 else str(c)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def evaluate(p: Poly, pt) -> Fraction:
    x, y = Fraction(pt[0]), Fraction(pt[1])
    total = Fraction(0)
    for (i, j), c in zip(monomials(p.degree_bound), p.coeffs):
        if c:
            total += c * x**i * y**j
    return total


def multiply(p: Poly, q: Poly) -> Poly:
    dp, dq = max(p.degree, 0), max(q.degree, 0)
    n = dp + dq
    out = [Fraction(0)] * dim_pi(n)
    qt = q.terms()
    for (i, j), c in p.terms().items():
        for (k, l), d in qt.items():
            out[monomial_index(i + k, j + l)] += c * d
    return Poly(n, tuple(out))


def _normalize_integers(vals: Sequence[Fraction]) -> tuple[int, ...]:
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vals), 1)
    ints = [int(v * den) for v in vals]
    g = reduce(gcd, (abs(v) for v in ints), 0) or 1
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y + c = 0, stored as coprime integers with a positive leading entry."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("a line needs (a, b) != (0, 0)")

    @classmethod
    def from_coeffs(cls, a, b, c) -> "Line":
        vals = [Fraction(a), Fraction(b), Fraction(c)]
        if vals[0] == 0 and vals[1] == 0:
            raise ValueError("a line needs (a, b) != (0, 0)")
        return cls(*_normalize_integers(vals))

    @property
    def is_normalized(self) -> bool:
        return (self.a, self.b, self.c) == _normalize_integers(
            [Fraction(self.a), Fraction(self.b), Fraction(self.c)]
        )

    def normalized(self) -> "Line":
        return Line.from_coeffs(self.a, self.b, self.c)

    def __call__(self, pt) -> Fraction:
        return self.a * Fraction(pt[0]) + self.b * Fraction(pt[1]) + self.c

    def as_poly(self) -> Poly:
        return Poly(1, (Fraction(self.c), Fraction(self.a), Fraction(self.b)))

    @property
    def degree(self) -> int:
        return 1

    def is_parallel(self, other: "Line") -> bool:
        return self.a * other.b - self.b * other.a == 0

    def intersection(self, other: "Line") -> Optional[Point]:
        det = self.a * other.b - self.b * other.a
        if det == 0:
            return None
        x = Fraction(self.b * other.c - other.b * self.c, det)
        y = Fraction(other.a * self.c - self.a * other.c, det)
        return Point(x, y)

    def point_at(self, t) -> Point:
        """Rational parametrization of the line."""
        t = Fraction(t)
        if self.b != 0:
            return Point(t, -(self.a * t + self.c) / Fraction(self.b))
        return Point(Fraction(-self.c, self.a), t)

    def __str__(self) -> str:
        parts = []
        for coef, var in ((self.a, "x"), (self.b, "y"), (self.c, "")):
            if coef == 0:
                continue
            mag = abs(coef)
            body = var if var and mag == 1 else f"{mag}{'*' if var else ''}{var}"
            sign = "-" if coef < 0 else "+"
            parts.append(f"{sign} {body}" if parts else ("-" if coef < 0 else "") + body)
        return " ".join(parts) + " = 0"


def line_through(p1, p2) -> Line:
    (x1, y1), (x2, y2) = p1, p2
    x1, y1, x2, y2 = map(Fraction, (x1, y1, x2, y2))
    if x1 == x2 and y1 == y2:
        raise CoincidentPointsError(f"coincident points {p1}")
    a = y2 - y1
    b = x1 - x2
    c = -(a * x1 + b * y1)
    return Line.from_coeffs(a, b, c)


Factor = Union[Line, Poly]


def factor_poly(f: Factor) -> Poly:
    return f.as_poly() if isinstance(f, Line) else f


def factor_degree(f: Factor) -> int:
    return 1 if isinstance(f, Line) else f.degree


def as_line(f: Factor) -> Optional[Line]:
    """The Line form of a factor of effective degree 1, else None."""
    if isinstance(f, Line):
        return f
    if f.degree != 1:
        return None
    c, a, b = f.padded(1)
    return Line.from_coeffs(a, b, c)


def _factor_key(f: Factor):
    line = as_line(f)
    if line is not None:
        return ("line", line)
    return ("poly", f.monic().coeffs)


def factors_proportional(f: Factor, g: Factor) -> bool:
    return _factor_key(f) == _factor_key(g)


@dataclass(frozen=True)
class Curve:
    """A curve given by a product of factors.

    ``squarefree_certified`` records that no two factors are proportional
    and each non-line factor was declared free of repeated components.
    """

    factors: tuple[Factor, ...]
    squarefree_certified: bool

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a curve needs at least one factor")
        for f in self.factors:
            if factor_degree(f) < 1:
                raise ValueError("curve factors must have degree >= 1")

    @classmethod
    def from_factors(
        cls, factors: Sequence[Factor], components_squarefree: bool = True
    ) -> "Curve":
        """Certify squarefreeness structurally: distinct factors, each declared component-free."""
        factors = tuple(factors)
        keys = [_factor_key(f) for f in factors]
        distinct = len(set(keys)) == len(keys)
        all_lines = all(k[0] == "line" for k in keys)
        return cls(factors, distinct and (all_lines or components_squarefree))

    @classmethod
    def from_poly(cls, p: Poly, squarefree: bool) -> "Curve":
        line = as_line(p)
        return cls((line if line is not None else p.trimmed(),), squarefree)

    @property
    def total_degree(self) -> int:
        return sum(factor_degree(f) for f in self.factors)

    @property
    def is_line_factored(self) -> bool:
        return all(as_line(f) is not None for f in self.factors)

    def lines(self) -> tuple[Line, ...]:
        out = tuple(as_line(f) for f in self.factors)
        if any(l is None for l in out):
            raise UnfactoredCurveError("curve has non-linear factors")
        return out

    def expand(self) -> Poly:
        return reduce(multiply, (factor_poly(f) for f in self.factors))

    def __call__(self, pt) -> Fraction:
        val = Fraction(1)
        for f in self.factors:
            val *= f(pt)
            if not val:
                break
        return val

    def __mul__(self, other: "Curve") -> "Curve":
        return Curve.from_factors(
            self.factors + other.factors,
            components_squarefree=self.squarefree_certified and other.squarefree_certified,
        )


def product_of_lines(lines: Sequence[Line]) -> Curve:
    if not lines:
        raise ValueError("need at least one line")
    lines = tuple(l.normalized() for l in lines)
    return Curve(lines, len(set(lines)) == len(lines))


def curve_coefficient_vector(f: Curve, n: int) -> tuple[Fraction, ...]:
    if f.total_degree > n:
        raise DegreeBoundError(f"curve degree {f.total_degree} exceeds bound {n}")
    return f.expand().padded(n)


def _line_divides(line: Line, p: Poly) -> bool:
    # p vanishes identically on the line iff it vanishes at deg(p) + 1 of its points
    d = max(p.degree, 0)
    return all(evaluate(p, line.point_at(t)) == 0 for t in range(d + 1))


def gcd_certificate(
    f1: Curve, f2: Curve
) -> tuple[Optional[Curve], Optional[Curve], Optional[Curve]]:
    """Split f1 = h*g1, f2 = h*g2 by matching factors; None stands for the trivial curve.

    Raises UnfactoredCurveError when leftover non-line factors make the
    common part undecidable without polynomial factorization.
    """
    rest2 = list(f2.factors)
    common, only1 = [], []
    for f in f1.factors:
        key = _factor_key(f)
        hit = next((i for i, g in enumerate(rest2) if _factor_key(g) == key), None)
        if hit is None:
            only1.append(f)
        else:
            common.append(f)
            rest2.pop(hit)
    only2 = rest2

    def nonlinear(fs):
        return [f for f in fs if as_line(f) is None]

    n1, n2 = nonlinear(only1), nonlinear(only2)
    if n1 and n2:
        raise UnfactoredCurveError(
            "both curves keep unmatched non-linear factors; common components undecidable"
        )
    for polys, others in ((n1, only2), (n2, only1)):
        for p in polys:
            for g in others:
                line = as_line(g)
                if line is not None and _line_divides(line, factor_poly(p)):
                    raise UnfactoredCurveError(
                        f"line {line} is a hidden component of a non-linear factor"
                    )

    def wrap(fs, certified):
        return Curve(tuple(fs), certified) if fs else None

    return (
        wrap(common, f1.squarefree_certified),
        wrap(only1, f1.squarefree_certified),
        wrap(only2, f2.squarefree_certified),
    )
