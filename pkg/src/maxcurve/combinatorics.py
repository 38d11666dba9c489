"""Integer counting functions for interpolation on planar node sets.

Everything here is pure integer arithmetic.  ``dim_pi`` is extended to
negative degrees by zero, and every other count is expressed through it so
that identities hold without case splits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


def dim_pi(n: int) -> int:
    """Dimension of the space of bivariate polynomials of degree <= n (0 if n < 0)."""
    if n < 0:
        return 0
    return (n + 2) * (n + 1) // 2


def d_count(n: int, k: int) -> int:
    """Maximal number of n-independent nodes on a curve of degree k."""
    if n < 0 or k < 0:
        raise ValueError(f"d_count needs n, k >= 0, got n={n}, k={k}")
    return dim_pi(n) - dim_pi(n - k)


def d_tilde(n: int, k: int) -> int:
    """The closed form k(2n+3-k)/2, taken literally for every n, k >= 0."""
    if n < 0 or k < 0:
        raise ValueError(f"d_tilde needs n, k >= 0, got n={n}, k={k}")
    return k * (2 * n + 3 - k) // 2


@dataclass(frozen=True)
class TriangularLattice:
    n: int
    i0: int = 0
    j0: int = 0

    @property
    def points(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i + self.i0, j + self.j0)
            for i in range(self.n + 1)
            for j in range(self.n + 1 - i)
        )

    def __len__(self) -> int:
        return dim_pi(self.n)


@dataclass(frozen=True)
class RectLatticeSlice:
    """Points (i, j) with i < k, j < m and i + j <= n."""

    k: int
    m: int
    n: int

    @property
    def points(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i in range(self.k)
            for j in range(self.m)
            if i + j <= self.n
        )


def triangular_lattice(n: int, i0: int = 0, j0: int = 0) -> TriangularLattice:
    if n < 0 or i0 < 0 or j0 < 0:
        raise ValueError("triangular lattice parameters must be non-negative")
    return TriangularLattice(n, i0, j0)


def rect_slice(k: int, m: int, n: int) -> RectLatticeSlice:
    if k < 0 or m < 0 or n < 0:
        raise ValueError("rect_slice parameters must be non-negative")
    return RectLatticeSlice(k, m, n)


def hilbert_count(k: int, m: int, n: int) -> int:
    """Number of points of the k x m grid slice cut by i + j <= n."""
    if k < 0 or m < 0 or n < 0:
        raise ValueError("hilbert_count parameters must be non-negative")
    return dim_pi(n) - dim_pi(n - k) - dim_pi(n - m) + dim_pi(n - k - m)


def sigma(n: int, k1: int, k2: int, k3: int) -> int:
    return k1 + k2 + k3 - (n + 2)


@dataclass(frozen=True)
class TripleExpressions:
    """The five closed forms for the number of nodes common to three maximal curves.

    ``v`` is None when some pair has k_i + k_j > n + 2; ``violating_pairs``
    then names those pairs.
    """

    n: int
    ks: tuple[int, int, int]
    sigma: int
    i: int
    ii: int
    iii: int
    iv: int
    v: Optional[int]
    violating_pairs: tuple[tuple[int, int], ...]

    def values(self) -> list[int]:
        vals = [self.i, self.ii, self.iii, self.iv]
        if self.v is not None:
            vals.append(self.v)
        return vals

    @property
    def agree(self) -> bool:
        return len(set(self.values())) == 1


_PAIRS = ((0, 1), (1, 2), (0, 2))


def triple_sigma_expressions(n: int, k1: int, k2: int, k3: int) -> TripleExpressions:
    if min(n, k1, k2, k3) < 0:
        raise ValueError("parameters must be non-negative")
    s = sigma(n, k1, k2, k3)
    if s < -1:
        raise ValueError(f"expressions need sigma >= -1, got {s}")
    ks = (k1, k2, k3)
    N = dim_pi(n)

    expr_i = (
        N
        - d_count(n, k1) - d_count(n, k2) - d_count(n, k3)
        + hilbert_count(k1, k2, n)
        + hilbert_count(k2, k3, n)
        + hilbert_count(k1, k3, n)
    )
    expr_ii = (
        N
        - dim_pi(n - k1) - dim_pi(n - k2) - dim_pi(n - k3)
        + dim_pi(n - k1 - k2) + dim_pi(n - k2 - k3) + dim_pi(n - k1 - k3)
    )
    # d(n - k, .) needs a non-negative first argument; dim_pi handles the rest.
    def d_shift(a: int, b: int) -> int:
        return dim_pi(a) - dim_pi(a - b)

    expr_iii = N - d_shift(n - k1, k2) - d_shift(n - k2, k3) - d_shift(n - k3, k1)
    tri = s * (s + 1) // 2
    expr_iv = (
        tri
        - dim_pi(k1 + k2 - n - 3)
        - dim_pi(k2 + k3 - n - 3)
        - dim_pi(k3 + k1 - n - 3)
    )
    violating = tuple(
        (a + 1, b + 1) for a, b in _PAIRS if ks[a] + ks[b] > n + 2
    )
    expr_v = None if violating else tri
    return TripleExpressions(
        n=n,
        ks=ks,
        sigma=s,
        i=expr_i,
        ii=expr_ii,
        iii=expr_iii,
        iv=expr_iv,
        v=expr_v,
        violating_pairs=violating,
    )
