"""Exact construction and analysis of planar interpolation node sets and their maximal curves."""

from .analysis import (
    GcCertificate,
    GcResult,
    NodeSet,
    certify_gc,
    check_complement_correct,
    fundamental_polynomial,
    fundamental_polynomials,
    interpolate,
    is_correct,
    is_independent,
    is_maximal_curve,
    lagrange_interpolate,
    maximal_lines,
    nodes_on_curve,
    uses_curve,
    vandermonde,
    vandermonde_rank,
)
from .combinatorics import (
    d_count,
    d_tilde,
    dim_pi,
    hilbert_count,
    rect_slice,
    sigma,
    triangular_lattice,
    triple_sigma_expressions,
)
from .constructions import (
    chung_yao,
    enlarge_independent,
    enlarge_on_curve,
    principal_lattice,
    random_general_position_lines,
    two_curve_correct_set,
)
from .linalg import RationalMatrix, null_space, rank, solve
from .poly import Curve, Line, Point, Poly, gcd_certificate, line_through, product_of_lines
from .verify import SuiteConfig, VerificationReport, run_suite

__all__ = [
    "GcCertificate",
    "GcResult",
    "NodeSet",
    "certify_gc",
    "check_complement_correct",
    "fundamental_polynomial",
    "fundamental_polynomials",
    "interpolate",
    "is_correct",
    "is_independent",
    "is_maximal_curve",
    "lagrange_interpolate",
    "maximal_lines",
    "nodes_on_curve",
    "uses_curve",
    "vandermonde",
    "vandermonde_rank",
    "d_count",
    "d_tilde",
    "dim_pi",
    "hilbert_count",
    "rect_slice",
    "sigma",
    "triangular_lattice",
    "triple_sigma_expressions",
    "chung_yao",
    "enlarge_independent",
    "enlarge_on_curve",
    "principal_lattice",
    "random_general_position_lines",
    "two_curve_correct_set",
    "RationalMatrix",
    "null_space",
    "rank",
    "solve",
    "Curve",
    "Line",
    "Point",
    "Poly",
    "gcd_certificate",
    "line_through",
    "product_of_lines",
    "SuiteConfig",
    "VerificationReport",
    "run_suite",
]
