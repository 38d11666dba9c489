"""Acceptance gate.

Every criterion is exact (tolerance: exact equality of integers, rationals
and index sets) and has a wall-clock budget.  Each test prints one line

    ACCEPTANCE <id> PASS|FAIL <name>: <detail> [<seconds>s / <budget>s]

even under pytest output capture.  Run ``python3 tests/test_acceptance.py``
to get only these lines.
"""

from __future__ import annotations

import sys
import time
from itertools import product

import pytest

from maxcurve import combinatorics as comb
from maxcurve.analysis import is_independent
from maxcurve.constructions import corrupt_onto_line, grid_curves, two_curve_correct_set
from maxcurve.verify import (
    FAIL,
    PASS,
    SuiteConfig,
    chung_yao_family,
    corruption_reports,
    gc_reports,
    identity_reports,
    maximality_reports,
    pairwise_reports,
    principal_family,
    triple_reports,
    two_curve_reports,
    verify_certificate,
    verify_correct,
    verify_interpolation,
    verify_maximal_lines,
)

SEEDS = 3
EXACT = "exact"


def _emit(line: str, capsys=None) -> None:
    if capsys is None:
        print(line)
        return
    with capsys.disabled():
        print("\n" + line, end="")


def _run(cid: str, name: str, budget: float, check, capsys=None):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    _emit(f"ACCEPTANCE {cid} {verdict} {name}: {detail} (tolerance {EXACT}) [{elapsed:.1f}s / {budget:.0f}s]", capsys)
    return ok, in_time, detail, elapsed


def _gate(result):
    ok, in_time, detail, elapsed = result
    assert ok, detail
    assert in_time, f"over budget: {elapsed:.1f}s"


def _tally(reports):
    fails = [r for r in reports if r.verdict == FAIL]
    passes = sum(r.verdict == PASS for r in reports)
    detail = f"{passes} pass, {len(fails)} fail, {len(reports) - passes - len(fails)} inapplicable"
    if fails:
        detail += f"; first failure {fails[0].proposition} {fails[0].parameters} measured={fails[0].measured} predicted={fails[0].predicted}"
    return not fails and passes > 0, detail


def _cy(max_n: int):
    return [chung_yao_family(n, s) for n in range(1, max_n + 1) for s in range(SEEDS)]


# ---------------------------------------------------------------------------


def check_identities():
    reports = [r for r in identity_reports(14, 12) if r.proposition != "five_expression_agreement"]
    return _tally(reports)


def check_five_expressions():
    tuples = agree = with_v = 0
    bad = []
    for n in range(13):
        for ks in product(range(n + 1), repeat=3):
            if comb.sigma(n, *ks) < -1:
                continue
            tuples += 1
            ex = comb.triple_sigma_expressions(n, *ks)
            with_v += ex.v is not None
            if ex.agree:
                agree += 1
            else:
                bad.append((n, ks))
    return not bad, f"{agree}/{tuples} tuples agree ({with_v} include sigma(sigma+1)/2); mismatches {bad[:5]}"


def check_constructions():
    reports = []
    for n in range(9):
        fam = principal_family(n)
        reports += [verify_correct(fam.nodes, n, fam.label), verify_certificate(fam.nodes, n, fam.certificate, fam.label)]
    for fam in _cy(6):
        lab = fam.label
        reports += [
            verify_correct(fam.nodes, fam.n, lab),
            verify_certificate(fam.nodes, fam.n, fam.certificate, lab),
            verify_maximal_lines(fam.nodes, fam.n, fam.lines, lab),
        ]
    return _tally(reports)


def check_maximality():
    cfg = SuiteConfig(max_degree=5, seeds=SEEDS, principal_curve_degree=0)
    return _tally(maximality_reports(cfg, _cy(5)))


def check_intersections():
    cfg = SuiteConfig(max_degree=5, seeds=SEEDS)
    cy = _cy(5)
    return _tally(pairwise_reports(cfg, cy) + triple_reports(cfg, cy))


def check_two_curve():
    reports = []
    for (m, k), delta in product(((2, 2), (2, 3), (3, 3)), (0, 1)):
        reports += two_curve_reports(m, k, delta, {"m": m, "k": k, "delta": delta})
    return _tally(reports)


def check_gc_cascade():
    cfg = SuiteConfig(max_degree=0, seeds=SEEDS)  # CY families only
    return _tally(gc_reports(cfg, _cy(5)))


def check_interpolation():
    reports = []
    for n in range(9):
        fam = principal_family(n)
        reports.append(verify_interpolation(fam.nodes, n, n, 20, fam.label))
    for fam in _cy(6):
        reports.append(verify_interpolation(fam.nodes, fam.n, fam.seed, 20, fam.label))
    for (m, k), delta in product(((2, 2), (2, 3), (3, 3)), (0, 1)):
        f, g = grid_curves(m, k)
        spec = two_curve_correct_set(f, g, delta)
        reports.append(verify_interpolation(spec.nodes, spec.n, 0, 20, {"family": "two-curve", "m": m, "k": k}))
    return _tally(reports)


def check_fault_injection():
    flipped = failing_with_witness = total = 0
    for fam in _cy(5):
        total += 1
        target = fam.lines[-1]
        node = next(i for i, p in enumerate(fam.nodes) if target(p) != 0)
        bad = corrupt_onto_line(fam.nodes, target, node, seed=fam.seed)
        flipped += is_independent(fam.nodes, fam.n) and not is_independent(bad, fam.n)
        reports = corruption_reports(fam)
        failing_with_witness += any(r.verdict == FAIL and r.witnesses for r in reports)
    ok = flipped == failing_with_witness == total
    return ok, f"{flipped}/{total} sets flipped to dependent, {failing_with_witness}/{total} produced a failing report with witness"


CRITERIA = [
    ("1", "combinatorial identities, parameters <= 14", 1, check_identities),
    ("2", "five-expression agreement, n <= 12", 5, check_five_expressions),
    ("3", "constructions correct, certificates, maximal lines", 60, check_constructions),
    ("4", "maximality equivalences on Chung-Yao sets, n <= 5", 300, check_maximality),
    ("5", "intersection counts on Chung-Yao sets, n <= 5", 600, check_intersections),
    ("6", "two-curve construction", 120, check_two_curve),
    ("7", "GC cascade characterization, n <= 5", 300, check_gc_cascade),
    ("8", "interpolation fidelity on all correct sets", 60, check_interpolation),
    ("9", "fault injection", 10, check_fault_injection),
]


@pytest.mark.parametrize("cid,name,budget,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(cid, name, budget, check, capsys):
    _gate(_run(cid, name, budget, check, capsys))


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    sys.exit(0 if all(ok and t for ok, t, _, _ in results) else 1)
