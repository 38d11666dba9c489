"""Command-line interface.

Exit status: 0 when every check passes, 1 on a mathematical failure or a
construction error, 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis as an
from . import constructions as cons
from .combinatorics import d_count
from .poly import DegreeBoundError, UnfactoredCurveError, product_of_lines
from .render import render_svg
from .serialize import (
    FormatError,
    certificate_from_json,
    certificate_to_json,
    curves_from_json,
    curves_to_json,
    load_json,
    nodeset_from_json,
    nodeset_to_json,
    poly_to_json,
)
from .verify import FAIL, PRESETS, SuiteConfig, run_suite, suite_passed, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _sidecar(out: Path, kind: str) -> Path:
    return out.with_name(f"{out.stem}.{kind}.json")


def _write(data, out: Optional[str], sidecars: dict) -> None:
    text = json.dumps(data, indent=1) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    for kind, payload in sidecars.items():
        _sidecar(path, kind).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# construct


def cmd_construct(args) -> int:
    sidecars: dict = {}
    if args.kind == "principal":
        n = _need(args.degree, "--degree")
        X = cons.principal_lattice(n)
        sidecars["cert"] = certificate_to_json(cons.principal_lattice_certificate(n))
    elif args.kind == "chung-yao":
        n = _need(args.degree, "--degree")
        if n < 1:
            raise UsageError("chung-yao needs --degree >= 1")
        L = cons.random_general_position_lines(n, args.seed)
        X, cert = cons.chung_yao(L)
        sidecars["cert"] = certificate_to_json(cert)
        sidecars["curves"] = curves_to_json(product_of_lines([l]) for l in L.lines)
    else:
        m, k = _need(args.m, "--m"), _need(args.k, "--k")
        if args.delta not in (0, 1):
            raise UsageError("--delta must be 0 or 1")
        if m < 1 or k < 1:
            raise UsageError("--m and --k must be >= 1")
        f, g = cons.grid_curves(m, k)
        spec = cons.two_curve_correct_set(f, g, args.delta, seed=args.seed)
        X, n = spec.nodes, spec.n
        sidecars["curves"] = curves_to_json([f, g])
    _write(nodeset_to_json(X, n), args.out, sidecars)
    if args.out is not None:
        _emit(f"wrote {len(X)} nodes (degree {n}) to {args.out}")
    return EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < 0:
        raise UsageError(f"{flag} must be non-negative")
    return value


# ---------------------------------------------------------------------------
# check / fundamental


def _load_nodes(path: str, degree: Optional[int]) -> tuple[an.NodeSet, int]:
    X, file_degree = nodeset_from_json(load_json(path))
    n = degree if degree is not None else file_degree
    if n is None:
        raise UsageError("no degree in the file; pass --degree")
    if n < 0:
        raise UsageError("--degree must be non-negative")
    return X, n


def _verdict(ok: bool, text: str) -> int:
    _emit(("PASS: " if ok else "FAIL: ") + text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args) -> int:
    X, n = _load_nodes(args.file, args.degree)
    what = args.what
    if what == "correct":
        r = an.vandermonde_rank(X, n)
        ok = an.is_correct(X, n)
        code = _verdict(ok, f"{len(X)} nodes, rank {r} of {an.dim_pi(n)}; {'' if ok else 'not '}{n}-correct")
        for line, idx in an.overfull_lines(X, n).items():
            _emit(f"  witness: {line} carries nodes {list(idx)}")
        return code
    if what == "independent":
        r = an.vandermonde_rank(X, n)
        ok = r == len(X)
        code = _verdict(ok, f"{len(X)} nodes, rank {r}; {'' if ok else 'not '}{n}-independent")
        for line, idx in an.overfull_lines(X, n).items():
            _emit(f"  witness: {line} carries nodes {list(idx)}")
        return code
    if what == "maximal-lines":
        ml = an.maximal_lines(X, n)
        inc = an.line_incidences(X)
        _emit(f"{len(ml)} maximal lines for degree {n}")
        for line in ml:
            _emit(f"  {line}: nodes {list(inc[line])}")
        return EXIT_OK
    if what == "maximal-curve":
        if args.curves is None:
            raise UsageError("maximal-curve needs --curves FILE")
        curves = curves_from_json(load_json(args.curves))
        code = EXIT_OK
        for i, f in enumerate(curves):
            k = f.total_degree
            if not f.squarefree_certified:
                code = max(code, _verdict(False, f"curve {i}: not certified free of multiple components"))
                continue
            if k > n:
                raise UsageError(f"curve {i} has degree {k} > {n}")
            on = an.nodes_on_curve(X, f)
            ok = len(on) == d_count(n, k)
            code = max(code, _verdict(ok, f"curve {i} (degree {k}) passes through {len(on)} nodes, maximal needs {d_count(n, k)}"))
        return code
    # gc
    hint = certificate_from_json(load_json(args.cert)) if args.cert else None
    res = an.certify_gc(X, n, hint=hint)
    if res.is_gc:
        return _verdict(True, f"GC set of degree {n}")
    detail = f" (node {res.witness})" if res.witness is not None else ""
    return _verdict(False, f"{res.status}: {res.reason}{detail}")


def cmd_fundamental(args) -> int:
    X, n = _load_nodes(args.file, args.degree)
    if not 0 <= args.node < len(X):
        raise UsageError(f"--node must be in 0..{len(X) - 1}")
    try:
        p, unique = an.fundamental_witness(X, args.node, n)
    except an.NodeNotIndependentError as exc:
        return _verdict(False, str(exc))
    if args.format == "json":
        _emit(json.dumps({"node": args.node, "unique": unique, "poly": poly_to_json(p)}))
    else:
        _emit(f"p*_{args.node} = {p}")
        if not unique:
            _emit("  (not unique: the node set is not correct)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / render


def cmd_verify(args) -> int:
    if args.config:
        data = load_json(args.config)
        if not isinstance(data, dict):
            raise FormatError(f"{args.config}: expected a JSON object")
        try:
            cfg = SuiteConfig.from_json(data)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"{args.config}: {exc}") from None
    else:
        cfg = SuiteConfig(presets=(args.preset or "all",))
    if args.max_degree is not None:
        cfg.max_degree = args.max_degree
    if args.seeds is not None:
        cfg.seeds = args.seeds
    if args.degree is not None:
        cfg.degree = args.degree
    if args.corrupt:
        cfg.corrupt = True
    try:
        reports = run_suite(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        for r in reports:
            _emit(r.to_json_line())
        table = sys.stderr
    else:
        table = sys.stdout
        for r in reports:
            if r.verdict == FAIL:
                _emit(f"FAIL {r.proposition} {r.parameters}: measured {r.measured} predicted {r.predicted} witnesses {r.witnesses}")
    width = max([len(name) for name, *_ in summarize(reports)] + [11])
    print(f"{'proposition':<{width}}  pass  fail  inapplicable", file=table)
    for name, p, f, i in summarize(reports):
        print(f"{name:<{width}}  {p:>4}  {f:>4}  {i:>12}", file=table)
    ok = suite_passed(reports)
    print(f"{len(reports)} reports: {'PASS' if ok else 'FAIL'}", file=table)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    X, file_degree = nodeset_from_json(load_json(args.file))
    degree = args.degree if args.degree is not None else file_degree
    if args.highlight_maximal and degree is None:
        raise UsageError("--highlight-maximal needs a degree")
    curves = curves_from_json(load_json(args.curves)) if args.curves else []
    result = render_svg(X, curves, degree, args.highlight_maximal)
    Path(args.out).write_text(result.svg, encoding="utf-8")
    _emit(f"wrote {args.out}: {result.circles} nodes, {result.strokes} lines, {result.highlighted} highlighted")
    if result.flagged:
        for p in result.approximated:
            print(f"approximated non-line factor: {p}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxcurve", description="Exact tools for maximal curves of correct node sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a node set and write it as JSON")
    p.add_argument("kind", choices=["principal", "chung-yao", "two-curve"])
    p.add_argument("--degree", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="check a property of a node-set file")
    p.add_argument("what", choices=["correct", "independent", "maximal-lines", "maximal-curve", "gc"])
    p.add_argument("file")
    p.add_argument("--degree", type=int)
    p.add_argument("--curves", help="curve file for maximal-curve")
    p.add_argument("--cert", help="certificate file to verify for gc")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fundamental", help="fundamental polynomial of one node")
    p.add_argument("file")
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("preset", nargs="?", choices=PRESETS)
    p.add_argument("--config", help="JSON suite configuration")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--degree", type=int, help="only this degree")
    p.add_argument("--seeds", type=int)
    p.add_argument("--corrupt", action="store_true", help="inject a moved node into each Chung-Yao set")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a node set and curves as SVG")
    p.add_argument("file")
    p.add_argument("--curves")
    p.add_argument("--degree", type=int)
    p.add_argument("--highlight-maximal", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, an.DuplicateNodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegreeBoundError, UnfactoredCurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (cons.SamplerExhausted, cons.ResamplingBudgetExceeded, cons.IntersectionDegenerate,
            cons.CurveNotSamplable, an.NotSquarefreeError) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
