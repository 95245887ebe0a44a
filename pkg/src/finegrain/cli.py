"""Command-line front end. Output is ``key=value`` lines.

Exit codes: 0 success, 2 usage error, 3 format error, 4 pipeline or audit FAIL.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import compose as C
from . import decompose as D
from . import framework as F
from . import harness as H
from . import kernelize as K
from . import solvers as S
from .instances import (
    ConvThreeSumInstance,
    FormatError,
    FrechetInstance,
    LcisInstance,
    LcsInstance,
    McConvThreeSumInstance,
    OvInstance,
    SecondShortestPathInstance,
    ThreeSumInstance,
    WeightedGraph,
    read_instance,
    read_many,
    validate,
    write_instance,
    write_many,
)

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_FAIL = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="ascii")


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _emit(lines: Sequence[str], report: Optional[str] = None) -> None:
    text = "".join(f"{ln}\n" for ln in lines)
    if report:
        Path(report).write_text(text, encoding="ascii")
    sys.stdout.write(text)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_witness(w) -> str:
    if w is None:
        return "none"
    cells = getattr(w, "cells", None)
    if cells is not None:
        return ",".join(f"{i}:{j}" for i, j in cells)
    if isinstance(w, (tuple, list)):
        return ",".join(map(str, w))
    return str(w)


# -- subcommands --------------------------------------------------------------


def cmd_gen(a) -> int:
    if a.problem is None:
        raise UsageError("gen needs --problem")
    spec = H.GenSpec(
        a.problem, n=a.n, d=a.d, k=a.k, sigma=a.sigma, planted=a.planted, seed=a.seed,
        strict=not a.weak,
    )
    _write(a.out, write_instance(H.generate(spec)))
    return EXIT_OK


def _solve(inst, a):
    if isinstance(inst, OvInstance):
        return S.solve_ov(inst)
    if isinstance(inst, ThreeSumInstance):
        return S.solve_3sum(inst)
    if isinstance(inst, ConvThreeSumInstance):
        return S.solve_conv3sum(inst)
    if isinstance(inst, McConvThreeSumInstance):
        return S.solve_mc_conv3sum(inst)
    if isinstance(inst, WeightedGraph):
        if inst.colors is not None:
            return S.solve_triangle_collection(inst)
        return S.solve_neg_k_clique(inst, a.k or inst.k or 3)
    if isinstance(inst, LcsInstance):
        if a.k is not None:
            inst = LcsInstance(inst.x1, inst.x2, a.k, inst.sigma)
        return S.lcs_threshold(inst) if a.algo == "threshold" else S.lcs_dp(inst)
    if isinstance(inst, LcisInstance):
        return S.lcis_dp(inst)
    if isinstance(inst, FrechetInstance):
        if a.band is not None:
            return S.frechet_banded(inst, S.BandSpec(a.band))
        return S.frechet_dp(inst)
    if isinstance(inst, SecondShortestPathInstance):
        if a.semantics == "path":
            return S.second_shortest_path(inst)
        return S.second_shortest_walk(inst)
    raise UsageError(f"cannot solve {type(inst).__name__}")


def cmd_solve(a) -> int:
    inst = read_instance(_read(a.inp))
    bad = validate(inst)
    if bad:
        raise FormatError(f"invalid instance: {bad[0]}")
    res = _solve(inst, a)
    lines = [f"answer={_bool(res.answer)}"]
    if res.value is not None:
        lines.append(f"value={res.value}")
    lines.append(f"witness={_fmt_witness(res.witness)}")
    if isinstance(inst, FrechetInstance) and a.min_shift:
        shift = S.frechet_min_shift(inst)
        lines.append(f"min_shift={'none' if shift is None else shift}")
    _emit(lines, a.report)
    return EXIT_OK


def cmd_decompose(a) -> int:
    inst = read_instance(_read(a.inp))
    lam = F.as_fraction(a.lam)
    if isinstance(inst, OvInstance):
        bundle = D.decompose_ov(inst, lam)
    elif isinstance(inst, McConvThreeSumInstance):
        bundle = D.decompose_mc_conv3sum(inst, lam)
    elif isinstance(inst, ConvThreeSumInstance):
        bundle = D.decompose_conv3sum(inst, lam)
    elif isinstance(inst, WeightedGraph) and inst.colors is not None:
        union, ledger = D.decompose_triangle_collection(inst, lam)
        _write(a.out, write_many([union], ledger.to_dict()))
        if a.out not in (None, "-"):
            _emit([f"{k}={v}" for k, v in ledger.to_dict().items()], a.report)
        return EXIT_OK
    elif isinstance(inst, WeightedGraph):
        bundle = D.decompose_neg_k_clique(inst, a.k or inst.k or 3, lam)
    else:
        raise UsageError(f"no decomposition for {type(inst).__name__}")
    _write(a.out, write_many(bundle.subs, bundle.ledger.to_dict()))
    if a.out not in (None, "-"):
        _emit([f"{k}={v}" for k, v in bundle.ledger.to_dict().items()], a.report)
    return EXIT_OK


def cmd_compose(a) -> int:
    parts, _ = read_many(_read(a.inp))
    kinds = {type(p) for p in parts}
    if len(kinds) != 1:
        raise UsageError("compose needs instances of a single problem")
    first = parts[0]
    if isinstance(first, LcsInstance):
        out, ledger = C.compose_lcs(C.pad_lcs_k(parts))
    elif isinstance(first, LcisInstance):
        out, ledger = C.compose_lcis(C.pad_lcis_k(parts))
    elif isinstance(first, FrechetInstance):
        out, ledger = C.compose_frechet(parts)
    elif isinstance(first, WeightedGraph):
        if a.target == "2sp":
            out, ledger = C.compose_second_shortest_path(parts)
        else:
            out, ledger = C.compose_disjoint_union(parts, a.k or first.k or 3)
    else:
        raise UsageError(f"no composition for {type(first).__name__}")
    _write(a.out, write_many([out], ledger.to_dict()))
    if a.out not in (None, "-"):
        _emit([f"{k}={v}" for k, v in ledger.to_dict().items()], a.report)
    return EXIT_OK


def cmd_kernelize(a) -> int:
    inst = read_instance(_read(a.inp))
    if not isinstance(inst, LcsInstance):
        raise UsageError("kernelize needs an lcs instance")
    if a.k is not None:
        inst = LcsInstance(inst.x1, inst.x2, a.k, inst.sigma)
    kern = K.lcs_kernel(inst)
    _write(a.out, write_instance(kern))
    if a.out not in (None, "-"):
        _emit(K.kernel_report(inst, kern).lines(), a.report)
    return EXIT_OK


def cmd_pipeline(a) -> int:
    spec = H.GenSpec(
        a.problem or "ov", n=a.n, d=a.d, k=a.k, sigma=a.sigma, planted=a.planted,
        seed=a.seed, t=a.t, strict=not a.weak,
    )
    report = H.run_pipeline(a.name, spec, F.as_fraction(a.lam), workers=a.workers)
    _emit(report.lines(with_timings=a.timings), a.report)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_audit(a) -> int:
    _, ledger_dict = read_many(_read(a.inp))
    if not ledger_dict:
        raise FormatError("no #ledger block in input")
    ledger = D.ParameterLedger.from_dict(ledger_dict)
    fails = H.audit_ledger(ledger, a.n)
    lines = [f"audit={'PASS' if not fails else 'FAIL'}"] + [f"failure={f}" for f in fails]
    _emit(lines, a.report)
    return EXIT_OK if not fails else EXIT_FAIL


def cmd_bench(a) -> int:
    grid = [int(x) for x in a.grid.split(",")]
    table = H.bench_envelope(a.algorithm, grid, a.reps, a.fixed, a.axis)
    _emit(table.lines(), a.report)
    return EXIT_OK


def cmd_bounds(a) -> int:
    region = F.excluded_region(a.alpha, a.gamma, a.nu, a.mu, a.xi)
    lines = [f"{k}={v}" for k, v in region.items()]
    if a.beta is not None:
        lines.append(f"lambda={F.thm24_lambda(a.beta, a.gamma, a.mu, a.nu)}")
    _emit(lines, a.report)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="inp", metavar="FILE")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--problem", choices=H.TAGS)
    common.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1), metavar="P/Q")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--planted", choices=("yes", "no", "none"), default="none")
    common.add_argument("--band", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--report", metavar="FILE")

    p = argparse.ArgumentParser(prog="finegrain", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate an instance")
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--d", type=int)
    g.add_argument("--sigma", type=int)
    g.add_argument("--weak", action="store_true", help="weakly increasing LCIS")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="solve an instance")
    s.add_argument("--semantics", choices=("walk", "path"), default="walk")
    s.add_argument("--algo", choices=("dp", "threshold"), default="dp")
    s.add_argument("--min-shift", action="store_true")
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("decompose", parents=[common], help="OR-decompose an instance")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("compose", parents=[common], help="compose a multi-instance file")
    c.add_argument("--target", choices=("union", "2sp"), default="union")
    c.set_defaults(func=cmd_compose)

    k = sub.add_parser("kernelize", parents=[common], help="LCS kernel")
    k.set_defaults(func=cmd_kernelize)

    pl = sub.add_parser("pipeline", parents=[common], help="run a pipeline")
    pl.add_argument("name", choices=sorted(H.PIPELINES))
    pl.add_argument("--n", type=int, default=12)
    pl.add_argument("--d", type=int)
    pl.add_argument("--sigma", type=int)
    pl.add_argument("--t", type=int, default=4)
    pl.add_argument("--weak", action="store_true")
    pl.add_argument("--workers", type=int, default=1)
    pl.add_argument("--timings", action="store_true")
    pl.set_defaults(func=cmd_pipeline)

    au = sub.add_parser("audit", parents=[common], help="audit a ledger block")
    au.add_argument("--n", type=int)
    au.set_defaults(func=cmd_audit)

    b = sub.add_parser("bench", parents=[common], help="timing envelope")
    b.add_argument("algorithm", choices=H.BENCH_ALGORITHMS)
    b.add_argument("--grid", required=True, help="comma-separated sizes")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--fixed", type=int, default=16)
    b.add_argument("--axis", choices=("n", "ell"), default="n")
    b.set_defaults(func=cmd_bench)

    bo = sub.add_parser("bounds", parents=[common], help="excluded exponent region")
    bo.add_argument("--alpha", type=_rational, required=True)
    bo.add_argument("--gamma", type=_rational, required=True)
    bo.add_argument("--nu", type=_rational, default=Fraction(1))
    bo.add_argument("--mu", type=_rational, default=Fraction(1))
    bo.add_argument("--xi", type=_rational)
    bo.add_argument("--beta", type=_rational)
    bo.set_defaults(func=cmd_bounds)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error=format: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except H.GenerationError as exc:
        print(f"error=generation: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, TypeError, FileNotFoundError) as exc:
        print(f"error=usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
