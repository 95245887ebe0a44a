"""Seeded generators, end-to-end pipelines, ledger audits and timing envelopes."""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import compose as C
from . import decompose as D
from . import _kernels
from . import solvers as S
from .framework import Rational, as_fraction
from .instances import (
    ConvThreeSumInstance,
    FrechetInstance,
    LcisInstance,
    LcsInstance,
    McConvThreeSumInstance,
    OvInstance,
    ProblemInstance,
    SecondShortestPathInstance,
    ThreeSumInstance,
    WeightedGraph,
)
from .rng import SplitMix64

__all__ = [
    "TAGS",
    "PIPELINES",
    "BENCH_ALGORITHMS",
    "GenSpec",
    "GenerationError",
    "generate",
    "oracle",
    "PipelineReport",
    "run_pipeline",
    "audit_ledger",
    "BenchTable",
    "bench_envelope",
]

TAGS = ("ov", "3sum", "conv3sum", "mcconv3sum", "clique", "tricol", "lcs", "lcis", "frechet", "2sp")

#: attempts before planted="no" generation gives up
REJECTION_CAP = 200


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Generation request; ``None`` fields fall back to per-problem defaults."""

    tag: str
    n: int = 8
    d: Optional[int] = None
    k: Optional[int] = None
    sigma: Optional[int] = None
    planted: str = "none"
    seed: int = 0
    #: number of parts for compositions
    t: int = 4
    strict: bool = True

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown problem tag {self.tag!r}")
        if self.planted not in ("yes", "no", "none"):
            raise ValueError("planted must be yes, no or none")
        if self.n < 1:
            raise ValueError("n must be positive")


def oracle(inst: ProblemInstance) -> bool:
    """Answer by the baseline solver of the instance's problem."""
    if isinstance(inst, OvInstance):
        return S.solve_ov(inst).answer
    if isinstance(inst, ThreeSumInstance):
        return S.solve_3sum(inst).answer
    if isinstance(inst, ConvThreeSumInstance):
        return S.solve_conv3sum(inst).answer
    if isinstance(inst, McConvThreeSumInstance):
        return S.solve_mc_conv3sum(inst).answer
    if isinstance(inst, WeightedGraph):
        if inst.colors is not None:
            return S.solve_triangle_collection(inst).answer
        return S.solve_neg_k_clique(inst, inst.k or 3).answer
    if isinstance(inst, LcsInstance):
        return S.lcs_dp(inst, witness=False).answer
    if isinstance(inst, LcisInstance):
        return S.lcis_dp(inst).answer
    if isinstance(inst, FrechetInstance):
        return S.frechet_dp(inst, witness=False).answer
    if isinstance(inst, SecondShortestPathInstance):
        return S.second_shortest_walk(inst).answer
    raise TypeError(f"no oracle for {type(inst).__name__}")


# -- generators ---------------------------------------------------------------


def _gen_ov(spec: GenSpec, rng: SplitMix64, plant: bool) -> OvInstance:
    n = spec.n
    d = spec.d or max(4, 2 * math.ceil(math.log2(n + 1)) + 2)
    # ones with probability 3/4 keep random pairs rarely orthogonal
    vec = lambda: tuple(int(rng.randbelow(4) != 0) for _ in range(d))  # noqa: E731
    A = [vec() for _ in range(n)]
    B = [vec() for _ in range(n)]
    if plant:
        i, j = rng.randbelow(n), rng.randbelow(n)
        B[j] = tuple(0 if a else rng.randbelow(2) for a in A[i])
    return OvInstance(tuple(A), tuple(B), d)


def _gen_3sum(spec: GenSpec, rng: SplitMix64, plant: bool) -> ThreeSumInstance:
    n = spec.n
    R = max(4, n**3)
    A = [rng.randint(-R, R) for _ in range(n)]
    if plant:
        if n < 3:
            A[rng.randbelow(n)] = 0
        else:
            i, j, h = rng.sample(range(n), 3)
            A[h] = -(A[i] + A[j])
    return ThreeSumInstance(tuple(A))


def _gen_conv(spec: GenSpec, rng: SplitMix64, plant: bool) -> ConvThreeSumInstance:
    n = spec.n
    R = max(4, n**3)
    A = [rng.randint(-R, R) for _ in range(n)]
    if plant and n >= 2:
        i = rng.randint(1, n - 1)
        j = rng.randint(1, n - i)
        A[i + j - 1] = A[i - 1] + A[j - 1]
    return ConvThreeSumInstance(tuple(A))


def _gen_mcconv(spec: GenSpec, rng: SplitMix64, plant: bool) -> McConvThreeSumInstance:
    n = spec.n
    R = max(4, n * n)
    A = [rng.randint(-R, R) for _ in range(n)]
    B = [rng.randint(-R, R) for _ in range(n)]
    Cs = [None if rng.randbelow(8) == 0 else rng.randint(-2 * R, 2 * R) for _ in range(n)]
    if plant and n >= 2:
        i = rng.randint(1, n - 1)
        j = rng.randint(1, n - i)
        Cs[i + j - 1] = A[i - 1] + B[j - 1]
    return McConvThreeSumInstance(tuple(A), tuple(B), tuple(Cs))


def _random_edges(n: int, rng: SplitMix64, num: int, den: int, lo: int, hi: int) -> dict:
    return {
        (u, v): rng.randint(lo, hi)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.randbelow(den) < num
    }


def _edge_tuple(edges: dict) -> tuple:
    return tuple((u, v, w) for (u, v), w in sorted(edges.items()))


def _gen_clique(spec: GenSpec, rng: SplitMix64, plant: bool) -> WeightedGraph:
    n, k = spec.n, spec.k or 3
    edges = _random_edges(n, rng, 3, 10, -2, 12)
    if plant and n >= k:
        verts = sorted(rng.sample(range(1, n + 1), k))
        for a in range(k):
            for b in range(a + 1, k):
                edges[(verts[a], verts[b])] = -1
    return WeightedGraph(n, _edge_tuple(edges), k=k)


def _gen_tricol(spec: GenSpec, rng: SplitMix64, plant: bool) -> WeightedGraph:
    n = spec.n
    ncol = spec.k or 4
    colors = [rng.randint(1, ncol) for _ in range(n)]
    edges = _random_edges(n, rng, 1, 4, 1, 1)
    if plant:
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors, 1):
            by_color.setdefault(c, []).append(v)
        present = sorted(by_color)
        for a in range(len(present)):
            for b in range(a + 1, len(present)):
                for c in range(b + 1, len(present)):
                    tri = sorted(rng.choice(by_color[x]) for x in (present[a], present[b], present[c]))
                    for x, y in ((0, 1), (0, 2), (1, 2)):
                        edges[(tri[x], tri[y])] = 1
    return WeightedGraph(n, _edge_tuple(edges), colors=tuple(colors))


def _embed(rng: SplitMix64, base: list, pattern: Sequence[int]) -> None:
    """Overwrite ``len(pattern)`` random positions of ``base`` (in order)."""
    pos = sorted(rng.sample(range(len(base)), len(pattern)))
    for p, v in zip(pos, pattern):
        base[p] = v


def _gen_lcs(spec: GenSpec, rng: SplitMix64, plant: bool) -> LcsInstance:
    n, sigma = spec.n, spec.sigma or 4
    k = spec.k if spec.k is not None else max(1, (2 * n + 2) // 3)
    x1 = [rng.randbelow(sigma) for _ in range(n)]
    x2 = [rng.randbelow(sigma) for _ in range(n)]
    if plant:
        y = [rng.randbelow(sigma) for _ in range(min(k, n))]
        _embed(rng, x1, y)
        _embed(rng, x2, y)
    return LcsInstance(tuple(x1), tuple(x2), k, sigma)


def _gen_lcis(spec: GenSpec, rng: SplitMix64, plant: bool) -> LcisInstance:
    n = spec.n
    k = spec.k if spec.k is not None else max(1, min(n, 3))
    top = spec.sigma or max(4, n)
    x1 = [rng.randbelow(top) for _ in range(n)]
    x2 = [rng.randbelow(top) for _ in range(n)]
    if plant:
        m = min(k, n)
        y = sorted(rng.sample(range(top), m)) if spec.strict else sorted(rng.randbelow(top) for _ in range(m))
        _embed(rng, x1, y)
        _embed(rng, x2, y)
    return LcisInstance(tuple(x1), tuple(x2), k, spec.strict)


def _gen_frechet(spec: GenSpec, rng: SplitMix64, plant: Optional[bool]) -> FrechetInstance:
    if plant is not None:
        return C.make_frechet_gadget(plant, max(2, spec.n), rng.next_u64())
    # two random lattice walks; threshold around their typical separation
    def walk():
        x = y = 0
        pts = []
        for _ in range(spec.n):
            x += rng.randint(-2, 2)
            y += rng.randint(-2, 2)
            pts.append((x, y))
        return tuple(pts)

    return FrechetInstance(walk(), walk(), 1, rng.randint(0, 4 * spec.n))


def _gen_2sp(spec: GenSpec, rng: SplitMix64, plant: Optional[bool]) -> SecondShortestPathInstance:
    n = max(2, spec.n)
    edges = {}
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and rng.randbelow(10) < 3:
                edges[(u, v)] = rng.randint(0, 9)
    g = WeightedGraph(n, tuple((u, v, w) for (u, v), w in sorted(edges.items())), directed=True)
    base = SecondShortestPathInstance(g, 1, n, 0)
    d2 = S.second_shortest_walk(replace(base, k=0)).value
    if plant is None:
        k = rng.randint(0, 20)
    elif d2 is None:
        k = rng.randint(0, 20)
    else:
        k = d2 if plant else d2 - 1
    return replace(base, k=max(0, k))


_GENERATORS: dict[str, Callable] = {
    "ov": _gen_ov,
    "3sum": _gen_3sum,
    "conv3sum": _gen_conv,
    "mcconv3sum": _gen_mcconv,
    "clique": _gen_clique,
    "tricol": _gen_tricol,
    "lcs": _gen_lcs,
    "lcis": _gen_lcis,
}


def generate(spec: GenSpec) -> ProblemInstance:
    """Pure function of ``spec``. ``planted="no"`` resamples until the oracle
    says no, at most ``REJECTION_CAP`` times."""
    rng = SplitMix64(spec.seed)
    if spec.tag == "frechet":
        return _gen_frechet(spec, rng, None if spec.planted == "none" else spec.planted == "yes")
    if spec.tag == "2sp":
        return _gen_2sp(spec, rng, None if spec.planted == "none" else spec.planted == "yes")
    gen = _GENERATORS[spec.tag]
    if spec.planted != "no":
        return gen(spec, rng, spec.planted == "yes")
    for _ in range(REJECTION_CAP):
        inst = gen(spec, rng, False)
        if not oracle(inst):
            return inst
    raise GenerationError(f"no {spec.tag} no-instance within {REJECTION_CAP} attempts (n={spec.n})")


# -- ledger audit -------------------------------------------------------------


def _ceil_root_power(n: int, e: Fraction) -> int:
    """Least integer ``m`` with ``m^r >= n^p`` for ``e = p/r``, by bisection."""
    p, r = e.numerator, e.denominator
    target = n**p
    lo, hi = 0, 1
    while hi**r < target:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**r >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


_POWER = {"ov": 2, "mcconv3sum": 2, "conv3sum": 2, "tricol": 3}


def audit_ledger(ledger: D.ParameterLedger, n: Optional[int] = None) -> list[str]:
    """Recompute every derived ledger field; return one string per mismatch."""
    fails: list[str] = []
    n = ledger.n if n is None else n
    if ledger.alpha is not None:
        alpha, lam = ledger.alpha, ledger.lam
        if lam is None or lam <= 0:
            return ["lambda missing or not positive"]
        eps = alpha / (alpha + lam)
        q = _ceil_root_power(n, eps)
        z = _ceil_root_power(n, 1 - eps)
        if ledger.epsilon != eps:
            fails.append(f"epsilon mismatch: {ledger.epsilon} != {eps}")
        if ledger.q != q:
            fails.append(f"q mismatch: {ledger.q} != {q}")
        if ledger.z != z:
            fails.append(f"z mismatch: {ledger.z} != {z}")
        k = int(ledger.notes.get("k", 0))
        power = k if ledger.op in ("clique", "clique-union") else _POWER.get(ledger.op)
        if power is not None and ledger.t != z**power:
            fails.append(f"t mismatch: {ledger.t} != {z ** power}")
        if ledger.role is not None and ledger.n_max is not None and ledger.n_max > ledger.role * q:
            fails.append(f"n_max {ledger.n_max} exceeds {ledger.role}*q")
        if ledger.n_max_actual is not None and ledger.n_max is not None and ledger.n_max_actual > ledger.n_max:
            fails.append("n_max_actual exceeds n_max")
        if ledger.op in ("clique", "clique-union") and ledger.ell_Q != k * q:
            fails.append(f"ell_Q mismatch: {ledger.ell_Q} != {k * q}")
        if ledger.op == "tricol" and ledger.ell_Q != 3 * q:
            fails.append(f"ell_Q mismatch: {ledger.ell_Q} != {3 * q}")
        if ledger.op in ("tricol", "clique-union") and ledger.n_Q is not None:
            bound = ledger.t * (ledger.role * q)
            if ledger.n_Q > bound:
                fails.append(f"n_Q {ledger.n_Q} exceeds t*role*q = {bound}")
    if ledger.nu is not None:
        if ledger.nu != 1 or ledger.mu != 1:
            fails.append("composition exponents must be (1, 1)")
        if ledger.n_Q > ledger.c_n * ledger.t * ledger.n_max:
            fails.append(f"n_Q bound: {ledger.n_Q} > {ledger.c_n}*{ledger.t}*{ledger.n_max}")
        if ledger.ell_Q > ledger.c_ell * ledger.n_max:
            fails.append(f"ell_Q bound: {ledger.ell_Q} > {ledger.c_ell}*{ledger.n_max}")
    return fails


# -- pipelines ----------------------------------------------------------------


@dataclass
class PipelineReport:
    name: str
    direct: bool
    transformed: bool
    ledger: dict[str, str]
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.direct == self.transformed and not self.failures and all(self.checks.values())

    def lines(self, with_timings: bool = False) -> list[str]:
        out = [
            f"pipeline={self.name}",
            f"status={'PASS' if self.passed else 'FAIL'}",
            f"direct={str(self.direct).lower()}",
            f"transformed={str(self.transformed).lower()}",
        ]
        out += [f"ledger.{k}={v}" for k, v in self.ledger.items()]
        out += [f"check.{k}={'pass' if v else 'fail'}" for k, v in self.checks.items()]
        out += [f"failure={f}" for f in self.failures]
        if with_timings:
            out += [f"time.{k}={v:.6f}" for k, v in self.timings.items()]
        return out


def _any_parallel(fn: Callable, items: Sequence, workers: int) -> bool:
    if workers <= 1 or len(items) < 2:
        return any(fn(x) for x in items)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return any(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _parts(spec: GenSpec, tag: str) -> list:
    """``spec.t`` parts, planted per the spec; with planted="none" mixed."""
    root = SplitMix64(spec.seed)
    out = []
    for i in range(spec.t):
        seed = root.next_u64()
        planted = spec.planted
        if planted == "none":
            planted = "yes" if root.randbelow(4) == 0 else "no"
        elif planted == "yes" and i > 0:
            planted = "no"  # one yes part suffices
        out.append(generate(replace(spec, tag=tag, seed=seed, planted=planted)))
    return out


def _is_negative_triangle(g: WeightedGraph) -> bool:
    return S.solve_neg_k_clique(g, 3).answer


def run_pipeline(name: str, spec: GenSpec, lam: Rational = 1, workers: int = 1) -> PipelineReport:
    """Run one decompose/compose chain and compare with the direct oracle."""
    if name not in PIPELINES:
        raise ValueError(f"unknown pipeline {name!r}")
    lam = as_fraction(lam)
    t0 = time.perf_counter()
    try:
        report = PIPELINES[name](spec, lam, workers)
    except Exception as exc:  # label the stage, keep the type
        raise type(exc)(f"[{name}] {exc}") from exc
    report.timings["total"] = time.perf_counter() - t0
    return report


def _decomp_report(name, inst, bundle, direct_fn, sub_fn, workers) -> PipelineReport:
    direct = direct_fn(inst)
    transformed = _any_parallel(sub_fn, bundle.subs, workers)
    fails = audit_ledger(bundle.ledger)
    checks = {"ledger": not fails, "sub_count": len(bundle.subs) == bundle.ledger.t}
    return PipelineReport(name, direct, transformed, bundle.ledger.to_dict(), checks, fails)


def _p_ov(spec, lam, workers):
    inst = generate(replace(spec, tag="ov"))
    return _decomp_report("ov-decomp", inst, D.decompose_ov(inst, lam), oracle, _solve_ov, workers)


def _solve_ov(x):
    return S.solve_ov(x).answer


def _p_clique(spec, lam, workers):
    inst = generate(replace(spec, tag="clique"))
    k = inst.k or 3
    bundle = D.decompose_neg_k_clique(inst, k, lam)
    return _decomp_report("clique-decomp", inst, bundle, oracle, oracle, workers)


def _p_mcconv(spec, lam, workers):
    inst = generate(replace(spec, tag="mcconv3sum"))
    bundle = D.decompose_mc_conv3sum(inst, lam)
    return _decomp_report("mcconv-decomp", inst, bundle, oracle, oracle, workers)


def _p_conv(spec, lam, workers):
    inst = generate(replace(spec, tag="conv3sum"))
    bundle = D.decompose_conv3sum(inst, lam)
    return _decomp_report("conv-lift", inst, bundle, oracle, oracle, workers)


def _p_tricol(spec, lam, workers):
    g = generate(replace(spec, tag="tricol"))
    H, ledger = D.decompose_triangle_collection(g, lam)
    fails = audit_ledger(ledger)
    checks = {
        "ledger": not fails,
        "component_bound": H.max_component_order() <= ledger.ell_Q,
        "whole_graph_oracle": S.triangle_collection_whole_graph(g) == oracle(g),
    }
    return PipelineReport("tricol-decomp", oracle(g), oracle(H), ledger.to_dict(), checks, fails)


def _compose_report(name, parts, composed, ledger, solve, extra_checks=None) -> PipelineReport:
    direct = any(oracle(p) for p in parts)
    transformed = solve(composed)
    fails = audit_ledger(ledger)
    checks = {"ledger": not fails}
    checks.update(extra_checks or {})
    return PipelineReport(name, direct, transformed, ledger.to_dict(), checks, fails)


def _p_lcs(spec, lam, workers):
    parts = C.pad_lcs_k(_parts(spec, "lcs"))
    out, ledger = C.compose_lcs(parts)
    return _compose_report("lcs-compose", parts, out, ledger, lambda x: S.lcs_threshold(x).answer)


def _p_lcis(spec, lam, workers):
    parts = C.pad_lcis_k(_parts(spec, "lcis"))
    out, ledger = C.compose_lcis(parts)
    return _compose_report("lcis-compose", parts, out, ledger, lambda x: S.lcis_dp(x).answer)


def _p_frechet(spec, lam, workers):
    parts = _parts(replace(spec, n=max(2, spec.n)), "frechet")
    out, ledger = C.compose_frechet(parts)
    shift = S.frechet_min_shift(out)
    checks = {"shift_bound": shift is None or shift <= ledger.ell_Q}
    report = _compose_report(
        "frechet-compose", parts, out, ledger, lambda x: S.frechet_dp(x, witness=False).answer, checks
    )
    report.ledger["min_shift"] = "none" if shift is None else str(shift)
    return report


def _p_union(spec, lam, workers):
    parts = _parts(spec, "clique")
    k = parts[0].k or 3
    out, ledger = C.compose_disjoint_union(parts, k)
    checks = {"component_bound": out.max_component_order() <= ledger.ell_Q}
    return _compose_report("union-compose", parts, out, ledger, oracle, checks)


def _p_2sp(spec, lam, workers):
    parts = _parts(replace(spec, k=3), "clique")
    out, ledger = C.compose_second_shortest_path(parts)
    return _compose_report(
        "2sp-compose", parts, out, ledger, lambda x: S.second_shortest_path(x).answer
    )


def _p_clique_union(spec, lam, workers):
    """Split into ``z^3`` induced subgraphs, take their disjoint union, solve
    the union by components; audits ``n' <= 3 z^2 n`` and components
    ``<= 3q`` (about ``3n/z``)."""
    g = generate(replace(spec, tag="clique", k=3))
    bundle = D.decompose_neg_k_clique(g, 3, lam)
    union, _ = C.compose_disjoint_union(list(bundle.subs), 3)
    ledger = replace(bundle.ledger, op="clique-union", n_Q=union.n)
    fails = audit_ledger(ledger)
    z, q = ledger.z, ledger.q
    comp = union.max_component_order()
    checks = {
        "ledger": not fails,
        "component_bound": comp <= 3 * q,
        "vertex_bound": union.n <= 3 * z * z * z * q,
    }
    report = PipelineReport("clique-decomp-union", oracle(g), oracle(union), ledger.to_dict(), checks, fails)
    report.ledger["component_bound"] = str(3 * q)
    report.ledger["max_component"] = str(comp)
    return report


PIPELINES: dict[str, Callable[..., PipelineReport]] = {
    "ov-decomp": _p_ov,
    "clique-decomp": _p_clique,
    "mcconv-decomp": _p_mcconv,
    "conv-lift": _p_conv,
    "tricol-decomp": _p_tricol,
    "lcs-compose": _p_lcs,
    "lcis-compose": _p_lcis,
    "frechet-compose": _p_frechet,
    "union-compose": _p_union,
    "2sp-compose": _p_2sp,
    "clique-decomp-union": _p_clique_union,
}


# -- benchmarks ---------------------------------------------------------------


@dataclass(frozen=True)
class BenchTable:
    algorithm: str
    axis: str
    xs: tuple[int, ...]
    medians: tuple[float, ...]
    slope: float
    theory: int

    def lines(self) -> list[str]:
        out = [f"algorithm={self.algorithm}", f"axis={self.axis}"]
        out += [f"median.{x}={m:.6f}" for x, m in zip(self.xs, self.medians)]
        out += [f"slope={self.slope:.4f}", f"theory={self.theory}"]
        return out


def bounded_lcs_pair(n: int, ell: int, seed: int = 0) -> LcsInstance:
    """Length-``n`` strings whose LCS is exactly ``ell - 1`` with ``k = ell``,
    so threshold solvers never stop early."""
    rng = SplitMix64(seed)
    x1 = [rng.randbelow(2) for _ in range(n)]
    x1[0] = 0
    x2 = [2 + rng.randbelow(2) for _ in range(n)]
    for p in sorted(rng.sample(range(n), ell - 1)):
        x2[p] = 0
    # x1 needs ell - 1 zeros, which a random binary string of this length has
    return LcsInstance(tuple(x1), tuple(x2), ell, 4)


def _frechet_bench_instance(n: int, seed: int = 0) -> FrechetInstance:
    rng = SplitMix64(seed)
    pts = tuple((rng.randint(0, 50), rng.randint(0, 50)) for _ in range(n))
    return FrechetInstance(pts, pts, 1, 2 * 50 * 50)


def _component_graph(components: int, size: int, seed: int, colors: bool) -> WeightedGraph:
    rng = SplitMix64(seed)
    edges = []
    for c in range(components):
        base = c * size
        for u in range(1, size + 1):
            for v in range(u + 1, size + 1):
                if rng.randbelow(2):
                    edges.append((base + u, base + v, rng.randint(1, 9)))
    n = components * size
    cols = tuple(1 + rng.randbelow(4) for _ in range(n)) if colors else None
    return WeightedGraph(n, tuple(edges), k=3, colors=cols)


BENCH_ALGORITHMS = (
    "lcs_dp",
    "lcs_threshold",
    "frechet_dp",
    "frechet_banded",
    "neg-triangle-components",
    "tricol-components",
)


def _bench_case(algorithm: str, x: int, fixed: int, axis: str) -> Callable[[], object]:
    if algorithm in ("lcs_dp", "lcs_threshold"):
        n, ell = (x, fixed) if axis == "n" else (fixed, x)
        inst = bounded_lcs_pair(n, ell)
        if algorithm == "lcs_dp":
            return lambda: S.lcs_dp(inst, witness=False)
        return lambda: S.lcs_threshold(inst)
    if algorithm in ("frechet_dp", "frechet_banded"):
        n, ell = (x, fixed) if axis == "n" else (fixed, x)
        inst = _frechet_bench_instance(n)
        if algorithm == "frechet_dp":
            return lambda: S.frechet_dp(inst, witness=False)
        if axis == "ell":
            # input conversion is O(n) and independent of ell; keep it out
            P = S._pts(inst.P)
            return lambda: _kernels.frechet_reach(P, P, inst.k2, ell)
        return lambda: S.frechet_banded(inst, ell, witness=False)
    if algorithm in ("neg-triangle-components", "tricol-components"):
        # x components of order ``fixed``: linear in n at fixed ell
        g = _component_graph(x, fixed, 0, algorithm == "tricol-components")
        if algorithm == "tricol-components":
            return lambda: S.solve_triangle_collection(g)
        return lambda: S.solve_neg_k_clique(g, 3)
    raise ValueError(f"unknown benchmark algorithm {algorithm!r}")


_THEORY = {
    ("lcs_dp", "n"): 2,
    ("lcs_threshold", "n"): 1,
    ("lcs_threshold", "ell"): 1,
    ("frechet_dp", "n"): 2,
    ("frechet_banded", "n"): 1,
    ("frechet_banded", "ell"): 1,
    ("neg-triangle-components", "n"): 1,
    ("tricol-components", "n"): 1,
}


def bench_envelope(
    algorithm: str, grid: Sequence[int], repetitions: int = 3, fixed: int = 16, axis: str = "n"
) -> BenchTable:
    """Median wall time per grid point and the least-squares log-log slope.

    ``fixed`` is the parameter held constant (``ell`` when ``axis="n"``,
    ``n`` when ``axis="ell"``; component order for the graph solvers).
    """
    if len(grid) < 3:
        raise ValueError("need at least 3 grid points to fit a slope")
    if (algorithm, axis) not in _THEORY:
        raise ValueError(f"no envelope for {algorithm} along {axis}")
    medians = []
    for x in grid:
        run = _bench_case(algorithm, x, fixed, axis)
        run()  # warm-up, includes JIT compilation
        samples = []
        for _ in range(repetitions):
            t0 = time.perf_counter()
            run()
            samples.append(time.perf_counter() - t0)
        medians.append(statistics.median(samples))
    if axis == "ell" and algorithm == "frechet_banded":
        # the band holds 2 ell + 1 cells per row
        xs = [2 * x + 1 for x in grid]
    else:
        xs = list(grid)
    logx = [math.log(x) for x in xs]
    logy = [math.log(max(m, 1e-9)) for m in medians]
    slope = statistics.linear_regression(logx, logy).slope
    return BenchTable(algorithm, axis, tuple(grid), tuple(medians), slope, _THEORY[(algorithm, axis)])
