"""OR-decompositions of Orthogonal Vectors, Negative-Weight k-Clique and
(Multicolored) Convolution 3SUM, the reduction-transfer combinator, and
the one-step Triangle Collection decomposition.

Every decomposition splits the source into ``z`` blocks of ``q`` items,
``q = ceil(n^eps)``, ``z = ceil(n^(1-eps))``, ``eps = alpha/(alpha+lambda)``,
and emits one sub-instance per block tuple in row-major order.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .framework import Rational, as_fraction, block_parameters
from .instances import (
    ConvThreeSumInstance,
    McConvThreeSumInstance,
    OvInstance,
    ProblemInstance,
    WeightedGraph,
)

__all__ = [
    "ParameterLedger",
    "DecompositionBundle",
    "decompose_ov",
    "decompose_neg_k_clique",
    "decompose_mc_conv3sum",
    "mc_window",
    "reduce_conv_to_mc",
    "reduce_mc_to_conv",
    "lift_decomposition",
    "decompose_conv3sum",
    "decompose_triangle_collection",
    "block_members",
]


@dataclass(frozen=True)
class ParameterLedger:
    """Bookkeeping a transform claims about itself; see ``harness.audit_ledger``.

    ``role`` is the number of blocks a sub-instance may draw from, so the
    sub-instance parameter is at most ``role * q``.
    """

    op: str
    n: Optional[int] = None
    alpha: Optional[Fraction] = None
    lam: Optional[Fraction] = None
    epsilon: Optional[Fraction] = None
    q: Optional[int] = None
    z: Optional[int] = None
    t: Optional[int] = None
    role: Optional[int] = None
    n_max: Optional[int] = None
    n_max_actual: Optional[int] = None
    nu: Optional[int] = None
    mu: Optional[int] = None
    n_Q: Optional[int] = None
    ell_Q: Optional[int] = None
    c_n: Optional[int] = None
    c_ell: Optional[int] = None
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict[str, str]:
        out = {}
        for key, value in asdict(self).items():
            if key == "notes":
                out.update({f"note.{k}": str(v) for k, v in value.items()})
            elif value is not None:
                out[key] = str(value)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, str]) -> "ParameterLedger":
        kwargs: dict = {"notes": {}}
        fractions = {"alpha", "lam", "epsilon"}
        for key, value in data.items():
            if key.startswith("note."):
                kwargs["notes"][key[5:]] = value
            elif key == "op":
                kwargs[key] = value
            elif key in fractions:
                kwargs[key] = Fraction(value)
            else:
                kwargs[key] = int(value)
        return cls(**kwargs)


@dataclass(frozen=True)
class DecompositionBundle:
    subs: tuple[ProblemInstance, ...]
    ledger: ParameterLedger
    #: per sub-instance, the 1-based source block indices it was built from
    origin: tuple[tuple[int, ...], ...]


def block_members(block: int, q: int, n: int) -> range:
    """Source indices (1-based) covered by 1-based ``block``; may be empty."""
    return range((block - 1) * q + 1, min(block * q, n) + 1)


def _blocks(seq: Sequence, q: int, z: int, pad) -> list[tuple]:
    out = []
    for b in range(z):
        chunk = tuple(seq[b * q : (b + 1) * q])
        out.append(chunk + (pad,) * (q - len(chunk)))
    return out


def _ledger(op: str, n: int, alpha, lam, role: int, power: int, n_max: int, **extra) -> ParameterLedger:
    eps, q, z = block_parameters(n, alpha, lam)
    return ParameterLedger(
        op=op, n=n, alpha=as_fraction(alpha), lam=as_fraction(lam), epsilon=eps,
        q=q, z=z, t=z**power, role=role, n_max=n_max, **extra,
    )


# -- Orthogonal Vectors -------------------------------------------------------


def decompose_ov(inst: OvInstance, lam: Rational) -> DecompositionBundle:
    """Pairs of blocks ``(A_i, B_j)``, each block padded with all-one vectors."""
    eps, q, z = block_parameters(inst.n, 2, lam)
    ones = (1,) * inst.d
    A = _blocks(inst.A, q, z, ones)
    B = _blocks(inst.B, q, z, ones)
    subs, origin = [], []
    for i, j in itertools.product(range(z), repeat=2):
        subs.append(OvInstance(A[i], B[j], inst.d))
        origin.append((i + 1, j + 1))
    ledger = _ledger("ov", inst.n, 2, lam, role=1, power=2, n_max=q, n_max_actual=q)
    return DecompositionBundle(tuple(subs), ledger, tuple(origin))


# -- Negative-Weight k-Clique -------------------------------------------------


def _induced_by_blocks(g: WeightedGraph, q: int, z: int):
    """Return ``sub(blockset) -> (vertices, edges)`` with edges bucketed by block pair."""
    block_of = lambda v: (v - 1) // q  # noqa: E731
    by_pair: dict[tuple[int, int], list] = {}
    for u, v, w in g.edges:
        a, b = sorted((block_of(u), block_of(v)))
        by_pair.setdefault((a, b), []).append((u, v, w))

    def sub(blockset: tuple[int, ...]):
        verts = [v for b in blockset for v in block_members(b + 1, q, g.n)]
        edges = []
        for a, b in itertools.combinations_with_replacement(blockset, 2):
            edges.extend(by_pair.get((a, b), ()))
        return verts, edges

    return sub


def _relabel(verts: list[int], edges: list, colors=None):
    index = {v: i for i, v in enumerate(verts, 1)}
    new_edges = tuple(sorted((index[u], index[v], w) for u, v, w in edges))
    new_colors = tuple(colors[v - 1] for v in verts) if colors is not None else None
    return new_edges, new_colors


def decompose_neg_k_clique(g: WeightedGraph, k: int, lam: Rational) -> DecompositionBundle:
    """Induced subgraphs ``G[V_i1 u ... u V_ik]`` for all ``(i1..ik)`` in ``[z]^k``.

    Padding vertices are isolated and therefore left out of the
    sub-instances; the ledger keeps both the nominal sub-parameter
    ``|{i1..ik}| * q`` and the real vertex count.
    """
    if not 3 <= k <= 4:
        raise ValueError(f"clique order k={k} outside the supported range 3..4")
    eps, q, z = block_parameters(g.n, k, lam)
    sub_of = _induced_by_blocks(g, q, z)
    cache: dict[tuple[int, ...], WeightedGraph] = {}
    subs, origin = [], []
    claimed_max = actual_max = 0
    for tup in itertools.product(range(z), repeat=k):
        key = tuple(sorted(set(tup)))
        if key not in cache:
            verts, edges = sub_of(key)
            new_edges, _ = _relabel(verts, edges)
            cache[key] = WeightedGraph(len(verts), new_edges, k=k)
        sub = cache[key]
        claimed_max = max(claimed_max, len(key) * q)
        actual_max = max(actual_max, sub.n)
        subs.append(sub)
        origin.append(tuple(i + 1 for i in tup))
    ledger = _ledger(
        "clique", g.n, k, lam, role=k, power=k, n_max=claimed_max,
        n_max_actual=actual_max, ell_Q=k * q,
        notes={"k": k, "sub_n": "nominal |{i1..ik}|*q; n_max_actual counts real vertices"},
    )
    return DecompositionBundle(tuple(subs), ledger, tuple(origin))


# -- Convolution 3SUM ---------------------------------------------------------


def _entry_bound(*arrays) -> int:
    """``max |entry| + 1`` over non-SENTINEL entries."""
    return max((abs(x) for arr in arrays for x in arr if x is not None), default=0) + 1


def mc_window(q: int, l: int, p: int) -> tuple[int, int]:
    """1-based inclusive C-range used by block pair ``(l, p)``."""
    return (l + p - 2) * q + 2, (l + p) * q


def decompose_mc_conv3sum(inst: McConvThreeSumInstance, lam: Rational) -> DecompositionBundle:
    """Block pairs ``(A_l, B_p)`` with the C-window ``C[(l+p-2)q+2 .. (l+p)q]``.

    Sub-instance ``(l, p)`` has length ``2q``: ``A_l`` and ``B_p`` padded
    with a value no solution can use, and ``C'[m] = C[(l+p-2)q + m]`` for
    ``m >= 2`` (SENTINEL past the end of ``C``), ``C'[1] = SENTINEL``. So
    ``A_l[i] + B_p[j] = C'[i+j]`` is exactly the source equation.
    """
    n = inst.n
    eps, q, z = block_parameters(n, 2, lam)
    pad = 3 * _entry_bound(inst.A, inst.B, inst.C) + 1
    A = _blocks(inst.A, q, z, pad)
    B = _blocks(inst.B, q, z, pad)
    tail = (pad,) * q
    subs, origin = [], []
    for l, p in itertools.product(range(1, z + 1), repeat=2):
        base = (l + p - 2) * q
        C = (None,) + tuple(
            inst.C[base + m - 1] if base + m <= n else None for m in range(2, 2 * q + 1)
        )
        subs.append(McConvThreeSumInstance(A[l - 1] + tail, B[p - 1] + tail, C))
        origin.append((l, p))
    ledger = _ledger("mcconv3sum", n, 2, lam, role=2, power=2, n_max=2 * q, n_max_actual=2 * q)
    return DecompositionBundle(tuple(subs), ledger, tuple(origin))


def reduce_conv_to_mc(inst: ConvThreeSumInstance) -> McConvThreeSumInstance:
    return McConvThreeSumInstance(inst.A, inst.A, inst.A)


#: region offsets in units of ``Z`` for the four quarters of the output array
_OFFSETS = {
    # A + A must not land in the B or C quarter: |2a - b| >= 3 and |a - b| >= 3
    "separated": (-7, 1, 5, 6),
    "tight": (-5, 1, 3, 4),
}


def reduce_mc_to_conv(inst: McConvThreeSumInstance, scheme: str = "separated") -> ConvThreeSumInstance:
    """Length-``4n`` Convolution 3SUM array ``[R | A+aZ | B+bZ | C+(a+b)Z]``.

    ``Z = max |entry| + 1``. SENTINEL entries of C are first replaced by
    ``2m + 1`` (``m`` the largest magnitude), which no ``A[i] + B[j]`` reaches.

    ``scheme="tight"`` uses offsets ``(-5, 1, 3, 4)``; with those, two
    entries of the A quarter can sum into the C quarter, so answers are not
    always preserved. The default ``"separated"`` offsets ``(-7, 1, 5, 6)``
    rule that out.
    """
    if scheme not in _OFFSETS:
        raise ValueError(f"unknown scheme {scheme!r}")
    m = _entry_bound(inst.A, inst.B, inst.C) - 1
    C = tuple(2 * m + 1 if c is None else c for c in inst.C)
    Z = _entry_bound(inst.A, inst.B, C)
    r, a, b, c = _OFFSETS[scheme]
    arr = (
        (r * Z,) * inst.n
        + tuple(x + a * Z for x in inst.A)
        + tuple(x + b * Z for x in inst.B)
        + tuple(x + c * Z for x in C)
    )
    return ConvThreeSumInstance(arr)


def lift_decomposition(
    decompose: Callable[[ProblemInstance, Rational], DecompositionBundle],
    forward: Callable[[ProblemInstance], ProblemInstance],
    backward: Callable[[ProblemInstance], ProblemInstance],
    op: Optional[str] = None,
    size_factor: int = 1,
) -> Callable[[ProblemInstance, Rational], DecompositionBundle]:
    """Decompose Q by reducing to P, decomposing there, and mapping each sub back.

    ``size_factor`` bounds how much ``backward`` grows an instance; the
    ledger's ``n_max`` and ``role`` are scaled by it.
    """

    def lifted(inst: ProblemInstance, lam: Rational) -> DecompositionBundle:
        dec = decompose(forward(inst), lam)
        subs = tuple(backward(s) for s in dec.subs)
        sizes = [getattr(s, "n", 0) for s in subs]
        ledger = replace(
            dec.ledger,
            op=op or f"lift:{dec.ledger.op}",
            n=getattr(inst, "n", dec.ledger.n),
            role=dec.ledger.role * size_factor if dec.ledger.role else None,
            n_max=dec.ledger.n_max * size_factor if dec.ledger.n_max else None,
            n_max_actual=max(sizes, default=0),
        )
        return DecompositionBundle(subs, ledger, dec.origin)

    return lifted


decompose_conv3sum = lift_decomposition(
    decompose_mc_conv3sum, reduce_conv_to_mc, reduce_mc_to_conv, op="conv3sum", size_factor=4
)


# -- Triangle Collection ------------------------------------------------------


def decompose_triangle_collection(g: WeightedGraph, lam: Rational) -> tuple[WeightedGraph, ParameterLedger]:
    """Disjoint union ``H`` of ``G[V_i u V_j u V_k]`` over ``(i, j, k)`` in ``[z]^3``.

    ``H`` is equivalent to ``G`` (not merely an OR), and each of its
    components has at most ``3q`` vertices. Blocks are not padded: padding
    vertices would need colors.
    """
    if g.colors is None:
        raise ValueError("triangle collection needs vertex colors")
    eps, q, z = block_parameters(g.n, 3, lam)
    sub_of = _induced_by_blocks(g, q, z)
    cache: dict[tuple[int, ...], tuple] = {}
    edges: list = []
    colors: list[int] = []
    offset = 0
    largest = 0
    for tup in itertools.product(range(z), repeat=3):
        key = tuple(sorted(set(tup)))
        if key not in cache:
            verts, sub_edges = sub_of(key)
            cache[key] = (len(verts),) + _relabel(verts, sub_edges, g.colors)
        size, sub_edges, sub_colors = cache[key]
        edges.extend((u + offset, v + offset, w) for u, v, w in sub_edges)
        colors.extend(sub_colors)
        offset += size
        largest = max(largest, size)
    H = WeightedGraph(offset, tuple(edges), colors=tuple(colors))
    ledger = _ledger(
        "tricol", g.n, 3, lam, role=3, power=3, n_max=3 * q, n_max_actual=largest,
        n_Q=offset, ell_Q=3 * q,
    )
    return H, ledger
