"""OR-cross-compositions into LCS, LCIS, discrete Frechet, Negative-Weight
k-Clique (disjoint union) and 2nd Shortest Path.

Each composition returns the target instance together with a
:class:`~finegrain.decompose.ParameterLedger` recording ``n_Q`` and
``ell_Q`` and the constants of the (1, 1) bounds it claims.
"""

from __future__ import annotations

from typing import Sequence

from .decompose import ParameterLedger
from .instances import (
    FrechetInstance,
    LcisInstance,
    LcsInstance,
    SecondShortestPathInstance,
    WeightedGraph,
    dist2,
)
from .rng import SplitMix64

__all__ = [
    "SCALE",
    "S_A",
    "S_B",
    "C_A",
    "C_B",
    "L_A",
    "L_B",
    "Q_FAR",
    "K2",
    "pad_lcs_k",
    "compose_lcs",
    "pad_lcis_k",
    "compose_lcis",
    "validate_frechet_contract",
    "make_frechet_gadget",
    "terminator_gadget",
    "compose_frechet",
    "compose_disjoint_union",
    "compose_second_shortest_path",
]


def _ledger(op: str, t: int, n_max: int, n_Q: int, ell_Q: int, c_n: int, c_ell: int, **notes) -> ParameterLedger:
    return ParameterLedger(
        op=op, t=t, n_max=n_max, nu=1, mu=1, n_Q=n_Q, ell_Q=ell_Q, c_n=c_n, c_ell=c_ell, notes=notes
    )


# -- LCS ----------------------------------------------------------------------


def pad_lcs_k(instances: Sequence[LcsInstance]) -> list[LcsInstance]:
    """Raise every ``k`` to the maximum by appending a run of a fresh symbol
    to both strings; the run adds exactly its length to the LCS."""
    k_max = max(i.k for i in instances)
    out = []
    for inst in instances:
        extra = k_max - inst.k
        if extra == 0:
            out.append(inst)
            continue
        fresh = inst.sigma
        run = (fresh,) * extra
        out.append(LcsInstance(inst.x1 + run, inst.x2 + run, k_max, inst.sigma + 1))
    return out


def compose_lcs(instances: Sequence[LcsInstance]) -> tuple[LcsInstance, ParameterLedger]:
    """``x1 = x1_1 ... x1_t`` and ``x2 = x2_t ... x2_1`` over disjoint alphabets.

    Symbol ``s`` of instance ``i`` becomes ``offset_i + s``, where the
    offsets are running sums of the alphabet sizes.
    """
    if not instances:
        raise ValueError("composition needs at least one instance")
    k = instances[0].k
    if any(i.k != k for i in instances):
        raise ValueError("all instances must share k (see pad_lcs_k)")
    offsets, total = [], 0
    for inst in instances:
        offsets.append(total)
        total += inst.sigma
    x1 = tuple(o + s for inst, o in zip(instances, offsets) for s in inst.x1)
    x2 = tuple(
        o + s for inst, o in zip(reversed(instances), reversed(offsets)) for s in inst.x2
    )
    out = LcsInstance(x1, x2, k, max(total, 1))
    n_max = max(i.n for i in instances)
    ledger = _ledger("lcs", len(instances), n_max, out.n, k, c_n=1, c_ell=1)
    return out, ledger


# -- LCIS ---------------------------------------------------------------------


def pad_lcis_k(instances: Sequence[LcisInstance]) -> list[LcisInstance]:
    """Append a strictly increasing run above every value of the instance."""
    k_max = max(i.k for i in instances)
    out = []
    for inst in instances:
        extra = k_max - inst.k
        if extra == 0:
            out.append(inst)
            continue
        top = max(inst.x1 + inst.x2, default=0)
        run = tuple(range(top + 1, top + 1 + extra))
        out.append(LcisInstance(inst.x1 + run, inst.x2 + run, k_max, inst.strict))
    return out


def compose_lcis(instances: Sequence[LcisInstance]) -> tuple[LcisInstance, ParameterLedger]:
    """Shift instance ``i`` (1-based) by ``i * C_max``; forward / reversed concatenation."""
    if not instances:
        raise ValueError("composition needs at least one instance")
    k, strict = instances[0].k, instances[0].strict
    if any(i.k != k for i in instances):
        raise ValueError("all instances must share k (see pad_lcis_k)")
    if any(i.strict != strict for i in instances):
        raise ValueError("all instances must share the strict flag")
    c_max = 1 + max((v for i in instances for v in i.x1 + i.x2), default=0)
    shifted = [
        (tuple(v + idx * c_max for v in inst.x1), tuple(v + idx * c_max for v in inst.x2))
        for idx, inst in enumerate(instances, 1)
    ]
    x1 = tuple(v for a, _ in shifted for v in a)
    x2 = tuple(v for _, b in reversed(shifted) for v in b)
    out = LcisInstance(x1, x2, k, strict)
    n_max = max(i.n for i in instances)
    ledger = _ledger("lcis", len(instances), n_max, out.n, k, c_n=1, c_ell=1, c_max=c_max)
    return out, ledger


# -- discrete Frechet ---------------------------------------------------------

#: fixed-point scale; every frame coordinate is a multiple of 1/15
SCALE = 15
K2 = SCALE * SCALE
S_A = (-5, 3)
S_B = (-5, 0)
C_A = (0, 5)
C_B = S_B
L_A = (-20, 0)
L_B = (-20, 3)
#: Q-point farther than 1 from s_A but within 1 of c_A
Q_FAR = (0, 19)


def validate_frechet_contract(inst: FrechetInstance) -> list[str]:
    """Check the frame conditions a gadget must meet to be composable."""
    if inst.scale != SCALE:
        return [f"scale: expected {SCALE}, got {inst.scale}"]
    P, Q = inst.P, inst.Q
    out = []
    if inst.k2 != K2:
        out.append(f"k2: expected {K2}")
    if not P or not Q:
        return out + ["empty point list"]
    if P[0] != S_A or S_A in P[1:]:
        out.append("condition 2: P must start with s_A and contain it only once")
    if Q[0] != S_B:
        out.append("condition 3: Q must start with s_B")
    if any(dist2(q, C_A) > K2 for q in Q):
        out.append("condition 4: every Q-point within distance 1 of c_A")
    if any(dist2(p, C_B) > K2 for p in P):
        out.append("condition 5: every P-point within distance 1 of c_B")
    if any(dist2(L_A, q) <= K2 for q in Q if q != S_B):
        out.append("condition 6: l_A farther than 1 from Q except s_B")
    if any(dist2(L_B, p) <= K2 for p in P if p != S_A):
        out.append("condition 7: l_B farther than 1 from P except s_A")
    if not any(dist2(q, S_A) > K2 for q in Q):
        out.append("condition 8: some Q-point farther than 1 from s_A")
    return out


def _p_region(p) -> bool:
    return dist2(p, C_B) <= K2 and dist2(p, L_B) > K2 and p != S_A


def _q_region(q) -> bool:
    return dist2(q, C_A) <= K2 and dist2(q, L_A) > K2


# candidate lattice points, fixed order so generation is reproducible
_P_POINTS = [(x, y) for x in range(-20, 11) for y in range(-15, 16) if _p_region((x, y))]
_Q_POINTS = [(x, y) for x in range(-15, 16) for y in range(-10, 21) if _q_region((x, y))]
# P-points near c_B; none is within distance 1 of Q_FAR
_P_NEAR = [p for p in _P_POINTS if dist2(p, C_B) <= 2]


def make_frechet_gadget(answer: bool, m: int, seed: int) -> FrechetInstance:
    """Contract-clean stand-in for an OV-to-Frechet gadget with known answer.

    Both lists have ``m`` points and ``Q`` contains ``Q_FAR``. Yes-gadgets
    pair each ``q_i`` with a ``p_i`` within distance 1, so the diagonal
    traversal has width at most 1. In no-gadgets every non-start P-point
    sits within distance 1/10 of ``c_B``, more than 1 away from ``Q_FAR``,
    so no traversal can reach it.
    """
    if m < 2:
        raise ValueError("gadget size m must be at least 2")
    rng = SplitMix64(seed)
    far_at = rng.randint(1, m - 1)
    P, Q = [S_A], [S_B]
    for i in range(1, m):
        q = Q_FAR if i == far_at else rng.choice(_Q_POINTS)
        if answer:
            p = rng.choice([p for p in _P_POINTS if dist2(p, q) <= K2])
        else:
            p = rng.choice(_P_NEAR)
        P.append(p)
        Q.append(q)
    return FrechetInstance(tuple(P), tuple(Q), SCALE, K2)


#: the fixed no-instance appended after the inputs
TERMINATOR_SEED = 0x5EED


def terminator_gadget() -> FrechetInstance:
    return make_frechet_gadget(False, 4, TERMINATOR_SEED)


def compose_frechet(instances: Sequence[FrechetInstance]) -> tuple[FrechetInstance, ParameterLedger]:
    """``P = (P^1 l_A c_A) ... (P^t l_A c_A) P^{t+1}``,
    ``Q = (Q^1 l_B) ... (Q^{t+1} l_B) c_B``, padded with ``c_B`` to equal length.

    Instance ``t+1`` is :func:`terminator_gadget`. Whichever list is
    shorter is padded with copies of ``c_B`` (only ``Q`` needs it once
    ``t >= 2`` and gadgets are square).
    """
    if not instances:
        raise ValueError("composition needs at least one instance")
    for idx, inst in enumerate(instances, 1):
        bad = validate_frechet_contract(inst)
        if bad:
            raise ValueError(f"instance {idx} violates the contract: {bad[0]}")
    parts = list(instances) + [terminator_gadget()]
    P: list = []
    for inst in parts[:-1]:
        P.extend(inst.P)
        P.extend((L_A, C_A))
    P.extend(parts[-1].P)
    Q: list = []
    for inst in parts:
        Q.extend(inst.Q)
        Q.append(L_B)
    Q.append(C_B)
    if len(P) < len(Q):
        P.extend([C_B] * (len(Q) - len(P)))
    Q.extend([C_B] * (len(P) - len(Q)))
    out = FrechetInstance(tuple(P), tuple(Q), SCALE, K2)
    n_max = max(len(i.P) for i in parts)
    ledger = _ledger("frechet", len(instances), n_max, len(P), 2 * n_max, c_n=4, c_ell=2)
    return out, ledger


# -- graphs -------------------------------------------------------------------


def compose_disjoint_union(graphs: Sequence[WeightedGraph], k: int = 3) -> tuple[WeightedGraph, ParameterLedger]:
    if not graphs:
        raise ValueError("composition needs at least one graph")
    edges, offset = [], 0
    colors = [] if all(g.colors is not None for g in graphs) else None
    for g in graphs:
        edges.extend((u + offset, v + offset, w) for u, v, w in g.edges)
        if colors is not None:
            colors.extend(g.colors)
        offset += g.n
    out = WeightedGraph(offset, tuple(edges), k=k, colors=tuple(colors) if colors is not None else None)
    n_max = max(g.n for g in graphs)
    ledger = _ledger("union", len(graphs), n_max, offset, n_max, c_n=1, c_ell=1)
    return out, ledger


def compose_second_shortest_path(
    graphs: Sequence[WeightedGraph],
) -> tuple[SecondShortestPathInstance, ParameterLedger]:
    """Negative Triangle instances into one 2nd Shortest (simple) Path instance.

    Shared zero-weight path ``s -> p_1 -> ... -> p_{n+1} -> t``. For every
    instance and vertex, one ``a``- and one ``b``-vertex::

        p_j -> a^v     C + (n - j) D + w(v_j, v)      for edges {v_j, v}
        a^v -> b^u     C + w(v, u)                    for edges {v, u}
        b^u -> p_j'    C + j' D + w(u, v_{j'-1})      for edges {u, v_{j'-1}}

    with ``C = M + 1`` and ``D = 3M + 1``. A detour returning to
    ``p_{j+1}`` costs ``3C + (n+1) D + weight of triangle (v_j, v, u)``;
    returning further ahead costs at least ``D - 3M`` more, and simple
    paths cannot return behind. The bound is ``k = 3C + (n+1) D - 1``.
    Every cycle meets ``{p_1..p_{n+1}}``, so ``ell_Q = n + 1``.
    """
    if not graphs:
        raise ValueError("composition needs at least one graph")
    n = max(g.n for g in graphs)
    M = max((abs(w) for g in graphs for _, _, w in g.edges), default=0)
    C, D = M + 1, 3 * M + 1
    s, t = 1, 2
    path = list(range(3, n + 4))  # p_1 .. p_{n+1}
    nxt = n + 4
    edges = [(s, path[0], 0)] + [(a, b, 0) for a, b in zip(path, path[1:])] + [(path[-1], t, 0)]
    for g in graphs:
        adj = g.adjacency()
        a_of = {v: nxt + v - 1 for v in range(1, n + 1)}
        b_of = {v: nxt + n + v - 1 for v in range(1, n + 1)}
        nxt += 2 * n
        for j in range(1, n + 1):
            for v, w in sorted(adj.get(j, {}).items()):
                edges.append((path[j - 1], a_of[v], C + (n - j) * D + w))
        for v in range(1, g.n + 1):
            for u, w in sorted(adj[v].items()):
                edges.append((a_of[v], b_of[u], C + w))
        for u in range(1, g.n + 1):
            for v, w in sorted(adj[u].items()):
                jp = v + 1  # returning to p_{v+1} closes a triangle through v
                edges.append((b_of[u], path[jp - 1], C + jp * D + w))
    graph = WeightedGraph(nxt - 1, tuple(edges), directed=True)
    k = 3 * C + (n + 1) * D - 1
    out = SecondShortestPathInstance(graph, s, t, k)
    ledger = _ledger("2sp", len(graphs), n, graph.n, n + 1, c_n=6, c_ell=2, C=C, D=D, M=M)
    return out, ledger
