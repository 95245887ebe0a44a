"""Baseline and parameterized solvers.

The baselines (brute force or full DP) are also the oracles every
transform in the package is checked against, so they favour being
obviously right over being fast. The DP inner loops live in
:mod:`finegrain._kernels`.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .instances import (
    ConvThreeSumInstance,
    FrechetInstance,
    LcisInstance,
    LcsInstance,
    McConvThreeSumInstance,
    OvInstance,
    SecondShortestPathInstance,
    SolveResult,
    ThreeSumInstance,
    TraversalWitness,
    WeightedGraph,
    dist2,
)

__all__ = [
    "BandSpec",
    "solve_ov",
    "solve_3sum",
    "solve_conv3sum",
    "solve_mc_conv3sum",
    "solve_neg_k_clique",
    "neg_k_clique_whole_graph",
    "solve_triangle_collection",
    "triangle_collection_whole_graph",
    "lcs_dp",
    "lcs_threshold",
    "lcis_dp",
    "frechet_dp",
    "frechet_banded",
    "frechet_min_shift",
    "second_shortest_walk",
    "second_shortest_path",
    "is_subsequence",
    "check_lcs_witness",
    "check_lcis_witness",
]


@dataclass(frozen=True)
class BandSpec:
    ell: int

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("band half-width must be non-negative")


# -- Orthogonal Vectors and the 3SUM family ----------------------------------


def _bits(vec: Sequence[int]) -> int:
    out = 0
    for c in vec:
        out = (out << 1) | c
    return out


def solve_ov(inst: OvInstance) -> SolveResult:
    B = [_bits(b) for b in inst.B]
    for i, a in enumerate(inst.A, 1):
        ma = _bits(a)
        for j, mb in enumerate(B, 1):
            if ma & mb == 0:
                return SolveResult(True, (i, j))
    return SolveResult(False)


def solve_3sum(inst: ThreeSumInstance) -> SolveResult:
    """Sort plus two pointers; indices may repeat (``i = j = h`` is allowed)."""
    order = sorted(range(inst.n), key=inst.A.__getitem__)
    v = [inst.A[i] for i in order]
    n = len(v)
    for a in range(n):
        lo, hi = a, n - 1
        while lo <= hi:
            s = v[a] + v[lo] + v[hi]
            if s == 0:
                return SolveResult(True, (order[a] + 1, order[lo] + 1, order[hi] + 1))
            if s < 0:
                lo += 1
            else:
                hi -= 1
    return SolveResult(False)


def solve_mc_conv3sum(inst: McConvThreeSumInstance) -> SolveResult:
    """``A[i] + B[j] = C[i+j]`` with ``i + j <= n``; SENTINEL never matches."""
    A, B, C = inst.A, inst.B, inst.C
    n = len(C)
    for i in range(1, len(A) + 1):
        ai = A[i - 1]
        for j in range(1, min(len(B), n - i) + 1):
            c = C[i + j - 1]
            if c is not None and ai + B[j - 1] == c:
                return SolveResult(True, (i, j))
    return SolveResult(False)


def solve_conv3sum(inst: ConvThreeSumInstance) -> SolveResult:
    A = inst.A
    return solve_mc_conv3sum(McConvThreeSumInstance(A, A, A))


# -- graph problems -----------------------------------------------------------


def _k_cliques(vertices: Sequence[int], adj: dict[int, dict[int, int]], k: int):
    """Yield every k-clique (as a sorted tuple) within ``vertices``."""
    vs = sorted(vertices)

    def extend(clique: list[int], cands: list[int]):
        if len(clique) == k:
            yield tuple(clique)
            return
        for idx, v in enumerate(cands):
            nbrs = adj[v]
            yield from extend(clique + [v], [u for u in cands[idx + 1 :] if u in nbrs])

    yield from extend([], vs)


def _clique_weight(clique: Sequence[int], adj: dict[int, dict[int, int]]) -> int:
    return sum(adj[u][v] for u, v in itertools.combinations(clique, 2))


def solve_neg_k_clique(g: WeightedGraph, k: Optional[int] = None) -> SolveResult:
    """Negative-weight k-clique by enumeration inside each component."""
    k = g.k if k is None else k
    if k is None or not 3 <= k <= 4:
        raise ValueError(f"clique order k={k} outside the supported range 3..4")
    if g.directed:
        raise ValueError("negative k-clique needs an undirected graph")
    adj = g.adjacency()
    for comp in g.components():
        if len(comp) < k:
            continue
        for clique in _k_cliques(comp, adj, k):
            w = _clique_weight(clique, adj)
            if w < 0:
                return SolveResult(True, clique, w)
    return SolveResult(False)


def neg_k_clique_whole_graph(g: WeightedGraph, k: int) -> bool:
    """Oracle: every k-subset of all vertices, ignoring components."""
    adj = g.adjacency()
    for sub in itertools.combinations(range(1, g.n + 1), k):
        if all(v in adj[u] for u, v in itertools.combinations(sub, 2)):
            if _clique_weight(sub, adj) < 0:
                return True
    return False


def _needed_color_triples(colors: Sequence[int]) -> set[tuple[int, int, int]]:
    return set(itertools.combinations(sorted(set(colors)), 3))


def solve_triangle_collection(g: WeightedGraph) -> SolveResult:
    """Every triple of distinct present colors must be realized by a triangle.

    Triangles are enumerated per component. The witness is omitted: the
    certificate is the whole set of realized triples.
    """
    if g.colors is None:
        raise ValueError("triangle collection needs vertex colors")
    need = _needed_color_triples(g.colors)
    if not need:
        return SolveResult(True, value=0)
    adj = g.adjacency()
    col = g.colors
    found: set[tuple[int, int, int]] = set()
    for comp in g.components():
        if len(comp) < 3:
            continue
        for a, b, c in _k_cliques(comp, adj, 3):
            key = tuple(sorted((col[a - 1], col[b - 1], col[c - 1])))
            if key[0] != key[1] and key[1] != key[2]:
                found.add(key)
        if need <= found:
            return SolveResult(True, value=len(need))
    return SolveResult(False, value=len(need & found))


def triangle_collection_whole_graph(g: WeightedGraph) -> bool:
    """Oracle: scan all vertex triples of the whole graph."""
    adj = g.adjacency()
    col = g.colors
    found = set()
    for a, b, c in itertools.combinations(range(1, g.n + 1), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            found.add(tuple(sorted((col[a - 1], col[b - 1], col[c - 1]))))
    return _needed_color_triples(col) <= found


# -- string problems ----------------------------------------------------------


def _arr(xs: Sequence[int]) -> np.ndarray:
    return np.asarray(xs, dtype=np.int64).reshape(-1)


def is_subsequence(y: Sequence[int], x: Sequence[int]) -> bool:
    it = iter(x)
    return all(c in it for c in y)


def check_lcs_witness(inst: LcsInstance, y: Sequence[int]) -> bool:
    return len(y) >= inst.k and is_subsequence(y, inst.x1) and is_subsequence(y, inst.x2)


def check_lcis_witness(inst: LcisInstance, y: Sequence[int]) -> bool:
    if inst.strict:
        increasing = all(a < b for a, b in zip(y, y[1:]))
    else:
        increasing = all(a <= b for a, b in zip(y, y[1:]))
    return increasing and len(y) >= inst.k and is_subsequence(y, inst.x1) and is_subsequence(y, inst.x2)


def lcs_dp(inst: LcsInstance, witness: bool = True) -> SolveResult:
    """Quadratic DP. ``value`` is the LCS length; the witness is one LCS.

    With ``witness=False`` only two DP rows are kept.
    """
    a, b = _arr(inst.x1), _arr(inst.x2)
    if not witness:
        best = int(_kernels.lcs_length(a, b))
        return SolveResult(best >= inst.k, value=best)
    L = _kernels.lcs_table(a, b)
    i, j = len(a), len(b)
    out = []
    while i and j:
        if a[i - 1] == b[j - 1]:
            out.append(int(a[i - 1]))
            i -= 1
            j -= 1
        elif L[i - 1, j] >= L[i, j - 1]:
            i -= 1
        else:
            j -= 1
    best = int(L[len(a), len(b)])
    return SolveResult(best >= inst.k, tuple(reversed(out)), best)


def lcs_threshold(inst: LcsInstance) -> SolveResult:
    """Threshold-table LCS decision in ``O(n k + n sigma)``; stops at length k.

    ``value`` is ``min(LCS, k)``.
    """
    if inst.k == 0:
        return SolveResult(True, value=0)
    a, b = _arr(inst.x1), _arr(inst.x2)
    got = int(_kernels.lcs_threshold_length(a, b, max(inst.sigma, 1), inst.k))
    return SolveResult(got >= inst.k, value=got)


def lcis_dp(inst: LcisInstance) -> SolveResult:
    """Longest common (weakly) increasing subsequence, quadratic DP."""
    x1, x2 = inst.x1, inst.x2
    m = len(x2)
    f = [0] * m
    # node = (value, parent node); one per improvement of f[j]
    node: list[Optional[tuple]] = [None] * m
    for a in x1:
        cur, cur_node = 0, None
        for j in range(m):
            old, old_node = f[j], node[j]
            b = x2[j]
            if b == a and cur + 1 > old:
                f[j], node[j] = cur + 1, (a, cur_node)
            if b < a or (not inst.strict and b == a):
                if old > cur:
                    cur, cur_node = old, old_node
    best = max(f, default=0)
    out = []
    if best:
        nd = node[f.index(best)]
        while nd is not None:
            out.append(nd[0])
            nd = nd[1]
    return SolveResult(best >= inst.k, tuple(reversed(out)), best)


# -- discrete Frechet ---------------------------------------------------------


def _pts(points) -> np.ndarray:
    flat = itertools.chain.from_iterable(points)
    return np.fromiter(flat, dtype=np.int64, count=2 * len(points)).reshape(-1, 2)


def _traceback(R: np.ndarray, ell: int, n: int, m: int) -> TraversalWitness:
    def ok(i: int, j: int) -> bool:
        d = j - i + ell
        return 0 <= i and 0 <= j and 0 <= d < R.shape[1] and bool(R[i, d])

    i, j = n - 1, m - 1
    cells = [(i + 1, j + 1)]
    while (i, j) != (0, 0):
        for di, dj in ((1, 1), (1, 0), (0, 1)):
            if ok(i - di, j - dj):
                i, j = i - di, j - dj
                break
        else:  # pragma: no cover - a reachable cell always has a reachable predecessor
            raise AssertionError("broken reachability table")
        cells.append((i + 1, j + 1))
    return TraversalWitness(tuple(reversed(cells)))


def _frechet(inst: FrechetInstance, ell: int, witness: bool) -> SolveResult:
    n, m = len(inst.P), len(inst.Q)
    if n == 0 or m == 0:
        raise ValueError("empty point list")
    ell = min(ell, max(n, m))
    R = _kernels.frechet_reach(_pts(inst.P), _pts(inst.Q), inst.k2, ell)
    d_end = (m - 1) - (n - 1) + ell
    reached = 0 <= d_end < R.shape[1] and bool(R[n - 1, d_end])
    if not reached:
        return SolveResult(False)
    return SolveResult(True, _traceback(R, ell, n, m) if witness else None)


def frechet_dp(inst: FrechetInstance, witness: bool = True) -> SolveResult:
    """Full free-space reachability over the ``n x n`` grid."""
    return _frechet(inst, max(len(inst.P), len(inst.Q)), witness)


def frechet_banded(inst: FrechetInstance, band, witness: bool = True) -> SolveResult:
    """Width-``k`` traversal restricted to ``|i - j| <= ell``, ``O(n ell)``."""
    ell = band.ell if isinstance(band, BandSpec) else BandSpec(int(band)).ell
    return _frechet(inst, ell, witness)


def frechet_min_shift(inst: FrechetInstance) -> Optional[int]:
    """Least band half-width admitting a width-``k`` traversal, or None."""
    if not frechet_dp(inst, witness=False).answer:
        return None
    ok = lambda ell: frechet_banded(inst, ell, witness=False).answer  # noqa: E731
    if ok(0):
        return 0
    hi = 1
    while not ok(hi):
        hi *= 2
    lo = hi // 2  # ok(lo) is false
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


# -- second shortest s-t walk / path -------------------------------------------


def second_shortest_walk(inst: SecondShortestPathInstance) -> SolveResult:
    """Second-smallest weight over distinct s-t walks.

    Label-setting search in which every vertex is settled at most twice.
    Walks are distinct as edge sequences, so two equal-weight routes give
    ``d2 == d1``. ``value`` is ``d2`` (None if fewer than two walks exist).
    """
    g = inst.graph
    out: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, g.n + 1)}
    for u, v, w in g.edges:
        if w < 0:
            raise ValueError("second shortest walk needs non-negative weights")
        out[u].append((v, w))
    settled = dict.fromkeys(out, 0)
    labels: list[tuple[int, Optional[int]]] = []  # (vertex, parent label)
    heap = [(0, 0, inst.s, None)]
    counter = 1
    hits = []
    while heap:
        d, _, v, parent = heapq.heappop(heap)
        if settled[v] >= 2:
            continue
        settled[v] += 1
        labels.append((v, parent))
        me = len(labels) - 1
        if v == inst.t:
            hits.append((d, me))
            if len(hits) == 2:
                break
        for u, w in out[v]:
            if settled[u] < 2:
                heapq.heappush(heap, (d + w, counter, u, me))
                counter += 1
    if len(hits) < 2:
        return SolveResult(False)
    d2, lab = hits[1]
    walk = []
    while lab is not None:
        v, lab = labels[lab]
        walk.append(v)
    return SolveResult(d2 <= inst.k, tuple(reversed(walk)), d2)


def _dijkstra(out, s, t, banned_nodes, banned_edges):
    dist = {s: 0}
    prev = {}
    heap = [(0, s)]
    done = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        if v == t:
            path = [t]
            while path[-1] != s:
                path.append(prev[path[-1]])
            return d, path[::-1]
        for u, w in out[v]:
            if u in banned_nodes or (v, u) in banned_edges:
                continue
            nd = d + w
            if nd < dist.get(u, nd + 1):
                dist[u] = nd
                prev[u] = v
                heapq.heappush(heap, (nd, u))
    return None


def second_shortest_path(inst: SecondShortestPathInstance) -> SolveResult:
    """Second-smallest weight over distinct simple s-t paths (Yen, K = 2)."""
    g = inst.graph
    out: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, g.n + 1)}
    weight = {}
    for u, v, w in g.edges:
        if w < 0:
            raise ValueError("second shortest path needs non-negative weights")
        out[u].append((v, w))
        weight[(u, v)] = w
    first = _dijkstra(out, inst.s, inst.t, set(), set())
    if first is None:
        return SolveResult(False)
    _, p1 = first
    best = None
    for i in range(len(p1) - 1):
        spur, root = p1[i], p1[: i + 1]
        root_cost = sum(weight[(a, b)] for a, b in zip(root, root[1:]))
        found = _dijkstra(out, spur, inst.t, set(root[:-1]), {(spur, p1[i + 1])})
        if found is None:
            continue
        d, tail = found
        cand = (root_cost + d, tuple(root[:-1] + tail))
        if best is None or cand[0] < best[0]:
            best = cand
    if best is None:
        return SolveResult(False)
    return SolveResult(best[0] <= inst.k, best[1], best[0])
