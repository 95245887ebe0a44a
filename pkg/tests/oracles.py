"""Brute-force reference implementations, written independently of the
package solvers. Exponential or cubic on purpose; keep inputs tiny."""

from __future__ import annotations

import itertools
from functools import lru_cache


def ov(A, B):
    return any(all(a * b == 0 for a, b in zip(x, y)) for x in A for y in B)


def three_sum(A):
    return any(x + y + z == 0 for x in A for y in A for z in A)


def mc_conv(A, B, C):
    n = len(C)
    return any(
        C[i + j - 1] is not None and A[i - 1] + B[j - 1] == C[i + j - 1]
        for i in range(1, len(A) + 1)
        for j in range(1, len(B) + 1)
        if i + j <= n
    )


def conv(A):
    return mc_conv(A, A, A)


def _weights(n, edges):
    w = {}
    for u, v, x in edges:
        w[frozenset((u, v))] = x
    return w


def neg_clique(n, edges, k):
    w = _weights(n, edges)
    for vs in itertools.combinations(range(1, n + 1), k):
        pairs = [frozenset(p) for p in itertools.combinations(vs, 2)]
        if all(p in w for p in pairs) and sum(w[p] for p in pairs) < 0:
            return True
    return False


def triangle_collection(n, edges, colors):
    w = _weights(n, edges)
    present = set(colors)
    realized = set()
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        if {frozenset((a, b)), frozenset((a, c)), frozenset((b, c))} <= w.keys():
            cs = {colors[a - 1], colors[b - 1], colors[c - 1]}
            if len(cs) == 3:
                realized.add(frozenset(cs))
    needed = {frozenset(t) for t in itertools.combinations(sorted(present), 3)}
    return needed <= realized


def lcs_len(x, y):
    """Memoized recursion on suffixes."""

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(x) or j == len(y):
            return 0
        if x[i] == y[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))

    return go(0, 0)


def lcs_len_bits(x, y):
    """Bit-parallel LCS length (Allison-Dix / Hyyro)."""
    m = len(x)
    if m == 0:
        return 0
    mask = (1 << m) - 1
    match = {}
    for i, c in enumerate(x):
        match[c] = match.get(c, 0) | (1 << i)
    v = mask
    for c in y:
        u = v & match.get(c, 0)
        v = ((v + u) | (v - u)) & mask
    return m - bin(v).count("1")


def lcis_len(x, y, strict=True):
    """Enumerate subsequences of ``x`` that are (weakly) increasing."""
    best = 0
    ok = (lambda a, b: a < b) if strict else (lambda a, b: a <= b)

    def is_sub(s, t):
        it = iter(t)
        return all(c in it for c in s)

    for r in range(len(x), 0, -1):
        if r <= best:
            break
        for idx in itertools.combinations(range(len(x)), r):
            s = [x[i] for i in idx]
            if all(ok(a, b) for a, b in zip(s, s[1:])) and is_sub(s, y):
                return r
    return best


def frechet(P, Q, k2, ell=None):
    """Search over the free-space grid from the start cell."""
    n, m = len(P), len(Q)

    def free(i, j):
        if ell is not None and abs(i - j) > ell:
            return False
        dx, dy = P[i][0] - Q[j][0], P[i][1] - Q[j][1]
        return dx * dx + dy * dy <= k2

    if not free(0, 0):
        return False
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        i, j = stack.pop()
        if (i, j) == (n - 1, m - 1):
            return True
        for a, b in ((i + 1, j), (i, j + 1), (i + 1, j + 1)):
            if a < n and b < m and (a, b) not in seen and free(a, b):
                seen.add((a, b))
                stack.append((a, b))
    return False


def walk_weights(n, edges, s, t, max_edges):
    """Sorted weights of all s-t walks with at most ``max_edges`` edges,
    pruned to the two smallest found so far (weights are non-negative)."""
    out = {u: [] for u in range(1, n + 1)}
    for u, v, w in edges:
        out[u].append((v, w))
    best: list[int] = []

    def dfs(v, d, steps):
        if len(best) == 2 and d > best[1]:
            return
        if v == t:
            best.append(d)
            best.sort()
            del best[2:]
        if steps == max_edges:
            return
        for u, w in out[v]:
            dfs(u, d + w, steps + 1)

    dfs(s, 0, 0)
    return best


def simple_path_weights(n, edges, s, t):
    out = {u: [] for u in range(1, n + 1)}
    for u, v, w in edges:
        out[u].append((v, w))
    found = []

    def dfs(v, d, seen):
        if v == t:
            found.append(d)
            return
        for u, w in out[v]:
            if u not in seen:
                dfs(u, d + w, seen | {u})

    dfs(s, 0, {s})
    return sorted(found)
