"""Compiled inner loops for the quadratic and banded dynamic programs."""

import numpy as np
from numba import njit


@njit(cache=True)
def lcs_length(a, b):
    m = b.shape[0]
    prev = np.zeros(m + 1, dtype=np.int64)
    cur = np.zeros(m + 1, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = a[i]
        cur[0] = 0
        for j in range(m):
            if ai == b[j]:
                cur[j + 1] = prev[j] + 1
            elif prev[j + 1] >= cur[j]:
                cur[j + 1] = prev[j + 1]
            else:
                cur[j + 1] = cur[j]
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True)
def lcs_table(a, b):
    n, m = a.shape[0], b.shape[0]
    L = np.zeros((n + 1, m + 1), dtype=np.int32)
    for i in range(n):
        for j in range(m):
            if a[i] == b[j]:
                L[i + 1, j + 1] = L[i, j] + 1
            else:
                L[i + 1, j + 1] = max(L[i, j + 1], L[i + 1, j])
    return L


@njit(cache=True)
def next_occurrence(b, sigma):
    """``nxt[c, p]`` = least index ``>= p`` holding symbol ``c``, else ``len(b)``."""
    m = b.shape[0]
    nxt = np.empty((sigma, m + 1), dtype=np.int64)
    for c in range(sigma):
        nxt[c, m] = m
    for p in range(m - 1, -1, -1):
        for c in range(sigma):
            nxt[c, p] = nxt[c, p + 1]
        nxt[b[p], p] = p
    return nxt


@njit(cache=True)
def lcs_threshold_length(a, b, sigma, k):
    """Length of an LCS of ``a`` and ``b``, capped at ``k``.

    ``T[j]`` is the shortest prefix of ``b`` that shares a length-``j``
    common subsequence with the processed prefix of ``a``.
    """
    m = b.shape[0]
    if k <= 0:
        return 0
    nxt = next_occurrence(b, sigma)
    T = np.full(k + 1, m + 1, dtype=np.int64)
    T[0] = 0
    best = 0
    for i in range(a.shape[0]):
        c = a[i]
        top = best if best < k else k - 1
        for j in range(top, -1, -1):
            if T[j] > m:
                continue
            p = nxt[c, T[j]] if T[j] < m else m
            if p < m and p + 1 < T[j + 1]:
                T[j + 1] = p + 1
                if j + 1 > best:
                    best = j + 1
        if best >= k:
            return k
    return best


@njit(cache=True)
def frechet_reach(P, Q, k2, ell):
    """Reachability over cells with ``|i - j| <= ell``.

    Column ``d`` of row ``i`` stores cell ``(i, i + d - ell)``.
    """
    n, m = P.shape[0], Q.shape[0]
    w = 2 * ell + 1
    R = np.zeros((n, w), dtype=np.uint8)
    for i in range(n):
        lo = max(0, i - ell)
        hi = min(m - 1, i + ell)
        for j in range(lo, hi + 1):
            dx = P[i, 0] - Q[j, 0]
            dy = P[i, 1] - Q[j, 1]
            if dx * dx + dy * dy > k2:
                continue
            d = j - i + ell
            if i == 0 and j == 0:
                R[i, d] = 1
                continue
            # predecessors (i, j-1), (i-1, j-1), (i-1, j)
            if j > 0 and d >= 1 and R[i, d - 1]:
                R[i, d] = 1
            elif i > 0 and j > 0 and R[i - 1, d]:
                R[i, d] = 1
            elif i > 0 and d + 1 < w and R[i - 1, d + 1]:
                R[i, d] = 1
    return R
