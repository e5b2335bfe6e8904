"""Brute-force reference answers.

These share nothing with the fast solvers except ``geom.squared_distance``;
they enumerate subsets, combinations or triples directly from the
definitions.  Radii are handled squared throughout.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm

import numba
import numpy as np

from ..errors import TooLargeForOracle
from ..geom import squared_distance

SUBSET_LIMIT = 20
COMBO_LIMIT = 14
COMBO_K_LIMIT = 5
TRIPLE_LIMIT = 400


def _limit(ok, what):
    if not ok:
        raise TooLargeForOracle(what)


def distance_matrix(points):
    n = len(points)
    exact = n and isinstance(points[0][0], Fraction)
    D = np.empty((n, n), dtype=object if exact else np.float64)
    for i in range(n):
        for j in range(n):
            D[i, j] = squared_distance(points[i], points[j])
    return D


def _near(D, r2, eps):
    return np.array(D - r2 <= eps, dtype=bool)


def _integer_weights(ws):
    """Weights as int64 scaled by a common denominator, if that is exact and small."""
    fr = [Fraction(w) for w in ws]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    if ints and max(abs(v) for v in ints) * len(ints) >= 2 ** 62:
        return None, den
    return np.array(ints, dtype=np.int64), den


def _subset_tables(near_masks, n):
    size = 1 << n
    acc = np.zeros(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for i in range(n):
        lo = 1 << i
        acc[lo:2 * lo] = acc[:lo] | near_masks[i]
        pop[lo:2 * lo] = pop[:lo] + 1
    return acc, pop


def _subset_weights(ws, n):
    ints, den = _integer_weights(ws)
    size = 1 << n
    if ints is None:
        tot = np.zeros(size, dtype=object)
        vals = [Fraction(w) for w in ws]
        den = 1
    else:
        tot = np.zeros(size, dtype=np.int64)
        vals = ints
    for i in range(n):
        lo = 1 << i
        tot[lo:2 * lo] = tot[:lo] + vals[i]
    return tot, den


def _mask_members(mask, n):
    return tuple(i for i in range(n) if mask >> i & 1)


def oracle_dominating(points, weights, r2, k=None, eps=0, weighted=True):
    """Minimum (weight or size) dominating set with at most k members, or None."""
    n = len(points)
    _limit(n <= SUBSET_LIMIT, f"dominating-set oracle needs n <= {SUBSET_LIMIT}")
    k = n if k is None else k
    near = _near(distance_matrix(points), r2, eps)
    masks = [sum(1 << j for j in range(n) if near[i, j]) for i in range(n)]
    cov, pop = _subset_tables(masks, n)
    full = (1 << n) - 1
    ok = (cov == full) & (pop <= k)
    if not ok.any():
        return None
    if weighted:
        tot, den = _subset_weights(weights, n)
    else:
        tot, den = pop, 1
    cand = np.flatnonzero(ok)
    vals = tot[cand]
    best = min(vals.tolist())
    pick = [int(m) for m, v in zip(cand.tolist(), vals.tolist()) if v == best]
    mask = min(pick, key=lambda m: (bin(m).count("1"), _mask_members(m, n)))
    return Fraction(best, den) if weighted else best, _mask_members(mask, n)


def oracle_mwis(points, weights, r2, eps=0, strict=True):
    """Maximum-weight set with pairwise distance > r (``strict``) or >= r."""
    n = len(points)
    _limit(n <= SUBSET_LIMIT, f"independent-set oracle needs n <= {SUBSET_LIMIT}")
    D = distance_matrix(points)
    conflict = _near(D, r2, eps) if strict else np.array(D - r2 < -eps, dtype=bool)
    size = 1 << n
    indep = np.zeros(size, dtype=bool)
    indep[0] = True
    idx = np.arange(size, dtype=np.int64)
    for i in range(n):
        lo = 1 << i
        low_mask = sum(1 << j for j in range(i) if conflict[i, j])
        indep[lo:2 * lo] = indep[:lo] & ((idx[:lo] & low_mask) == 0)
    tot, den = _subset_weights(weights, n)
    cand = np.flatnonzero(indep)
    vals = tot[cand].tolist()
    best = max(vals)
    mask = min(m for m, v in zip(cand.tolist(), vals) if v == best)
    return Fraction(best, den), _mask_members(mask, n)


def oracle_kcenter(points, k):
    """(r*^2, centres) minimising the largest point-to-nearest-centre distance."""
    n = len(points)
    _limit(n <= COMBO_LIMIT and k <= COMBO_K_LIMIT or k >= n,
           f"k-center oracle needs n <= {COMBO_LIMIT} and k <= {COMBO_K_LIMIT}")
    D = distance_matrix(points)
    if k >= n:
        return D[0, 0] * 0, tuple(range(n))
    best = None
    for combo in combinations(range(n), k):
        val = max(min(D[p, c] for c in combo) for p in range(n))
        if best is None or val < best[0]:
            best = (val, combo)
    return best


def oracle_dispersion(points, k):
    """(r*^2, members) maximising the smallest pairwise distance among k points."""
    n = len(points)
    _limit(n <= COMBO_LIMIT and k <= COMBO_K_LIMIT,
           f"dispersion oracle needs n <= {COMBO_LIMIT} and k <= {COMBO_K_LIMIT}")
    if k < 2 or k > n:
        raise ValueError("dispersion oracle needs 2 <= k <= n")
    D = distance_matrix(points)
    best = None
    for combo in combinations(range(n), k):
        val = min(D[a, b] for a, b in combinations(combo, 2))
        if best is None or val > best[0]:
            best = (val, combo)
    return best


def oracle_dispersion3(points):
    """(r*^2, triple): the largest smallest-pairwise squared distance over all triples."""
    n = len(points)
    _limit(3 <= n <= TRIPLE_LIMIT, f"triple oracle needs 3 <= n <= {TRIPLE_LIMIT}")
    D = distance_matrix(points)
    best = None
    for i in range(n - 2):
        sub = D[i + 1:, i + 1:]
        row = D[i, i + 1:]
        M = np.minimum(np.minimum(row[:, None], row[None, :]), sub)
        M = np.triu(M, 1) if M.dtype != object else _triu_obj(M)
        if M.size == 0:
            continue
        flat = int(np.argmax(M))
        v = M.flat[flat]
        if best is None or v > best[0]:
            j, k = divmod(flat, M.shape[1])
            best = (v, (i, i + 1 + j, i + 1 + k))
    return best


def _triu_obj(M):
    out = M.copy()
    m = M.shape[0]
    for a in range(m):
        for b in range(a + 1):
            out[a, b] = -1
    return out


def oracle_triple_decision(points, r2) -> bool:
    """Whether some triple has all pairwise squared distances >= r2."""
    best = oracle_dispersion3(points)
    return best is not None and best[0] >= r2


@numba.njit(cache=True)
def _triple_scan(R, w):
    n = R.shape[0]
    bw = w[0] - w[0]
    bi = -1
    bj = -1
    bk = -1
    for i in range(n):
        for j in range(i + 1, n):
            if not R[i, j]:
                continue
            for k in range(j + 1, n):
                if R[i, k] and R[j, k]:
                    s = w[i] + w[j] + w[k]
                    if bi < 0 or s > bw:
                        bw = s
                        bi = i
                        bj = j
                        bk = k
    return bw, bi, bj, bk


def relation_matrix(points, r2, near: bool, eps=0):
    D = distance_matrix(points)
    R = np.array(D - r2 <= eps, dtype=bool) if near else np.array(D - r2 > eps, dtype=bool)
    np.fill_diagonal(R, False)
    return R


def oracle_triple(points, weights, r2, near: bool = False, eps=0):
    """Maximum-weight pairwise-related triple as (weight, indices), or None."""
    n = len(points)
    _limit(n <= TRIPLE_LIMIT, f"triple oracle needs n <= {TRIPLE_LIMIT}")
    if n < 3:
        return None
    R = relation_matrix(points, r2, near, eps)
    ints, den = _integer_weights(weights)
    if ints is not None:
        bw, i, j, k = _triple_scan(R, ints)
        bw = Fraction(int(bw), den)
    else:
        bw, i, j, k = _triple_scan.py_func(R, np.array([Fraction(x) for x in weights], dtype=object))
    if i < 0:
        return None
    return bw, (int(i), int(j), int(k))


def oracle_pair(points, weights, r2, near: bool = False, eps=0):
    n = len(points)
    R = relation_matrix(points, r2, near, eps)
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            if R[i, j]:
                s = Fraction(weights[i]) + Fraction(weights[j])
                if best is None or s > best[0]:
                    best = (s, (i, j))
    return best
