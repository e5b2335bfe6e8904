"""Independent sets of the r-disk graph for points in convex position.

``solve_mwis`` runs the chord DP.  For an ordered pair (i, j) with p_i, p_j
far apart, f(i, j, k) is the best weight obtainable from points strictly
between them (CCW from i to j) that lie far from both ends and outside the
circle through p_i, p_j, p_k.  Every such circle belongs to the pencil through
p_i and p_j, and the pencils nest on the right of the chord.  Sorting the
candidates by their own pencil position therefore turns each query into a
suffix maximum.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cycle import ConvexInstance
from .errors import NotCanonical

DUMMY = None
DEFAULT_MAX_N = 300


@dataclass(frozen=True)
class MwisSolution:
    weight: object
    members: tuple


class MwisTable:
    """Per-pair pencil arrays filled by the DP, with f queries on top."""

    def __init__(self, inst: ConvexInstance, weights: np.ndarray, r2, strict: bool):
        self.inst = inst
        self.n = inst.n
        self.w = weights
        self.r2 = r2
        self.strict = strict
        self.k = inst.kernels
        self.far = self.k.far_matrix(inst.xs, inst.ys, r2, inst.mode.eps, strict)
        (self.off, self.cnt, self.kb, self.arg,
         self.pts, self._f0, _) = self.k.mwis_table(inst.xs, inst.ys, weights, self.far, weights[0], False)

    def canonical(self, i: int, j: int) -> bool:
        return i != j and bool(self.far[i, j])

    def f0(self, i: int, j: int):
        if not self.canonical(i, j):
            return -(self.w[i] + self.w[j])
        return self._f0[i * self.n + j]

    def _span(self, i, j):
        p = self.k.pair_slot(i, j, self.n)
        lo = int(self.off[p])
        return lo, lo + int(self.cnt[p])

    def suffix(self, i: int, j: int, k) -> int:
        """First array position of pair (i, j) lying outside the circle through p_k (or hi)."""
        lo, hi = self._span(i, j)
        if k is DUMMY:
            return lo
        return int(self.k.suffix_at(self.inst.xs, self.inst.ys, self.kb, self.pts, lo, hi, i, j, k))

    def f(self, i: int, j: int, k=DUMMY):
        _, hi = self._span(i, j)
        pos = self.suffix(i, j, k)
        return self.kb[pos, 1] if pos < hi else self.w[0] * 0

    def collect(self, i: int, j: int, k=DUMMY) -> list:
        """Points realising f(i, j, k), recovered through the stored argmaxes."""
        out = []
        stack = [(i, j, k)]
        while stack:
            a, b, c = stack.pop()
            _, hi = self._span(a, b)
            pos = self.suffix(a, b, c)
            if pos >= hi:
                continue
            l = int(self.arg[pos])
            out.append(l)
            stack.append((a, l, b))
            stack.append((l, b, a))
        return out


def mwis_table(inst: ConvexInstance, weights=None, r2=None, strict: bool = True) -> MwisTable:
    w = inst.w if weights is None else np.asarray(weights, dtype=inst.w.dtype)
    return MwisTable(inst, w, inst.r2 if r2 is None else inst.num(r2), strict)


def eval_f(table: MwisTable, i: int, j: int, k=DUMMY):
    """f(i, j, k); ``k = DUMMY`` lifts the circle to the whole left half-plane."""
    if not table.canonical(i, j):
        raise NotCanonical(f"({i}, {j}) is not a far pair")
    if k is not DUMMY:
        n = table.n
        if not (table.canonical(j, k) and table.canonical(k, i)) or (k - j) % n >= (i - j) % n:
            raise NotCanonical(f"({i}, {j}, {k}) is not a CCW far triple")
    return table.f(i, j, k)


def _solve(inst: ConvexInstance, weights: np.ndarray, r2, strict: bool, max_n: Optional[int]):
    n = inst.n
    if max_n is not None and n > max_n:
        raise ValueError(f"n = {n} exceeds the cap of {max_n}; pass max_n to override")
    top = max(range(n), key=lambda t: (weights[t], -t))
    best = (weights[top], (top,))
    if n <= 2:
        if n == 2 and _far(inst, 0, 1, r2, strict):
            best = (weights[0] + weights[1], (0, 1))
        return best
    table = mwis_table(inst, weights, r2, strict)
    far = table.far
    if far.any():
        vals = table._f0.reshape(n, n) + weights[:, None] + weights[None, :]
        cand = np.flatnonzero(far.ravel())
        picked = vals.ravel()[cand]
        top_pair = int(cand[int(np.argmax(picked))])
        v = picked.max()
        if v > best[0]:
            i, j = divmod(top_pair, n)
            best = (v, tuple(sorted([i, j] + table.collect(i, j))))
    return best


def _far(inst, a, b, r2, strict):
    p, q = inst.points[a], inst.points[b]
    d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 - r2
    return d > inst.mode.eps if strict else d >= -inst.mode.eps


def _check_independent(inst, members, r2, strict):
    for x in range(len(members)):
        for y in range(x + 1, len(members)):
            assert _far(inst, members[x], members[y], r2, strict), \
                f"points {members[x]} and {members[y]} are too close"


def solve_mwis(inst: ConvexInstance, *, r2=None, strict: bool = True,
               max_n: Optional[int] = DEFAULT_MAX_N) -> MwisSolution:
    """Maximum-weight set of points with pairwise distance above r (weights must be positive)."""
    inst.require_positive_weights()
    r2 = inst.r2 if r2 is None else inst.num(r2)
    weight, members = _solve(inst, inst.w, r2, strict, max_n)
    _check_independent(inst, members, r2, strict)
    total = sum((inst.weights[m] for m in members), inst.num(0))
    assert total == weight
    return MwisSolution(total, members)


def max_cardinality_far_set(inst: ConvexInstance, r=None, strict: bool = True, *, r2=None,
                            max_n: Optional[int] = DEFAULT_MAX_N) -> tuple:
    """Largest set with pairwise distances > r (``strict``) or >= r."""
    if r2 is None:
        r2 = inst.r2 if r is None else inst.num(r) ** 2
    r2 = inst.num(r2)
    ones = np.array([inst.num(1)] * inst.n, dtype=inst.w.dtype)
    _, members = _solve(inst, ones, r2, strict, max_n)
    _check_independent(inst, members, r2, strict)
    return members


def far_set_at_least(inst: ConvexInstance, k: int, r2, strict: bool = True) -> bool:
    """Whether some k points are pairwise far; the DP stops once one such set shows up."""
    n = inst.n
    if k <= 1:
        return k <= n
    r2 = inst.num(r2)
    kern = inst.kernels
    far = kern.far_matrix(inst.xs, inst.ys, r2, inst.mode.eps, strict)
    if k == 2 or not far.any():
        return k == 2 and bool(far.any())
    ones = np.array([inst.num(1)] * n, dtype=inst.w.dtype)
    *_, hit = kern.mwis_table(inst.xs, inst.ys, ones, far, inst.num(k), True)
    return bool(hit)


def triple_far_decision(inst: ConvexInstance, r=None, *, r2=None) -> Optional[tuple]:
    """Three points with pairwise distances all at least r, or None."""
    if r2 is None:
        r2 = inst.r2 if r is None else inst.num(r) ** 2
    r2 = inst.num(r2)
    if inst.n < 3:
        return None
    k = inst.kernels
    i, j, l = k.triple_decision(inst.xs, inst.ys, *inst.box_tree, r2, inst.mode.eps)
    if i < 0:
        return None
    triple = tuple(sorted((int(i), int(j), int(l))))
    assert len(set(triple)) == 3
    _check_independent(inst, triple, r2, strict=False)
    return triple
