"""Dominating sets of the r-disk graph for points in convex position.

Two solvers share one extension scheme.  Each round grows covered CCW runs
by one centre.  ``solve_weighted_bounded`` keeps every run's cheapest cover
and finds the minimum-weight dominating set with at most k centres.
``solve_unweighted`` keeps only the farthest-reaching extension per centre
and stops at the first round that covers the cycle, which gives the minimum
cardinality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from . import _accel
from .cycle import ConvexInstance, Sublist
from .errors import BadK

_ops = _accel.plain  # integer helpers; cheaper to call from Python than the jitted ones


@dataclass(frozen=True)
class DominatingSolution:
    centers: tuple
    total_weight: object


@dataclass(frozen=True)
class CandidateCover:
    run: Sublist
    budget: object
    witnesses: tuple  # sorted centre indices

    def key(self):
        return (self.budget, len(self.witnesses), self.witnesses)


def is_dominating(inst: ConvexInstance, centers, r=None) -> bool:
    """Independent check: every point lies within r of some centre."""
    if not centers:
        return False
    r2 = inst.r2 if r is None else inst.num(r) ** 2
    eps = inst.mode.eps
    pts = inst.points
    for p in pts:
        if not any(_d2(p, pts[c]) - r2 <= eps for c in centers):
            return False
    return True


def _d2(p, q):
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def _solution(inst, centers) -> DominatingSolution:
    centers = tuple(sorted(int(c) for c in centers))
    assert is_dominating(inst, centers), "solver produced a non-dominating set"
    return DominatingSolution(centers, sum((inst.weights[c] for c in centers), inst.num(0)))


def _enumerate(inst: ConvexInstance, k: int, weighted: bool) -> Optional[DominatingSolution]:
    best = None
    for size in range(1, min(k, inst.n) + 1):
        for combo in combinations(range(inst.n), size):
            if not is_dominating(inst, combo):
                continue
            key = (sum(inst.weights[c] for c in combo) if weighted else size, size, combo)
            if best is None or key < best:
                best = key
    return None if best is None else _solution(inst, best[2])


# ---------------------------------------------------------------------------
# enclosing-run queries


class EnclosingSublistIndex:
    """Static set of weighted runs answering "cheapest run containing P[x, y]".

    Runs are unrolled onto coordinates 0..2n-1 (a wrapping run becomes two
    intervals) and a dominance table holds, for every (x, y), the cheapest
    interval with start <= x and end >= y.  Build is O(n^2 + m); queries are O(1).
    """

    def __init__(self, n: int, runs, keys):
        self.n = n
        self.runs = list(runs)
        self.keys = list(keys)
        width = 2 * n
        best = [[-1] * width for _ in range(n)]
        for e, run in enumerate(self.runs):
            s, length = run
            if length >= n:
                self._offer(best, 0, width - 1, e)
                continue
            hi = s + length - 1
            self._offer(best, s, hi, e)
            if hi >= n:
                self._offer(best, 0, hi - n, e)
        for x in range(n):
            row = best[x]
            above = best[x - 1] if x else None
            for y in range(width - 1, -1, -1):
                cand = row[y]
                if y + 1 < width:
                    cand = self._pick(cand, row[y + 1])
                if above is not None:
                    cand = self._pick(cand, above[y])
                row[y] = cand
        self._best = best

    def _pick(self, e, f):
        if f < 0:
            return e
        if e < 0 or self.keys[f] < self.keys[e]:
            return f
        return e

    def _offer(self, best, x, y, e):
        best[x][y] = self._pick(best[x][y], e)

    def query(self, q: Sublist) -> int:
        """Index of the cheapest run containing ``q``, or -1."""
        return self._best[q.start][q.start + q.length - 1]


def min_weight_enclosing(idx: EnclosingSublistIndex, query: Sublist):
    e = idx.query(query)
    if e < 0:
        return None
    return Sublist(*idx.runs[e]), idx.keys[e]


class FarthestEnclosingIndex:
    """Runs containing a point that reach farthest CCW (``ccw``) or CW (``cw``)."""

    def __init__(self, n: int, runs):
        self.n = n
        self.runs = list(runs)
        starts = np.array([r[0] for r in self.runs], dtype=np.int64)
        lens = np.array([r[1] for r in self.runs], dtype=np.int64)
        self._t = _ops.farthest_tables(starts, lens, len(self.runs), n)

    def ccw(self, t: int) -> int:
        endmax, endarg, _, _ = self._t
        return int(endarg[t]) if endmax[t] >= t else -1

    def cw(self, t: int) -> int:
        _, _, stmin, starg = self._t
        u = t + self.n
        return int(starg[u]) if stmin[u] <= u else -1


def farthest_ccw_enclosing(idx: FarthestEnclosingIndex, t: int) -> Optional[Sublist]:
    e = idx.ccw(t)
    return None if e < 0 else Sublist(*idx.runs[e])


def farthest_cw_enclosing(idx: FarthestEnclosingIndex, t: int) -> Optional[Sublist]:
    e = idx.cw(t)
    return None if e < 0 else Sublist(*idx.runs[e])


# ---------------------------------------------------------------------------
# weighted


def _check_k(k, n):
    if not 1 <= k <= n:
        raise BadK(f"k must lie in [1, {n}], got {k}")


def far_tables(inst: ConvexInstance, r2=None, strict: bool = True):
    """All first-far indices: ``ccw[i][j]`` and ``cw[i][j]``, with -1 for none.

    Filled by one cyclic sweep per row from the far relation, so O(n^2) in total.
    """
    n = inst.n
    r2 = inst.r2 if r2 is None else r2
    eps = inst.mode.eps
    pts = inst.points
    ccw = [[-1] * n for _ in range(n)]
    cw = [[-1] * n for _ in range(n)]
    for i in range(n):
        d = [_d2(pts[i], pts[j]) - r2 for j in range(n)]
        far = [v > eps for v in d] if strict else [v >= -eps for v in d]
        if not any(far):
            continue
        row = ccw[i]
        nxt = -1
        for j in range(2 * n - 1, -1, -1):
            if far[j % n]:
                nxt = j % n
            row[j % n] = nxt
        row = cw[i]
        prv = -1
        for j in range(2 * n):
            if far[j % n]:
                prv = j % n
            row[j % n] = prv
    return ccw, cw


def _weighted_rounds(inst: ConvexInstance) -> list:
    """Cheapest whole-cycle cover known after each round, computed lazily and cached.

    Rounds only ever add centres, so the entry for round t answers every bound k >= t.
    """
    cache = inst.__dict__.get("_weighted_rounds")
    if cache is None:
        cache = inst.__dict__["_weighted_rounds"] = ([], _rounds(inst))
    return cache


def _rounds(inst: ConvexInstance):
    n = inst.n
    ccw, cw = far_tables(inst)
    a0 = [ccw[i][i] for i in range(n)]
    b0 = [cw[i][i] for i in range(n)]
    w = inst.weights

    best = None
    frontier: dict[tuple, CandidateCover] = {}
    for i in range(n):
        if a0[i] < 0:
            cand = CandidateCover(Sublist.full(n), w[i], (i,))
            if best is None or cand.key() < best.key():
                best = cand
            continue
        run = ((b0[i] + 1) % n, _ops.near_run(a0[i], b0[i], n))
        _offer(frontier, CandidateCover(Sublist(*run), w[i], (i,)))
    yield best

    while True:
        if not frontier:
            yield best
            continue
        covers = list(frontier.values())
        table = EnclosingSublistIndex(n, [c.run for c in covers], [c.key() for c in covers])._best
        grown: dict[tuple, CandidateCover] = {}
        for i in range(n):
            a, b = a0[i], b0[i]
            if a < 0:
                continue
            seen_ccw = set()
            seen_cw = set()
            for j in range(n):
                # queries P[a, j] and P[j, b], unrolled as in EnclosingSublistIndex.query
                e = table[a][a + (j - a) % n]
                if e >= 0 and e not in seen_ccw:
                    seen_ccw.add(e)
                    s, length = covers[e].run
                    a2 = ccw[i][(s + length) % n]
                    run = _ops.extend_ccw(a, b, s, length, a2, n)
                    _offer(grown, _grow(covers[e], run, i, w[i]))
                e = table[j][j + (b - j) % n]
                if e >= 0 and e not in seen_cw:
                    seen_cw.add(e)
                    s, length = covers[e].run
                    b2 = cw[i][(s - 1) % n]
                    run = _ops.extend_cw(a, b, s, length, b2, n)
                    _offer(grown, _grow(covers[e], run, i, w[i]))
        frontier = {}
        for key, cand in grown.items():
            if cand.run.length >= n:
                if best is None or cand.key() < best.key():
                    best = cand
            else:
                frontier[key] = cand
        yield best


def solve_weighted_bounded(inst: ConvexInstance, k: int) -> Optional[DominatingSolution]:
    """Minimum-weight dominating set with at most ``k`` centres, or None if none exists."""
    inst.require_positive_weights()
    n = inst.n
    _check_k(k, n)
    if n <= 2:
        return _enumerate(inst, k, weighted=True)
    found, gen = _weighted_rounds(inst)
    while len(found) < k:
        found.append(next(gen))
    best = found[k - 1]
    if best is None:
        return None
    sol = _solution(inst, best.witnesses)
    assert sol.total_weight <= best.budget
    return sol


def _grow(cover: CandidateCover, run, i, wi) -> CandidateCover:
    wit = cover.witnesses if i in cover.witnesses else tuple(sorted(cover.witnesses + (i,)))
    return CandidateCover(Sublist(int(run[0]), int(run[1])), cover.budget + wi, wit)


def _offer(table, cand: CandidateCover):
    key = tuple(cand.run)
    old = table.get(key)
    if old is None or cand.key() < old.key():
        table[key] = cand


def solve_weighted(inst: ConvexInstance) -> DominatingSolution:
    sol = solve_weighted_bounded(inst, inst.n)
    assert sol is not None  # the whole point set always dominates
    return sol


# ---------------------------------------------------------------------------
# unweighted


def _greedy(inst: ConvexInstance, kmax: int):
    n = inst.n
    if n <= 2:
        sol = _enumerate(inst, kmax, weighted=False)
        return None if sol is None else sol.centers
    a0, b0 = inst.index(strict=True).self_pairs()
    lone = np.flatnonzero(a0 < 0)
    if lone.size:
        return (int(lone[0]),)
    k = inst.kernels
    t, e, par, who = k.greedy_cover(inst.xs, inst.ys, a0, b0, min(kmax, n), *inst.box_tree,
                                    inst.r2, inst.mode.eps)
    if t < 0:
        return None
    centers = []
    while t >= 0:
        centers.append(int(who[t, e]))
        e = int(par[t, e])
        t -= 1
    return tuple(centers)


def solve_unweighted(inst: ConvexInstance) -> DominatingSolution:
    """A minimum-cardinality dominating set; weights are ignored."""
    centers = _greedy(inst, inst.n)
    centers = tuple(sorted(set(centers)))
    assert is_dominating(inst, centers)
    return DominatingSolution(centers, len(centers))


def cover_decision(inst: ConvexInstance, k: int, r=None, *, r2=None) -> Optional[tuple]:
    """At most ``k`` centres covering every point within distance ``r``, or None.

    The radius may be given squared through ``r2``.
    """
    if k < 1:
        raise BadK("k must be at least 1")
    r2 = inst.num(r) ** 2 if r2 is None else inst.num(r2)
    if r2 < 0:
        raise ValueError("r must be non-negative")
    probe = inst.with_r2(r2)
    centers = _greedy(probe, k)
    if centers is None:
        return None
    centers = tuple(sorted(set(centers)))
    assert len(centers) <= k and is_dominating(probe, centers)
    return centers
