"""Discrete k-center by binary search over the pairwise distance ladder."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cycle import ConvexInstance, exact_sqrt
from .domset import cover_decision
from .errors import BadK


class DistanceLadder(list):
    """Sorted distinct squared pairwise distances, starting with 0."""

    def radius(self, t: int):
        return exact_sqrt(self[t])


def pairwise_distance_ladder(inst: ConvexInstance) -> DistanceLadder:
    n = inst.n
    if not inst.mode.exact:
        dx = inst.xs[:, None] - inst.xs[None, :]
        dy = inst.ys[:, None] - inst.ys[None, :]
        d2 = (dx * dx + dy * dy)[np.triu_indices(n, 1)]
        return DistanceLadder([0.0] + np.unique(d2[d2 > 0]).tolist())
    pts = inst.points
    vals = {(p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 for a, p in enumerate(pts) for q in pts[a + 1:]}
    vals.add(inst.num(0))
    return DistanceLadder(sorted(vals))


@dataclass(frozen=True)
class KCenterSolution:
    r_star: object
    r2_star: object
    centers: tuple


def covering_radius2(inst: ConvexInstance, centers) -> object:
    """Largest squared distance from a point to its nearest centre."""
    pts = inst.points
    return max(min((p[0] - pts[c][0]) ** 2 + (p[1] - pts[c][1]) ** 2 for c in centers) for p in pts)


def solve_kcenter(inst: ConvexInstance, k: int, ladder=None) -> KCenterSolution:
    """At most ``k`` centres minimising the largest point-to-centre distance."""
    n = inst.n
    if k < 1:
        raise BadK("k must be at least 1")
    if k >= n:
        zero = inst.num(0)
        return KCenterSolution(zero, zero, tuple(range(n)))
    ladder = pairwise_distance_ladder(inst) if ladder is None else ladder
    lo, hi = 0, len(ladder) - 1  # the diameter always admits a single centre
    while lo < hi:
        mid = (lo + hi) // 2
        if cover_decision(inst, k, r2=ladder[mid]) is None:
            lo = mid + 1
        else:
            hi = mid
    best = cover_decision(inst, k, r2=ladder[lo])
    r2 = ladder[lo]
    assert covering_radius2(inst, best) - r2 <= inst.mode.eps
    return KCenterSolution(ladder.radius(lo), r2, best)
