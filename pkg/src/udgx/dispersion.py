"""Choosing k points whose smallest pairwise distance is as large as possible."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .cycle import ConvexInstance
from .errors import BadK
from .independent import DEFAULT_MAX_N, far_set_at_least, max_cardinality_far_set, triple_far_decision
from .kcenter import pairwise_distance_ladder

INFINITE = math.inf


@dataclass(frozen=True)
class DispersionSolution:
    r_star: object
    r2_star: object
    members: tuple


def min_pairwise2(inst: ConvexInstance, members):
    pts = inst.points
    return min((pts[a][0] - pts[b][0]) ** 2 + (pts[a][1] - pts[b][1]) ** 2
               for a, b in combinations(members, 2))


def solve_dispersion(inst: ConvexInstance, k: int, ladder=None,
                     max_n: Optional[int] = DEFAULT_MAX_N) -> DispersionSolution:
    n = inst.n
    if not 1 <= k <= n:
        raise BadK(f"k must lie in [1, {n}], got {k}")
    if k == 1:
        return DispersionSolution(INFINITE, INFINITE, (0,))
    if k == 2:
        pts = inst.points
        d2, a, b = max(((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2, -i, -j)
                       for i, p in enumerate(pts) for j, q in enumerate(pts) if i < j)
        ladder = pairwise_distance_ladder(inst) if ladder is None else ladder
        return DispersionSolution(ladder.radius(len(ladder) - 1), d2, (-a, -b))
    if max_n is not None and n > max_n:
        raise ValueError(f"n = {n} exceeds the cap of {max_n}; pass max_n to override")
    ladder = pairwise_distance_ladder(inst) if ladder is None else ladder

    def enough(t):
        return far_set_at_least(inst, k, ladder[t], strict=True)

    # enough(0) holds because the points are distinct; the diameter never admits two
    lo, hi = 0, len(ladder) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if enough(mid):
            lo = mid
        else:
            hi = mid
    r2 = ladder[hi]
    found = max_cardinality_far_set(inst, r2=r2, strict=False, max_n=max_n)
    assert len(found) >= k
    members = tuple(found[:k])
    assert min_pairwise2(inst, members) == r2 or not inst.mode.exact
    return DispersionSolution(ladder.radius(hi), r2, members)


def solve_dispersion3(inst: ConvexInstance, ladder=None) -> DispersionSolution:
    if inst.n < 3:
        raise BadK("need at least three points")
    ladder = pairwise_distance_ladder(inst) if ladder is None else ladder
    lo, hi = 0, len(ladder)  # decision holds at ladder[lo], fails at ladder[hi] (or past the end)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if triple_far_decision(inst, r2=ladder[mid]) is not None:
            lo = mid
        else:
            hi = mid
    r2 = ladder[lo]
    triple = triple_far_decision(inst, r2=r2)
    assert triple is not None
    assert min_pairwise2(inst, triple) - r2 >= -inst.mode.eps
    return DispersionSolution(ladder.radius(lo), r2, triple)
