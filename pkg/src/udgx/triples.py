"""Heaviest far (or near) triples and pairs in arbitrary point sets.

A quadtree over the points carries, at every cell, the circles of radius r
that cross it.  When a child cell falls entirely outside (or inside) one of
its parent's circles, that circle's centre joins the child's attached set
``B``.  Every ordered pair (a, b) in the chosen relation then appears in
exactly one node with a in ``A`` and b in ``B``.  Walking each node's
ancestors finds the best third point.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from . import _accel
from .errors import BadWeights, DepthCapExceededWithDuplicates, DuplicatePoint
from .geom import EXACT, Point, PredicateMode

DEPTH_CAP = 64


class Relation(enum.Enum):
    FAR = "far"    # distance > r: independent pairs
    NEAR = "near"  # distance <= r: adjacent pairs


def _as_relation(mode) -> Relation:
    return mode if isinstance(mode, Relation) else Relation(str(mode).lower())


@dataclass(frozen=True, eq=False)
class WeightedCloud:
    points: tuple
    weights: tuple
    r2: object
    mode: PredicateMode = field(default=EXACT)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self):
        from .cycle import exact_sqrt
        return exact_sqrt(self.r2)

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.points], dtype=self._dtype)

    @cached_property
    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.points], dtype=self._dtype)

    @cached_property
    def w(self) -> np.ndarray:
        return np.array(self.weights, dtype=self._dtype)

    @property
    def _dtype(self):
        return object if self.mode.exact else np.float64

    @property
    def kernels(self):
        return _accel.kernels_for(self.xs)

    def related(self, a: int, b: int, rel: Relation) -> bool:
        p, q = self.points[a], self.points[b]
        d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 - self.r2
        return d <= self.mode.eps if rel is Relation.NEAR else d > self.mode.eps

    def negated(self) -> "WeightedCloud":
        out = WeightedCloud(self.points, tuple(-w for w in self.weights), self.r2, self.mode)
        for name in ("xs", "ys"):
            if name in self.__dict__:
                out.__dict__[name] = self.__dict__[name]
        return out


def build_cloud(points: Sequence, weights: Optional[Sequence] = None, r=1,
                mode: PredicateMode = EXACT, *, r2=None) -> WeightedCloud:
    pts = tuple(Point(mode.num(p[0]), mode.num(p[1])) for p in points)
    if weights is None:
        weights = [1] * len(pts)
    if len(weights) != len(pts):
        raise BadWeights(f"{len(weights)} weights for {len(pts)} points")
    ws = tuple(mode.num(w) for w in weights)
    r2 = mode.num(r) ** 2 if r2 is None else mode.num(r2)
    if not r2 > 0:
        raise ValueError("r must be positive")
    if not mode.exact:
        vals = [c for p in pts for c in p] + list(ws) + [r2]
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("non-finite input")
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("points must be distinct")
    return WeightedCloud(pts, ws, r2, mode)


@dataclass(frozen=True)
class TripleSolution:
    indices: tuple
    total_weight: object


@dataclass
class PartitionNode:
    parent: int
    depth: int
    cell: Optional[tuple]  # (x0, y0, side); None for the singleton children of a leaf
    A: np.ndarray
    B: np.ndarray
    conflict: np.ndarray
    children: list = field(default_factory=list)


@dataclass
class BicliquePartition:
    mode: Relation
    nodes: list  # parents precede children; nodes[0] is the root

    def arrays(self):
        """(parent, top3, bptr, bidx) as consumed by the search kernel."""
        m = len(self.nodes)
        parent = np.array([nd.parent for nd in self.nodes], dtype=np.int64)
        top3 = np.full((m, 3), -1, dtype=np.int64)
        bptr = np.zeros(m + 1, dtype=np.int64)
        for t, nd in enumerate(self.nodes):
            head = nd.A[:3]
            top3[t, :len(head)] = head
            bptr[t + 1] = bptr[t] + len(nd.B)
        bidx = np.concatenate([nd.B for nd in self.nodes]).astype(np.int64) if m else np.zeros(0, np.int64)
        return parent, top3, bptr, bidx

    def pair_counts(self, n: int) -> np.ndarray:
        """How many nodes hold each ordered pair (a in A, b in B)."""
        counts = np.zeros((n, n), dtype=np.int64)
        for nd in self.nodes:
            if len(nd.A) and len(nd.B):
                counts[np.ix_(nd.A, nd.B)] += 1
        return counts

    def check_structure(self) -> None:
        """Assert the tree and conflict-list invariants at every node."""
        for t, nd in enumerate(self.nodes):
            if not nd.children:
                continue
            parts = np.concatenate([self.nodes[c].A for c in nd.children])
            assert len(parts) == len(nd.A) and set(parts.tolist()) == set(nd.A.tolist()), \
                f"children of node {t} do not partition it"
            own = set(nd.conflict.tolist())
            for c in nd.children:
                assert set(self.nodes[c].conflict.tolist()) <= own, \
                    f"conflict list of node {c} is not inherited from node {t}"
                assert set(self.nodes[c].B.tolist()) <= own, \
                    f"attached set of node {c} does not come from node {t}'s conflicts"
            if self.mode is Relation.FAR:
                assert not set(nd.B.tolist()) & set(nd.A.tolist())


def _weight_order(idx: np.ndarray, w: np.ndarray) -> np.ndarray:
    if w.dtype == object:
        return np.array(sorted(idx.tolist(), key=lambda t: (-w[t], t)), dtype=np.int64)
    return idx[np.lexsort((idx, -w[idx]))]


def _classify(cloud: WeightedCloud, circ: np.ndarray, x0, y0, x1, y1):
    """(outside, inside) masks of the circles about ``circ`` against a closed box."""
    cx = cloud.xs[circ]
    cy = cloud.ys[circ]
    zero = cx * 0
    dx = np.maximum(np.maximum(x0 - cx, cx - x1), zero)
    dy = np.maximum(np.maximum(y0 - cy, cy - y1), zero)
    lo = dx * dx + dy * dy - cloud.r2
    fx = np.maximum(cx - x0, x1 - cx)
    fy = np.maximum(cy - y0, y1 - cy)
    hi = fx * fx + fy * fy - cloud.r2
    eps = cloud.mode.eps
    return (lo > eps).astype(bool), (hi <= eps).astype(bool)


def build_partition(cloud: WeightedCloud, mode=Relation.FAR, depth_cap: int = DEPTH_CAP) -> BicliquePartition:
    rel = _as_relation(mode)
    n = cloud.n
    xs, ys = cloud.xs, cloud.ys
    order = _weight_order(np.arange(n, dtype=np.int64), cloud.w)
    if n == 0:
        return BicliquePartition(rel, [])
    x0, y0 = min(xs), min(ys)
    side = max(max(xs) - x0, max(ys) - y0)
    # doubling keeps the largest coordinates strictly inside the half-open square
    side = side * 2 if side > 0 else side + 1

    out, inside = _classify(cloud, order, x0, y0, x0 + side, y0 + side)
    keep = inside if rel is Relation.NEAR else out
    root = PartitionNode(-1, 0, (x0, y0, side), order, order[keep], order[~(out | inside)])
    nodes = [root]
    t = 0
    while t < len(nodes):
        nd = nodes[t]
        t += 1
        if nd.cell is None:
            continue
        A, C = nd.A, nd.conflict
        if len(A) <= 1 or len(C) == 0 or nd.depth >= depth_cap:
            if len(C) == 0:
                continue
            if nd.depth >= depth_cap and len(A) > 1:
                if len({(xs[a], ys[a]) for a in A.tolist()}) < len(A):
                    raise DepthCapExceededWithDuplicates("coincident points reached the depth cap")
            for a in A.tolist():
                d = (xs[C] - xs[a]) ** 2 + (ys[C] - ys[a]) ** 2 - cloud.r2
                mask = (d <= cloud.mode.eps) if rel is Relation.NEAR else (d > cloud.mode.eps)
                nd.children.append(len(nodes))
                nodes.append(PartitionNode(t - 1, nd.depth + 1, None, np.array([a], dtype=np.int64),
                                           C[mask.astype(bool)], C[:0]))
            continue
        cx0, cy0, s = nd.cell
        h = s / 2
        mx, my = cx0 + h, cy0 + h
        right = (xs[A] >= mx).astype(bool)
        top = (ys[A] >= my).astype(bool)
        for qr, qt in ((False, False), (True, False), (False, True), (True, True)):
            sel = A[(right == qr) & (top == qt)]
            if len(sel) == 0:
                continue
            bx = mx if qr else cx0
            by = my if qt else cy0
            out, inside = _classify(cloud, C, bx, by, bx + h, by + h)
            keep = inside if rel is Relation.NEAR else out
            nd.children.append(len(nodes))
            nodes.append(PartitionNode(t - 1, nd.depth + 1, (bx, by, h), sel, C[keep], C[~(out | inside)]))
    return BicliquePartition(rel, nodes)


def best_point_vs_disk(B: Sequence[int], cloud: WeightedCloud, center, mode=Relation.FAR) -> Optional[int]:
    """Heaviest member of the weight-sorted ``B`` related to ``center`` (a point)."""
    rel = _as_relation(mode)
    eps = cloud.mode.eps
    for b in B:
        p = cloud.points[b]
        d = (p[0] - center[0]) ** 2 + (p[1] - center[1]) ** 2 - cloud.r2
        if (d <= eps) if rel is Relation.NEAR else (d > eps):
            return int(b)
    return None


def _check_triple(cloud, idx, rel):
    a, b, c = idx
    ok = len({a, b, c}) == 3 and all(cloud.related(x, y, rel) for x, y in ((a, b), (a, c), (b, c)))
    assert ok, f"solver returned an invalid triple {idx}"


def solve_triple(cloud: WeightedCloud, mode=Relation.FAR,
                 partition: Optional[BicliquePartition] = None) -> Optional[TripleSolution]:
    """Maximum-weight triple, pairwise far (FAR) or pairwise near (NEAR); None if none exists."""
    rel = _as_relation(mode)
    if cloud.n < 3:
        return None
    part = partition if partition is not None else build_partition(cloud, rel)
    parent, top3, bptr, bidx = part.arrays()
    k = cloud.kernels
    wt, a, b, c = k.triple_search(cloud.xs, cloud.ys, cloud.w, cloud.r2, cloud.mode.eps,
                                  rel is Relation.NEAR, parent, top3, bptr, bidx)
    if a < 0:
        return None
    idx = tuple(sorted((int(a), int(b), int(c))))
    _check_triple(cloud, idx, rel)
    return TripleSolution(idx, sum((cloud.weights[i] for i in idx), cloud.mode.num(0)))


def solve_pair(cloud: WeightedCloud, mode=Relation.FAR) -> Optional[TripleSolution]:
    """Maximum-weight related pair by a quadratic scan."""
    rel = _as_relation(mode)
    n = cloud.n
    best = None
    pts, ws, eps = cloud.points, cloud.weights, cloud.mode.eps
    for i in range(n):
        p = pts[i]
        for j in range(i + 1, n):
            q = pts[j]
            d = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 - cloud.r2
            if (d <= eps) if rel is Relation.NEAR else (d > eps):
                wt = ws[i] + ws[j]
                if best is None or wt > best[0]:
                    best = (wt, i, j)
    if best is None:
        return None
    return TripleSolution((best[1], best[2]), best[0])


def solve_min_variant(cloud: WeightedCloud, size: int, mode=Relation.FAR) -> Optional[TripleSolution]:
    """Minimum-weight related pair or triple, by negating every weight."""
    if size not in (2, 3):
        raise ValueError("size must be 2 or 3")
    neg = cloud.negated()
    sol = solve_triple(neg, mode) if size == 3 else solve_pair(neg, mode)
    if sol is None:
        return None
    return TripleSolution(sol.indices, -sol.total_weight)
