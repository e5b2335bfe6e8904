"""Cyclic convex point lists, sublists and first-far-neighbour queries.

Points are indexed from 0 in counter-clockwise order.  ``P[i, j]`` below is
the inclusive run from ``i`` to ``j`` going counter-clockwise, wrapping past
the last index when ``i > j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import _accel
from .errors import BadWeights, DuplicatePoint, NonPositiveWeight, NotConvex
from .geom import EXACT, Point, PredicateMode, validate_convex_ccw


class Sublist(NamedTuple):
    """A CCW run given by its first index and its length (0 = empty, n = whole cycle)."""

    start: int
    length: int

    @classmethod
    def closed(cls, i: int, j: int, n: int) -> "Sublist":
        return cls(i, (j - i) % n + 1)

    @classmethod
    def open(cls, i: int, j: int, n: int) -> "Sublist":
        """The points strictly between ``i`` and ``j`` going CCW; ``i == j`` gives all but ``i``."""
        length = (j - i - 1) % n
        return cls((i + 1) % n, length) if length else cls(0, 0)

    @classmethod
    def full(cls, n: int) -> "Sublist":
        return cls(0, n)

    @property
    def empty(self) -> bool:
        return self.length == 0

    def end(self, n: int) -> int:
        return (self.start + self.length - 1) % n

    def is_full(self, n: int) -> bool:
        return self.length >= n

    def indices(self, n: int) -> list[int]:
        return [(self.start + t) % n for t in range(self.length)]


def sublist_contains(s: Sublist, t: int, n: int) -> bool:
    return s.length > 0 and (t - s.start) % n < s.length


def sublist_covers(outer: Sublist, inner: Sublist, n: int) -> bool:
    """Whether every index of ``inner`` lies in ``outer``."""
    if inner.length == 0:
        return True
    if outer.length >= n:
        return True
    return (inner.start - outer.start) % n + inner.length <= outer.length


def _check_finite(values):
    for v in values:
        if isinstance(v, float) and not math.isfinite(v):
            raise ValueError(f"non-finite coordinate {v!r}")


@dataclass(frozen=True, eq=False)
class ConvexInstance:
    """Validated convex instance.  The radius is stored squared so that any
    pairwise distance can serve as a radius without leaving exact arithmetic."""

    points: tuple
    weights: tuple
    r2: object
    mode: PredicateMode = field(default=EXACT)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self):
        return exact_sqrt(self.r2)

    @cached_property
    def xs(self) -> np.ndarray:
        return _column(self.points, 0, self.mode)

    @cached_property
    def ys(self) -> np.ndarray:
        return _column(self.points, 1, self.mode)

    @cached_property
    def w(self) -> np.ndarray:
        dtype = object if self.mode.exact else np.float64
        return np.array(self.weights, dtype=dtype)

    @property
    def kernels(self):
        return _accel.kernels_for(self.xs)

    @cached_property
    def box_tree(self):
        return self.kernels.box_tree(self.xs, self.ys)

    def num(self, value):
        return self.mode.num(value)

    def with_weights(self, weights) -> "ConvexInstance":
        return build_instance(self.points, weights, mode=self.mode, r2=self.r2)

    def with_r2(self, r2) -> "ConvexInstance":
        inst = ConvexInstance(self.points, self.weights, self.num(r2), self.mode)
        # geometry is unchanged, so the cached arrays carry over
        for name in ("xs", "ys", "w", "box_tree"):
            if name in self.__dict__:
                inst.__dict__[name] = self.__dict__[name]
        return inst

    def with_r(self, r) -> "ConvexInstance":
        r = self.num(r)
        return self.with_r2(r * r)

    def index(self, strict: bool = True, r2=None) -> "FarNeighborIndex":
        return FarNeighborIndex(self, self.r2 if r2 is None else self.num(r2), strict)

    def require_positive_weights(self):
        if any(w <= 0 for w in self.weights):
            raise NonPositiveWeight("all weights must be positive")


def exact_sqrt(v):
    """Square root, kept rational when ``v`` is the square of a rational."""
    if isinstance(v, Fraction) and v >= 0:
        p, q = math.isqrt(v.numerator), math.isqrt(v.denominator)
        if p * p == v.numerator and q * q == v.denominator:
            return Fraction(p, q)
    return math.sqrt(v)


def _column(points, k, mode):
    if mode.exact:
        return np.array([p[k] for p in points], dtype=object)
    return np.array([p[k] for p in points], dtype=np.float64)


def build_instance(points: Sequence, weights: Optional[Sequence] = None, r=1,
                   mode: PredicateMode = EXACT, *, r2=None) -> ConvexInstance:
    """Validate and freeze a convex instance.

    ``weights`` defaults to all ones.  Pass ``r2`` instead of ``r`` to give the
    squared radius directly.  Raises NotConvex, DuplicatePoint or BadWeights.
    """
    pts = tuple(Point(mode.num(p[0]), mode.num(p[1])) for p in points)
    if not pts:
        raise BadWeights("an instance needs at least one point")
    if weights is None:
        weights = [1] * len(pts)
    if len(weights) != len(pts):
        raise BadWeights(f"{len(weights)} weights for {len(pts)} points")
    ws = tuple(mode.num(w) for w in weights)
    if r2 is None:
        rv = mode.num(r)
        if not rv > 0:
            raise ValueError("r must be positive")
        r2 = rv * rv
    else:
        r2 = mode.num(r2)
    if not r2 > 0:
        raise ValueError("r must be positive")
    if not mode.exact:
        _check_finite([c for p in pts for c in p])
        _check_finite(ws)
        _check_finite([r2])
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("points must be distinct")
    if len(pts) >= 3 and not validate_convex_ccw(pts, mode):
        raise NotConvex("points are not in strictly convex counter-clockwise order")
    return ConvexInstance(pts, ws, r2, mode)


class FarNeighborIndex:
    """Answers "first point CCW (or CW) from ``j`` that is far from ``i``".

    A point is far from ``i`` when its distance exceeds r (``strict``) or is
    at least r (not ``strict``).  Queries descend a bounding-box tree over
    the index order and return ``None`` when no point qualifies.
    """

    def __init__(self, inst: ConvexInstance, r2, strict: bool = True):
        self.inst = inst
        self.r2 = r2
        self.strict = strict
        self._k = inst.kernels
        self._tree = inst.box_tree
        self._eps = inst.mode.eps

    def _args(self):
        return (*self._tree, self.r2, self._eps, self.strict)

    def first_far_ccw(self, i: int, j: int) -> Optional[int]:
        t = self._k.far_ccw(self.inst.xs, self.inst.ys, i, j, *self._args())
        return None if t < 0 else int(t)

    def first_far_cw(self, i: int, j: int) -> Optional[int]:
        t = self._k.far_cw(self.inst.xs, self.inst.ys, i, j, *self._args())
        return None if t < 0 else int(t)

    def self_pairs(self):
        """Arrays (a, b) of first far points CCW and CW from each point itself; -1 for none."""
        return self._k.far_self(self.inst.xs, self.inst.ys, *self._args())


def build_far_index(inst: ConvexInstance, r=None, strict: bool = True) -> FarNeighborIndex:
    return inst.index(strict, None if r is None else inst.num(r) ** 2)


def first_far_ccw(idx: FarNeighborIndex, i: int, j: int) -> Optional[int]:
    return idx.first_far_ccw(i, j)


def first_far_cw(idx: FarNeighborIndex, i: int, j: int) -> Optional[int]:
    return idx.first_far_cw(i, j)
