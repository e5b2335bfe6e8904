"""Planar primitives shared by every solver.

Every distance test in the package compares squared distances against r**2,
so no square roots are taken on the decision path.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence

from .errors import DegenerateCircle

DEFAULT_EPS = 1e-9


class Point(NamedTuple):
    x: object
    y: object


class Orientation(enum.Enum):
    CCW = 1
    CW = -1
    COLLINEAR = 0


@dataclass(frozen=True)
class PredicateMode:
    """How coordinates are stored and how near-ties are judged.

    ``kind`` is ``"exact"`` (rational arithmetic, eps forced to 0) or
    ``"float"`` (IEEE doubles, differences within ``eps`` count as ties).
    """

    kind: str = "exact"
    eps: float = 0.0

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown predicate mode {self.kind!r}")
        if self.eps < 0:
            raise ValueError("eps must be non-negative")
        if self.kind == "exact" and self.eps != 0:
            object.__setattr__(self, "eps", 0.0)

    @property
    def exact(self) -> bool:
        return self.kind == "exact"

    def num(self, value):
        """Coerce a user value into this mode's number type."""
        if self.exact:
            if isinstance(value, str):
                return Fraction(value.strip())
            if isinstance(value, Rational):
                return Fraction(value)
            return Fraction(float(value))
        return float(Fraction(value)) if isinstance(value, str) else float(value)

    def sign(self, value) -> int:
        """Sign of ``value`` with the eps band collapsed to zero."""
        eps = self.eps
        if value > eps:
            return 1
        if value < -eps:
            return -1
        return 0


EXACT = PredicateMode("exact")


def float_mode(eps: float = DEFAULT_EPS) -> PredicateMode:
    return PredicateMode("float", eps)


def squared_distance(p, q):
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def cross(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a, b, c, mode: PredicateMode = EXACT) -> Orientation:
    s = mode.sign(cross(a, b, c))
    return Orientation(s)


def _div(a, b):
    # keep rationals rational; ints would otherwise turn into floats
    if isinstance(a, Rational) and isinstance(b, Rational):
        return Fraction(a) / Fraction(b)
    return a / b


def circumcenter(a, b, c) -> Point:
    d = 2 * cross(a, b, c)
    if d == 0:
        raise DegenerateCircle(f"collinear or coincident points {a}, {b}, {c}")
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = _div(cy * b2 - by * c2, d)
    uy = _div(bx * c2 - cx * b2, d)
    return Point(a[0] + ux, a[1] + uy)


def pencil_param(a, b, q):
    """Position of the circle through ``a``, ``b``, ``q`` within its pencil.

    Returns the signed offset of the circumcenter from the midpoint of ``ab``
    along the bisector, measured in units of ``|ab|`` and positive toward the
    right of the directed line a->b.  The part of the disk lying right of the
    chord grows strictly with this value.
    """
    vx, vy = b[0] - a[0], b[1] - a[1]
    ux, uy = 2 * q[0] - a[0] - b[0], 2 * q[1] - a[1] - b[1]
    den = 4 * (vy * ux - vx * uy)
    if den == 0:
        raise DegenerateCircle(f"{q} is collinear with {a}, {b}")
    return _div(ux * ux + uy * uy - vx * vx - vy * vy, den)


def outside_disk(a, b, c, q, mode: PredicateMode = EXACT) -> bool:
    """True iff ``q`` lies strictly outside the disk through ``a``, ``b``, ``c``."""
    o = circumcenter(a, b, c)
    return mode.sign(squared_distance(o, q) - squared_distance(o, a)) > 0


def validate_convex_ccw(points: Sequence, mode: PredicateMode = EXACT) -> bool:
    n = len(points)
    if n < 3:
        return False
    if len({(p[0], p[1]) for p in points}) != n:
        return False
    for i in range(n):
        if orientation(points[i - 2], points[i - 1], points[i], mode) is not Orientation.CCW:
            return False
    # left turns everywhere still allow winding around twice, so also require
    # the edge directions to go up and down exactly once each
    signs = []
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        dy = q[1] - p[1]
        if dy == 0:
            signs.append(1 if q[0] < p[0] else -1)  # leftward runs along the top
        else:
            signs.append(1 if dy > 0 else -1)
    changes = sum(signs[i] != signs[i - 1] for i in range(n))
    return changes == 2
