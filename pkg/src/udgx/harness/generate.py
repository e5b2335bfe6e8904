"""Random instances on a dyadic grid.

Coordinates are integers scaled by a power of two and bounded by 2**22 in
grid units, so every squared distance (< 2**47 units) is exact in float64.
That lets float-mode runs with ``eps = 0`` agree bit-for-bit with rational
arithmetic on the distance predicates.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from ..cycle import ConvexInstance, build_instance
from ..geom import EXACT, PredicateMode
from ..triples import WeightedCloud, build_cloud

GRID_BITS = 22


def _half(v):
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _chain_vectors(vals, rng):
    lo, hi = vals[0], vals[-1]
    side = rng.random(len(vals) - 2) < 0.5
    a_last = b_last = lo
    out = []
    for v, s in zip(vals[1:-1], side):
        if s:
            out.append(v - a_last)
            a_last = v
        else:
            out.append(b_last - v)
            b_last = v
    out.append(hi - a_last)
    out.append(b_last - hi)
    return out


def _distinct_ints(rng, count, span):
    vals = set()
    while len(vals) < count:
        vals.update(int(v) for v in rng.integers(0, span, size=count - len(vals)))
    return sorted(vals)


def valtr_polygon(n: int, rng: np.random.Generator, span: int = 1 << GRID_BITS) -> list:
    """Integer vertices of a random strictly convex polygon, CCW, exactly ``n`` of them."""
    if n < 3:
        raise ValueError("a convex polygon needs n >= 3")
    m = n
    while True:
        xs = _distinct_ints(rng, m, span)
        ys = _distinct_ints(rng, m, span)
        vx = _chain_vectors(xs, rng)
        vy = _chain_vectors(ys, rng)
        rng.shuffle(vy)
        vecs = sorted(zip(vx, vy), key=cmp_to_key(_angle_cmp))
        merged = []
        for v in vecs:
            # parallel same-direction edges would leave a collinear vertex
            if merged and _angle_cmp(merged[-1], v) == 0:
                merged[-1] = (merged[-1][0] + v[0], merged[-1][1] + v[1])
            else:
                merged.append(v)
        if len(merged) < n:
            m += n - len(merged) + 1
            continue
        pts = []
        x = y = 0
        for dx, dy in merged:
            pts.append((x, y))
            x += dx
            y += dy
        if len(pts) > n:
            keep = np.sort(rng.choice(len(pts), size=n, replace=False))
            pts = [pts[t] for t in keep]
        # lowest-then-leftmost vertex first, for a canonical start
        k = min(range(n), key=lambda t: (pts[t][1], pts[t][0]))
        pts = pts[k:] + pts[:k]
        return pts


def _snap(int_pts, target_extent):
    xs = [p[0] for p in int_pts]
    ys = [p[1] for p in int_pts]
    cx = (min(xs) + max(xs)) // 2
    cy = (min(ys) + max(ys)) // 2
    extent = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    shift = round(math.log2(extent / target_extent)) if target_extent > 0 else 0
    scale = Fraction(2) ** -shift
    return [(Fraction(x - cx) * scale, Fraction(y - cy) * scale) for x, y in int_pts]


def _mode_values(values, mode: PredicateMode):
    return [v if mode.exact else float(v) for v in values]


def gen_convex(n: int, seed: int, scale: float = 4.0, mode: PredicateMode = EXACT,
               r=1, weights: str = "positive", wmax: int = 100) -> ConvexInstance:
    """Random convex instance whose diameter is roughly ``scale * r``.

    ``weights`` is "positive" (integers 1..wmax), "unit" or "mixed".  For
    n < 3 the first n vertices of a random triangle are returned.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    r = Fraction(r)
    ipts = valtr_polygon(max(n, 3), rng)[:n]
    pts = _snap(ipts, float(scale * r))
    w = _weights(rng, n, weights, wmax)
    conv = (lambda v: v) if mode.exact else float
    return build_instance([(conv(x), conv(y)) for x, y in pts], [conv(v) for v in w],
                          mode=mode, r2=conv(r * r))


def _weights(rng, n, kind, wmax):
    if kind == "unit":
        return [Fraction(1)] * n
    if kind == "positive":
        return [Fraction(int(v)) for v in rng.integers(1, wmax + 1, size=n)]
    if kind == "mixed":
        return [Fraction(int(v)) for v in rng.integers(-wmax, wmax + 1, size=n)]
    raise ValueError(f"unknown weight kind {kind!r}")


def gen_cloud(n: int, seed: int, density: float = 6.0, mode: PredicateMode = EXACT,
              r=1, weights: str = "mixed", wmax: int = 100) -> WeightedCloud:
    """Distinct points uniform in a square sized so the mean r-disk degree is about ``density``."""
    rng = np.random.default_rng(seed)
    r = Fraction(r)
    side = math.sqrt(math.pi * n / max(density, 1e-9)) * float(r)
    span = 1 << GRID_BITS
    shift = math.ceil(math.log2(max(side, 1e-300) / span))
    unit = Fraction(2) ** shift
    cells = max(int(side / float(unit)), 2)
    seen = set()
    pts = []
    while len(pts) < n:
        xy = rng.integers(0, cells, size=(n - len(pts), 2))
        for x, y in xy:
            key = (int(x), int(y))
            if key not in seen:
                seen.add(key)
                pts.append(key)
    half = cells // 2
    coords = [(Fraction(x - half) * unit, Fraction(y - half) * unit) for x, y in pts]
    w = _weights(rng, n, weights, wmax)
    conv = (lambda v: v) if mode.exact else float
    return build_cloud([(conv(x), conv(y)) for x, y in coords], [conv(v) for v in w],
                       mode=mode, r2=conv(r * r))
