import math

import pytest

from udgx.cycle import build_instance
from udgx.geom import float_mode

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def regular_polygon(n, radius=1.0):
    return [(radius * math.cos(2 * math.pi * t / n), radius * math.sin(2 * math.pi * t / n))
            for t in range(n)]


def scan_ccw(inst, i, j, r2=None, strict=True):
    """First index CCW from j (inclusive) beyond the threshold from i, by plain scan."""
    r2 = inst.r2 if r2 is None else r2
    n = inst.n
    for step in range(n):
        t = (j + step) % n
        d = (inst.points[i][0] - inst.points[t][0]) ** 2 + (inst.points[i][1] - inst.points[t][1]) ** 2
        if (d > r2) if strict else (d >= r2):
            return t
    return None


def scan_cw(inst, i, j, r2=None, strict=True):
    r2 = inst.r2 if r2 is None else r2
    n = inst.n
    for step in range(n):
        t = (j - step) % n
        d = (inst.points[i][0] - inst.points[t][0]) ** 2 + (inst.points[i][1] - inst.points[t][1]) ** 2
        if (d > r2) if strict else (d >= r2):
            return t
    return None


@pytest.fixture
def square():
    return build_instance(SQUARE, [1, 1, 1, 1], r=1)


@pytest.fixture
def pentagon():
    return build_instance(regular_polygon(5), r=1.0, mode=float_mode())


@pytest.fixture
def small_pentagon():
    return build_instance(regular_polygon(5, 0.4), r=1.0, mode=float_mode())
