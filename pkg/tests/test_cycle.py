import random

import pytest

from udgx.cycle import (
    Sublist,
    build_far_index,
    build_instance,
    first_far_ccw,
    first_far_cw,
    sublist_contains,
    sublist_covers,
)
from udgx.errors import BadWeights, DuplicatePoint, NotConvex
from udgx.geom import float_mode
from udgx.harness.generate import gen_convex
from udgx.kcenter import pairwise_distance_ladder

from conftest import SQUARE, scan_ccw, scan_cw


def test_build_square(square):
    assert square.n == 4
    assert square.r == 1


def test_build_rejects_clockwise():
    with pytest.raises(NotConvex):
        build_instance(SQUARE[::-1])


def test_build_rejects_collinear():
    with pytest.raises(NotConvex):
        build_instance([(0, 0), (1, 0), (2, 0)])


def test_build_rejects_duplicates_and_bad_weights():
    with pytest.raises(DuplicatePoint):
        build_instance([(0, 0), (1, 0), (0, 0)])
    with pytest.raises(BadWeights):
        build_instance(SQUARE, [1, 2])


def test_build_accepts_one_and_two_points():
    assert build_instance([(0, 0)]).n == 1
    assert build_instance([(0, 0), (3, 0)]).n == 2


def test_rejects_nan():
    with pytest.raises(ValueError):
        build_instance([(0, 0), (1, 0), (float("nan"), 1)], mode=float_mode())


def test_first_far_square(square):
    idx = build_far_index(square)
    # point 0 sees 1 and 3 at exactly r, so the first strictly far point either way is 2
    assert first_far_ccw(idx, 0, 0) == 2
    assert first_far_cw(idx, 0, 0) == 2


def test_first_far_at_far_start(square):
    idx = build_far_index(square)
    assert first_far_ccw(idx, 0, 2) == 2
    assert first_far_cw(idx, 0, 2) == 2


def test_first_far_non_strict(square):
    idx = build_far_index(square, strict=False)
    assert first_far_ccw(idx, 0, 0) == 1
    assert first_far_cw(idx, 0, 0) == 3


def test_first_far_none(small_pentagon):
    idx = build_far_index(small_pentagon)
    assert all(first_far_ccw(idx, i, j) is None and first_far_cw(idx, i, j) is None
               for i in range(5) for j in range(5))


@pytest.mark.parametrize("seed", range(4))
def test_first_far_matches_scan_at_median(seed):
    inst = gen_convex(40, seed)
    ladder = pairwise_distance_ladder(inst)
    r2 = ladder[len(ladder) // 2]
    idx = inst.index(strict=True, r2=r2)
    for i in range(inst.n):
        for j in range(inst.n):
            assert idx.first_far_ccw(i, j) == scan_ccw(inst, i, j, r2)
            assert idx.first_far_cw(i, j) == scan_cw(inst, i, j, r2)


@pytest.mark.parametrize("seed", range(12))
def test_first_far_matches_scan_random(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 200)
    inst = gen_convex(n, seed, scale=rng.uniform(0.5, 6))
    ladder = pairwise_distance_ladder(inst)
    strict = bool(seed % 2)
    r2 = ladder[rng.randrange(len(ladder))]
    idx = inst.index(strict=strict, r2=r2)
    for _ in range(300):
        i, j = rng.randrange(n), rng.randrange(n)
        a, b = idx.first_far_ccw(i, j), idx.first_far_cw(i, j)
        assert a == scan_ccw(inst, i, j, r2, strict)
        assert b == scan_cw(inst, i, j, r2, strict)
        assert (a is None) == (b is None)


def test_self_pairs_match_scan():
    inst = gen_convex(60, 7, scale=3)
    a, b = inst.index().self_pairs()
    for i in range(inst.n):
        assert (None if a[i] < 0 else a[i]) == scan_ccw(inst, i, i)
        assert (None if b[i] < 0 else b[i]) == scan_cw(inst, i, i)


def test_sublist_contains():
    assert sublist_contains(Sublist.closed(2, 0, 4), 3, 4)
    assert not sublist_contains(Sublist.closed(1, 2, 4), 0, 4)
    assert not sublist_contains(Sublist(0, 0), 0, 4)


def test_sublist_shapes():
    assert Sublist.closed(3, 1, 5).indices(5) == [3, 4, 0, 1]
    assert Sublist.open(1, 1, 4).indices(4) == [2, 3, 0]
    assert Sublist.open(1, 2, 4).empty
    assert Sublist.full(4).is_full(4)
    assert Sublist.closed(3, 1, 5).end(5) == 1


def test_sublist_covers():
    n = 6
    assert sublist_covers(Sublist.closed(4, 2, n), Sublist.closed(5, 1, n), n)
    assert not sublist_covers(Sublist.closed(4, 2, n), Sublist.closed(2, 3, n), n)
    assert sublist_covers(Sublist.full(n), Sublist.closed(2, 1, n), n)
