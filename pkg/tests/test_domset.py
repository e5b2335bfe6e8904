import random

import pytest

from udgx.cycle import Sublist, build_instance, sublist_contains, sublist_covers
from udgx.domset import (
    EnclosingSublistIndex,
    FarthestEnclosingIndex,
    cover_decision,
    farthest_ccw_enclosing,
    farthest_cw_enclosing,
    is_dominating,
    min_weight_enclosing,
    solve_unweighted,
    solve_weighted,
    solve_weighted_bounded,
)
from udgx.errors import BadK, NonPositiveWeight
from udgx.harness.generate import gen_convex
from udgx.harness.oracles import oracle_dominating

from conftest import SQUARE


def _random_run(rng, n):
    length = rng.randint(1, n)
    return Sublist(rng.randrange(n), length)


def test_min_weight_enclosing_picks_cheapest_container():
    n = 6
    idx = EnclosingSublistIndex(n, [Sublist.closed(0, 2, n), Sublist.closed(1, 3, n)], [5, 2])
    assert min_weight_enclosing(idx, Sublist.closed(1, 2, n)) == (Sublist.closed(1, 3, n), 2)


def test_min_weight_enclosing_none():
    n = 6
    idx = EnclosingSublistIndex(n, [Sublist.closed(0, 1, n)], [1])
    assert min_weight_enclosing(idx, Sublist.closed(2, 3, n)) is None


def test_min_weight_enclosing_full_cycle_run():
    n = 5
    idx = EnclosingSublistIndex(n, [Sublist.full(n), Sublist.closed(3, 0, n)], [9, 4])
    assert min_weight_enclosing(idx, Sublist.closed(4, 0, n)) == (Sublist.closed(3, 0, n), 4)
    assert min_weight_enclosing(idx, Sublist.closed(0, 4, n))[1] == 9


@pytest.mark.parametrize("seed", range(3))
def test_min_weight_enclosing_matches_scan(seed):
    rng = random.Random(seed)
    n = 23
    runs = [_random_run(rng, n) for _ in range(1000)]
    keys = [rng.randint(1, 10_000) for _ in runs]
    idx = EnclosingSublistIndex(n, runs, keys)
    for _ in range(1000):
        q = _random_run(rng, n)
        got = min_weight_enclosing(idx, q)
        want = min((k for run, k in zip(runs, keys) if sublist_covers(run, q, n)), default=None)
        assert (got is None and want is None) or got[1] == want
        if got is not None:
            assert sublist_covers(got[0], q, n)


def test_farthest_enclosing_examples():
    idx = FarthestEnclosingIndex(8, [Sublist.closed(0, 2, 8), Sublist.closed(1, 4, 8)])
    assert farthest_ccw_enclosing(idx, 1) == Sublist.closed(1, 4, 8)
    idx = FarthestEnclosingIndex(6, [Sublist.closed(4, 1, 6)])
    assert farthest_ccw_enclosing(idx, 5) == Sublist.closed(4, 1, 6)
    assert farthest_cw_enclosing(idx, 5) == Sublist.closed(4, 1, 6)
    assert farthest_ccw_enclosing(idx, 3) is None


@pytest.mark.parametrize("seed", range(3))
def test_farthest_enclosing_matches_scan(seed):
    rng = random.Random(seed)
    n = 17
    runs = [_random_run(rng, n) for _ in range(rng.randint(1, 40))]
    runs = [r for r in runs if r.length < n]
    idx = FarthestEnclosingIndex(n, runs)
    for t in range(n):
        holding = [r for r in runs if sublist_contains(r, t, n)]
        got_ccw, got_cw = farthest_ccw_enclosing(idx, t), farthest_cw_enclosing(idx, t)
        if not holding:
            assert got_ccw is None and got_cw is None
            continue
        reach_ccw = lambda r: (r.start + r.length - 1 - t) % n  # noqa: E731
        reach_cw = lambda r: (t - r.start) % n  # noqa: E731
        assert reach_ccw(got_ccw) == max(map(reach_ccw, holding))
        assert reach_cw(got_cw) == max(map(reach_cw, holding))


def test_weighted_square():
    inst = build_instance(SQUARE, [5, 1, 1, 9], r=1)
    sol = solve_weighted_bounded(inst, 2)
    assert sol.total_weight == 2
    assert sol.centers == (1, 2)


def test_weighted_single_centre():
    # every disk covers the small triangle; the cheapest centre wins
    inst = build_instance([(0, 0), (1, 0), (0, 1)], [4, 3, 7], r=2)
    sol = solve_weighted_bounded(inst, 1)
    assert sol.centers == (1,) and sol.total_weight == 3


def test_weighted_single_point():
    sol = solve_weighted(build_instance([(0, 0)], [7]))
    assert sol.centers == (0,) and sol.total_weight == 7


def test_weighted_edgeless():
    inst = build_instance([(x * 3, y * 3) for x, y in SQUARE], [1, 2, 3, 4], r=1)
    sol = solve_weighted(inst)
    assert sol.centers == (0, 1, 2, 3) and sol.total_weight == 10
    assert solve_weighted_bounded(inst, 3) is None


def test_weighted_rejects_bad_input(square):
    with pytest.raises(BadK):
        solve_weighted_bounded(square, 0)
    with pytest.raises(BadK):
        solve_weighted_bounded(square, 5)
    with pytest.raises(NonPositiveWeight):
        solve_weighted_bounded(square.with_weights([1, 0, 1, 1]), 2)


@pytest.mark.parametrize("seed", range(20))
def test_weighted_matches_oracle(seed):
    rng = random.Random(seed)
    inst = gen_convex(rng.randint(1, 11), seed, scale=rng.uniform(0.5, 6))
    previous = None
    for k in range(1, inst.n + 1):
        sol = solve_weighted_bounded(inst, k)
        ref = oracle_dominating(inst.points, inst.weights, inst.r2, k)
        assert (sol is None) == (ref is None)
        if sol is not None:
            assert sol.total_weight == ref[0]
            assert len(sol.centers) <= k and is_dominating(inst, sol.centers)
            # more centres never cost more
            assert previous is None or sol.total_weight <= previous
            previous = sol.total_weight


def test_unweighted_square(square):
    assert solve_unweighted(square).total_weight == 2


def test_unweighted_pentagon(pentagon):
    assert solve_unweighted(pentagon).centers == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("seed", range(20))
def test_unweighted_matches_oracle_and_unit_dp(seed):
    rng = random.Random(seed)
    inst = gen_convex(rng.randint(1, 14), seed, scale=rng.uniform(0.5, 8), weights="unit")
    sol = solve_unweighted(inst)
    ref = oracle_dominating(inst.points, None, inst.r2, weighted=False)
    assert sol.total_weight == ref[0]
    assert len(solve_weighted(inst).centers) == sol.total_weight


def test_cover_decision_square(square):
    got = cover_decision(square, 1, r2=2)
    assert got is not None and len(got) == 1
    assert cover_decision(square, 1, r=1.2) is None
    assert cover_decision(square, 2, r=1) is not None


def test_cover_decision_zero_radius(square):
    assert cover_decision(square, 4, r=0) == (0, 1, 2, 3)
    assert cover_decision(square, 3, r=0) is None
