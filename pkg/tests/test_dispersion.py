import math
import random

import pytest

from udgx.dispersion import INFINITE, min_pairwise2, solve_dispersion, solve_dispersion3
from udgx.errors import BadK
from udgx.harness.generate import gen_convex
from udgx.harness.oracles import oracle_dispersion, oracle_dispersion3
from udgx.independent import max_cardinality_far_set, triple_far_decision
from udgx.kcenter import pairwise_distance_ladder

# r* of the unit-circumradius regular pentagon: every triple holds a side (oracle scan)
PENTAGON_R3 = 1.1755705045849463


def test_dispersion_square(square):
    three = solve_dispersion(square, 3)
    assert three.r_star == 1 and len(three.members) == 3
    two = solve_dispersion(square, 2)
    assert two.r2_star == 2
    assert two.r_star == pytest.approx(math.sqrt(2))


def test_dispersion_one_is_infinite(square):
    sol = solve_dispersion(square, 1)
    assert sol.r_star == INFINITE and len(sol.members) == 1


def test_dispersion_bad_k(square):
    for k in (0, 5):
        with pytest.raises(BadK):
            solve_dispersion(square, k)


def test_dispersion3_square(square):
    sol = solve_dispersion3(square)
    assert sol.r_star == 1
    assert min_pairwise2(square, sol.members) == 1


def test_dispersion3_pentagon(pentagon):
    assert oracle_dispersion3(pentagon.points)[0] == pytest.approx(PENTAGON_R3 ** 2)
    sol = solve_dispersion3(pentagon)
    assert sol.r_star == pytest.approx(PENTAGON_R3)
    assert sol.r_star == pytest.approx(2 * math.sin(math.pi / 5))


@pytest.mark.parametrize("seed", range(15))
def test_dispersion_matches_oracle(seed):
    rng = random.Random(seed)
    inst = gen_convex(rng.randint(3, 11), seed, scale=rng.uniform(0.5, 6))
    k = rng.randint(2, min(5, inst.n))
    sol = solve_dispersion(inst, k)
    assert sol.r2_star == oracle_dispersion(inst.points, k)[0]
    assert min_pairwise2(inst, sol.members) == sol.r2_star


@pytest.mark.parametrize("seed", range(10))
def test_dispersion3_matches_scan_and_general_k(seed):
    rng = random.Random(seed)
    inst = gen_convex(rng.randint(3, 40), seed, scale=rng.uniform(0.5, 6))
    d3 = solve_dispersion3(inst)
    assert d3.r2_star == oracle_dispersion3(inst.points)[0]
    assert solve_dispersion(inst, 3).r2_star == d3.r2_star


@pytest.mark.parametrize("seed", range(3))
def test_decisions_anti_monotone(seed):
    inst = gen_convex(14, seed, scale=4)
    ladder = pairwise_distance_ladder(inst)
    triple = [triple_far_decision(inst, r2=v) is not None for v in ladder]
    four = [len(max_cardinality_far_set(inst, r2=v)) >= 4 for v in ladder]
    for bits in (triple, four):
        last = len(bits) - 1 - bits[::-1].index(True)
        assert all(bits[:last + 1]) and not any(bits[last + 1:])
