"""Randomised cross-checks of the fast solvers against the oracles, and benchmarks.

Each problem bundles an instance generator, the fast solver, the brute-force
oracle and optional extra consistency checks.  Solvers and oracles both
return ``(value, witness)`` or ``None``.  Radius-valued problems report
squared radii so that values compare exactly.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .. import domset, independent, kcenter, dispersion, triples
from ..errors import UdgError
from ..geom import EXACT, PredicateMode
from ..triples import Relation
from . import oracles
from .generate import gen_cloud, gen_convex
from .io import dumps


@dataclass
class Problem:
    name: str
    convex: bool
    fast: Callable
    oracle: Callable
    params: Callable  # (inst, rng) -> list of parameter dicts to try
    weights: str = "unit"
    min_n: int = 3
    radius: bool = False  # value is a squared radius
    extra: Optional[Callable] = None  # (inst, rng) -> list of problems found


@dataclass
class VerifyReport:
    problem: str
    trials: int
    mismatches: list = field(default_factory=list)
    max_runtime: float = 0.0
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _pair(sol, value, witness):
    return None if sol is None else (value(sol), tuple(witness(sol)))


# ---------------------------------------------------------------------------
# fast solvers


def _fast_dom_weighted(inst, k):
    sol = domset.solve_weighted_bounded(inst, k)
    return _pair(sol, lambda s: s.total_weight, lambda s: s.centers)


def _fast_dom(inst):
    sol = domset.solve_unweighted(inst)
    return sol.total_weight, sol.centers


def _fast_kcenter(inst, k):
    sol = kcenter.solve_kcenter(inst, k)
    return sol.r2_star, sol.centers


def _fast_mwis(inst):
    sol = independent.solve_mwis(inst, max_n=None)
    return sol.weight, sol.members


def _fast_far_set(inst, r2, strict=True):
    got = independent.max_cardinality_far_set(inst, r2=r2, strict=strict, max_n=None)
    return len(got), got


def _fast_triple_far(inst, r2):
    got = independent.triple_far_decision(inst, r2=r2)
    return (True, got) if got is not None else (False, ())


def _fast_dispersion(inst, k):
    sol = dispersion.solve_dispersion(inst, k, max_n=None)
    return sol.r2_star, sol.members


def _fast_dispersion3(inst):
    sol = dispersion.solve_dispersion3(inst)
    return sol.r2_star, sol.members


def _fast_triple(rel):
    def run(cloud):
        sol = triples.solve_triple(cloud, rel)
        return _pair(sol, lambda s: s.total_weight, lambda s: s.indices)
    return run


def _fast_pair(rel):
    def run(cloud):
        sol = triples.solve_pair(cloud, rel)
        return _pair(sol, lambda s: s.total_weight, lambda s: s.indices)
    return run


def _fast_min3(rel):
    def run(cloud):
        sol = triples.solve_min_variant(cloud, 3, rel)
        return _pair(sol, lambda s: s.total_weight, lambda s: s.indices)
    return run


# ---------------------------------------------------------------------------
# oracles


def _or_dom_weighted(inst, k):
    return oracles.oracle_dominating(inst.points, inst.weights, inst.r2, k, inst.mode.eps)


def _or_dom(inst):
    return oracles.oracle_dominating(inst.points, None, inst.r2, None, inst.mode.eps, weighted=False)


def _or_kcenter(inst, k):
    return oracles.oracle_kcenter(inst.points, k)


def _or_mwis(inst):
    return oracles.oracle_mwis(inst.points, inst.weights, inst.r2, inst.mode.eps)


def _or_far_set(inst, r2, strict=True):
    got = oracles.oracle_mwis(inst.points, [1] * inst.n, r2, inst.mode.eps, strict)
    return int(got[0]), got[1]


def _or_triple_far(inst, r2):
    best = oracles.oracle_dispersion3(inst.points)
    ok = best[0] - r2 >= -inst.mode.eps
    return (True, best[1]) if ok else (False, ())


def _or_dispersion(inst, k):
    return oracles.oracle_dispersion(inst.points, k)


def _or_dispersion3(inst):
    return oracles.oracle_dispersion3(inst.points)


def _or_triple(rel):
    def run(cloud):
        return oracles.oracle_triple(cloud.points, cloud.weights, cloud.r2,
                                     rel is Relation.NEAR, cloud.mode.eps)
    return run


def _or_pair(rel):
    def run(cloud):
        return oracles.oracle_pair(cloud.points, cloud.weights, cloud.r2,
                                   rel is Relation.NEAR, cloud.mode.eps)
    return run


def _or_min3(rel):
    def run(cloud):
        got = oracles.oracle_triple(cloud.points, [-w for w in cloud.weights], cloud.r2,
                                    rel is Relation.NEAR, cloud.mode.eps)
        return None if got is None else (-got[0], got[1])
    return run


# ---------------------------------------------------------------------------
# parameter draws and extra checks


def _no_params(inst, rng):
    return [{}]


def _all_k(inst, rng):
    return [{"k": k} for k in range(1, inst.n + 1)]


def _one_k(k_max, k_min=1):
    def draw(inst, rng):
        return [{"k": int(rng.integers(k_min, min(k_max, inst.n) + 1))}]
    return draw


def _ladder_r2(inst, rng, count=3):
    ladder = kcenter.pairwise_distance_ladder(inst)
    picks = rng.integers(0, len(ladder), size=count)
    return [ladder[int(t)] for t in picks]


def _far_set_params(inst, rng):
    return [{"r2": r2, "strict": bool(s)} for r2, s in
            zip(_ladder_r2(inst, rng, 2), rng.integers(0, 2, size=2))]


def _triple_far_params(inst, rng):
    return [{"r2": r2} for r2 in _ladder_r2(inst, rng, 3)]


def _check_unit_dp(inst, rng):
    """Unit-weight DP must reach the greedy cardinality."""
    greedy = domset.solve_unweighted(inst).total_weight
    unit = inst.with_weights([1] * inst.n)
    dp = domset.solve_weighted(unit)
    out = []
    if len(dp.centers) != greedy:
        out.append(f"unit-weight DP size {len(dp.centers)} != greedy size {greedy}")
    if greedy > 1 and domset.solve_weighted_bounded(unit, greedy - 1) is not None:
        out.append(f"DP found a cover with fewer than {greedy} centres")
    return out


def _check_dispersion3(inst, rng):
    """dispersion(k=3) agrees with dispersion3, and the decision bit matches the cubic scan."""
    out = []
    d3 = dispersion.solve_dispersion3(inst)
    dk = dispersion.solve_dispersion(inst, 3, max_n=None)
    if d3.r2_star != dk.r2_star:
        out.append(f"dispersion(k=3) r2 {dk.r2_star} != dispersion3 r2 {d3.r2_star}")
    best = oracles.oracle_dispersion3(inst.points)[0]
    for r2 in _ladder_r2(inst, rng, 2) + [d3.r2_star]:
        fast = independent.triple_far_decision(inst, r2=r2) is not None
        if fast != (best - r2 >= -inst.mode.eps):
            out.append(f"decision at r2={r2}: fast {fast}")
    return out


def _check_min_identity(rel):
    def run(cloud, rng):
        a = triples.solve_min_variant(cloud, 3, rel)
        b = triples.solve_triple(cloud.negated(), rel)
        if (a is None) != (b is None) or (a is not None and a.total_weight != -b.total_weight):
            return [f"min variant {a} is not the negated max {b}"]
        return []
    return run


PROBLEMS = {
    "dominating-weighted": Problem("dominating-weighted", True, _fast_dom_weighted, _or_dom_weighted,
                                   _all_k, weights="positive", min_n=1),
    "dominating": Problem("dominating", True, _fast_dom, _or_dom, _no_params, min_n=1,
                          extra=_check_unit_dp),
    "kcenter": Problem("kcenter", True, _fast_kcenter, _or_kcenter, _one_k(4), radius=True, min_n=1),
    "mwis": Problem("mwis", True, _fast_mwis, _or_mwis, _no_params, weights="positive", min_n=1),
    "far-set": Problem("far-set", True, _fast_far_set, _or_far_set, _far_set_params, min_n=1),
    "triple-far": Problem("triple-far", True, _fast_triple_far, _or_triple_far, _triple_far_params),
    "dispersion": Problem("dispersion", True, _fast_dispersion, _or_dispersion, _one_k(5, 2),
                          radius=True, min_n=2),
    "dispersion3": Problem("dispersion3", True, _fast_dispersion3, _or_dispersion3, _no_params,
                           radius=True, extra=_check_dispersion3),
    "mwis3": Problem("mwis3", False, _fast_triple(Relation.FAR), _or_triple(Relation.FAR), _no_params,
                     weights="mixed", extra=_check_min_identity(Relation.FAR)),
    "clique3": Problem("clique3", False, _fast_triple(Relation.NEAR), _or_triple(Relation.NEAR), _no_params,
                       weights="mixed", extra=_check_min_identity(Relation.NEAR)),
    "pair-far": Problem("pair-far", False, _fast_pair(Relation.FAR), _or_pair(Relation.FAR), _no_params,
                        weights="mixed", min_n=2),
    "pair-near": Problem("pair-near", False, _fast_pair(Relation.NEAR), _or_pair(Relation.NEAR), _no_params,
                         weights="mixed", min_n=2),
    "min3-far": Problem("min3-far", False, _fast_min3(Relation.FAR), _or_min3(Relation.FAR), _no_params,
                        weights="mixed"),
    "min3-near": Problem("min3-near", False, _fast_min3(Relation.NEAR), _or_min3(Relation.NEAR), _no_params,
                         weights="mixed"),
}
PROBLEMS["triple-far-arbitrary"] = PROBLEMS["mwis3"]


def get_problem(name: str) -> Problem:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise ValueError(f"unknown problem {name!r}; choose from {', '.join(sorted(PROBLEMS))}") from None


def make_instance(prob: Problem, n: int, rng: np.random.Generator, mode: PredicateMode = EXACT,
                  scale: Optional[float] = None, density: Optional[float] = None):
    """Random instance for ``prob``; scale and density are drawn unless given."""
    seed = int(rng.integers(0, 2 ** 31))
    if prob.convex:
        scale = float(rng.uniform(0.5, 8.0)) if scale is None else scale
        return gen_convex(n, seed, scale=scale, mode=mode, weights=prob.weights)
    density = float(rng.uniform(1.0, 12.0)) if density is None else density
    return gen_cloud(n, seed, density=density, mode=mode, weights=prob.weights)


def _d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _pairwise(inst, idx, ok) -> bool:
    pts = inst.points
    return all(ok(_d2(pts[a], pts[b])) for x, a in enumerate(idx) for b in idx[x + 1:])


def check_witness(name: str, inst, params: dict, result) -> list:
    """Re-check a solver's (value, witness) against the problem definition alone."""
    if result is None:
        return []
    value, wit = result
    wit = tuple(wit)
    eps = inst.mode.eps
    r2 = params.get("r2", inst.r2)
    far = (lambda d: d - r2 > eps) if params.get("strict", True) else (lambda d: d - r2 >= -eps)
    near = lambda d: d - r2 <= eps  # noqa: E731
    total = sum((inst.weights[t] for t in wit), inst.mode.num(0))
    bad = []
    if len(set(wit)) != len(wit) or any(not 0 <= t < inst.n for t in wit):
        return [f"witness {wit} has repeated or out-of-range indices"]
    k = params.get("k")
    if name in ("dominating", "dominating-weighted"):
        if not domset.is_dominating(inst, wit):
            bad.append("witness does not dominate")
        if value != (total if name == "dominating-weighted" else len(wit)):
            bad.append(f"value {value} does not match the witness")
        if k is not None and len(wit) > k:
            bad.append(f"{len(wit)} centres exceed k = {k}")
    elif name == "kcenter":
        if len(wit) > k or kcenter.covering_radius2(inst, wit) - value > eps:
            bad.append("centres do not cover within r*")
    elif name in ("mwis", "far-set"):
        if not _pairwise(inst, wit, far):
            bad.append("members are not pairwise far")
        if value != (total if name == "mwis" else len(wit)):
            bad.append(f"value {value} does not match the witness")
    elif name == "triple-far":
        if value and (len(wit) != 3 or not _pairwise(inst, wit, lambda d: d - r2 >= -eps)):
            bad.append("triple is not pairwise at least r apart")
    elif name in ("dispersion", "dispersion3"):
        want = k if name == "dispersion" else 3
        if len(wit) != want:
            bad.append(f"{len(wit)} members instead of {want}")
        elif want > 1 and dispersion.min_pairwise2(inst, wit) != value and inst.mode.exact:
            bad.append("smallest pairwise distance differs from r*")
    else:
        rel = near if name in ("clique3", "pair-near", "min3-near") else far
        size = 2 if name.startswith("pair") else 3
        if len(wit) != size or not _pairwise(inst, wit, rel):
            bad.append("members do not satisfy the relation")
        if value != total:
            bad.append(f"value {value} does not match the witness")
    return bad


def _same(a, b) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return a[0] == b[0]


def digest(inst) -> str:
    return hashlib.sha1(dumps(inst).encode()).hexdigest()[:12]


def run_trial(prob: Problem, inst, rng) -> list:
    """Problems found on one instance (empty when fast and oracle agree)."""
    issues = []
    for params in prob.params(inst, rng):
        try:
            fast = prob.fast(inst, **params)
        except (AssertionError, UdgError) as exc:
            issues.append(f"{params}: solver failed: {exc!r}")
            continue
        issues.extend(f"{params}: {msg}" for msg in check_witness(prob.name, inst, params, fast))
        ref = prob.oracle(inst, **params)
        if not _same(fast, ref):
            issues.append(f"{params}: fast {fast} oracle {ref}")
    if prob.extra is not None:
        try:
            issues.extend(prob.extra(inst, rng))
        except (AssertionError, UdgError) as exc:
            issues.append(f"extra check failed: {exc!r}")
    return issues


def verify(problem: str, trials: int, n_max: int, seed: int = 0,
           mode: PredicateMode = EXACT, n_min: Optional[int] = None) -> VerifyReport:
    prob = get_problem(problem)
    report = VerifyReport(problem, trials)
    lo = max(prob.min_n, n_min or 0)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        n = int(rng.integers(lo, max(lo, n_max) + 1))
        inst = make_instance(prob, n, rng, mode)
        start = time.perf_counter()
        issues = run_trial(prob, inst, rng)
        report.max_runtime = max(report.max_runtime, time.perf_counter() - start)
        report.checks += 1
        if issues:
            report.mismatches.append({"trial": t, "seed": [seed, t], "n": n,
                                      "digest": digest(inst), "issues": issues})
    return report


def bench(problem: str, sizes, seed: int = 0, mode: Optional[PredicateMode] = None,
          repeats: int = 1, scale: float = 4.0, density: float = 6.0) -> list:
    """(n, best CPU seconds) of the fast solver on one generated instance per size."""
    from ..geom import float_mode

    prob = get_problem(problem)
    mode = float_mode(0.0) if mode is None else mode

    def setup(n):
        rng = np.random.default_rng([seed, n])
        inst = make_instance(prob, n, rng, mode, scale=scale, density=density)
        params = prob.params(inst, rng)[0] if prob.params is not _all_k else {"k": n}
        return inst, params

    inst, params = setup(8)
    prob.fast(inst, **params)  # compile the kernels outside the timed runs
    rows = []
    for n in sizes:
        inst, params = setup(n)
        best = float("inf")
        for _ in range(repeats):
            start = time.process_time()
            prob.fast(inst, **params)
            best = min(best, time.process_time() - start)
        rows.append((n, best))
    return rows
