"""Command line entry point: ``udgx generate|solve|oracle|verify|bench``.

Exit codes: 0 solution found, 2 no solution (infeasible or none), 3 invalid
input, 4 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from fractions import Fraction

from .cycle import ConvexInstance, exact_sqrt
from .errors import UdgError
from .geom import EXACT, float_mode
from .harness import io
from .harness.generate import gen_cloud, gen_convex
from .harness.verify import PROBLEMS, bench, check_witness, get_problem, verify
from .triples import WeightedCloud, build_cloud

OK, NONE, INVALID, MISMATCH = 0, 2, 3, 4

SOLVE_NAMES = ["dominating", "dominating-weighted", "kcenter", "mwis", "far-set", "triple-far",
               "dispersion", "dispersion3", "mwis3", "clique3", "pair-far", "pair-near",
               "min3-far", "min3-near"]
NEEDS_K = {"dominating-weighted", "kcenter", "dispersion"}
NEEDS_R = {"far-set", "triple-far"}


def _num_text(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="udgx", description="Exact optimisation on unit-disk graphs.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("generate", help="write a random instance file")
    g.add_argument("kind", choices=["convex", "cloud"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--scale", type=float, default=4.0, help="convex diameter in units of r")
    g.add_argument("--density", type=float, default=6.0, help="mean r-disk degree of a cloud")
    g.add_argument("--weights", choices=["positive", "unit", "mixed"], default=None)
    g.add_argument("--float", dest="float_mode", action="store_true", help="write a float-mode file")
    g.add_argument("--out", default="-")

    for name in ("solve", "oracle"):
        s = sub.add_parser(name, help=f"run the {'fast solver' if name == 'solve' else 'brute-force oracle'}")
        s.add_argument("problem", choices=SOLVE_NAMES)
        s.add_argument("file")
        s.add_argument("--k", type=int)
        s.add_argument("--r", help="radius override; rationals such as 3/2 are accepted")
        s.add_argument("--at-least", action="store_true", help="far-set: count distance >= r as far")
        s.add_argument("--complement", action="store_true",
                       help="mwis: print the complementary vertex cover instead")
        s.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="cross-check the fast solver against the oracle")
    v.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--float", dest="float_mode", action="store_true",
                   help="float predicates with eps = 0 on the generator's exact grid")
    v.add_argument("--json", action="store_true")

    b = sub.add_parser("bench", help="time the fast solver (float mode)")
    b.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    b.add_argument("--sizes", required=True, help="comma-separated n values")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--scale", type=float, default=4.0)
    b.add_argument("--density", type=float, default=6.0)
    return ap


def _generate(args) -> int:
    mode = float_mode(0.0) if args.float_mode else EXACT
    if args.kind == "convex":
        inst = gen_convex(args.n, args.seed, scale=args.scale, mode=mode, weights=args.weights or "positive")
    else:
        inst = gen_cloud(args.n, args.seed, density=args.density, mode=mode, weights=args.weights or "mixed")
    text = io.dumps(inst)
    if args.out == "-":
        print(text)
    else:
        io.save(inst, args.out)
    return OK


def _params(args, inst) -> dict:
    name = args.problem
    params = {}
    if name in NEEDS_K:
        if args.k is None:
            raise UdgError(f"{name} needs --k")
        params["k"] = args.k
    if name in NEEDS_R or args.r is not None:
        if args.r is not None:
            r = inst.mode.num(Fraction(args.r)) if inst.mode.exact else float(Fraction(args.r))
            if not r > 0:
                raise UdgError("--r must be positive")
            params["r2"] = r * r
        else:
            params["r2"] = inst.r2
    if name == "far-set":
        params["strict"] = not args.at_least
    return params


def _as_problem_instance(prob, inst, params):
    """Reshape the loaded instance for ``prob``, folding a radius override into it."""
    r2 = inst.r2 if prob.name in NEEDS_R else params.pop("r2", inst.r2)
    if not prob.convex:
        if isinstance(inst, WeightedCloud) and r2 == inst.r2:
            return inst
        return build_cloud(inst.points, inst.weights, mode=inst.mode, r2=r2)
    if isinstance(inst, WeightedCloud):
        raise UdgError(f"{prob.name} needs a convex instance file")
    return inst if r2 == inst.r2 else inst.with_r2(r2)


def _solve(args, use_oracle: bool) -> int:
    prob = get_problem(args.problem)
    inst = io.load(args.file)
    params = _params(args, inst)
    inst = _as_problem_instance(prob, inst, params)
    start = time.perf_counter()
    result = (prob.oracle if use_oracle else prob.fast)(inst, **params)
    elapsed = (time.perf_counter() - start) * 1000
    problems = check_witness(prob.name, inst, params, result)
    if problems:
        for msg in problems:
            print(f"witness check failed: {msg}", file=sys.stderr)
        return MISMATCH
    found = result is not None and not (prob.name == "triple-far" and result[0] is False)
    value = witness = None
    if result is not None:
        value, witness = result[0], sorted(int(t) for t in result[1])
        if prob.radius:
            value = exact_sqrt(value) if value != math.inf else value
        if args.problem == "mwis" and args.complement:
            witness = sorted(set(range(inst.n)) - set(witness))
    if args.json:
        print(json.dumps({"value": _num_text(value), "witness": witness, "elapsed_ms": round(elapsed, 3)}))
    elif not found:
        print("none")
    else:
        label = "r*" if prob.radius else "value"
        print(f"{label} = {_num_text(value)}")
        print(f"witness = {' '.join(map(str, witness))}")
        print(f"elapsed = {elapsed:.1f} ms")
    return OK if found else NONE


def _verify(args) -> int:
    mode = float_mode(0.0) if args.float_mode else EXACT
    report = verify(args.problem, args.trials, args.n_max, args.seed, mode)
    if args.json:
        print(json.dumps({"problem": report.problem, "trials": report.trials,
                          "mismatches": report.mismatches, "max_runtime": report.max_runtime}))
    else:
        print(f"{report.problem}: {report.trials} trials, {len(report.mismatches)} mismatches, "
              f"slowest trial {report.max_runtime:.3f} s")
        for row in report.mismatches:
            print(f"  trial {row['trial']} n={row['n']} digest={row['digest']}: {row['issues'][0]}")
    return OK if report.ok else MISMATCH


def _bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    print("n\tseconds")
    for n, secs in bench(args.problem, sizes, args.seed, repeats=args.repeats,
                          scale=args.scale, density=args.density):
        print(f"{n}\t{secs:.4f}")
    return OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.cmd == "generate":
            return _generate(args)
        if args.cmd in ("solve", "oracle"):
            return _solve(args, args.cmd == "oracle")
        if args.cmd == "verify":
            return _verify(args)
        return _bench(args)
    except (UdgError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
