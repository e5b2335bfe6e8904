"""JSON instance files.

    {"r": 1, "mode": "exact", "convex": true, "points": [[x, y, w], ...]}

Exact files carry rationals as "p/q" strings (plain integers and decimal
strings are accepted too); float files use shortest round-trip reprs.  A file
may give "r2" instead of "r" when the squared radius is not a perfect square.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from ..cycle import ConvexInstance, build_instance, exact_sqrt
from ..geom import EXACT, PredicateMode, float_mode
from ..triples import WeightedCloud, build_cloud

Instance = Union[ConvexInstance, WeightedCloud]


def _dump_num(v, exact: bool):
    if not exact:
        return float(v)
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _load_num(v, exact: bool):
    if exact:
        if isinstance(v, float):
            return Fraction(repr(v))
        return Fraction(v)
    if isinstance(v, str):
        return float(Fraction(v))
    return float(v)


def to_json(inst: Instance) -> dict:
    exact = inst.mode.exact
    doc = {"mode": "exact" if exact else "float"}
    if not exact:
        doc["eps"] = inst.mode.eps
    r = exact_sqrt(inst.r2)
    if exact and not isinstance(r, Fraction):
        doc["r2"] = _dump_num(inst.r2, exact)
    else:
        doc["r"] = _dump_num(r, exact) if exact else inst.r2 ** 0.5
        if not exact and doc["r"] ** 2 != inst.r2:
            del doc["r"]
            doc["r2"] = inst.r2
    doc["convex"] = isinstance(inst, ConvexInstance)
    doc["points"] = [[_dump_num(p[0], exact), _dump_num(p[1], exact), _dump_num(w, exact)]
                     for p, w in zip(inst.points, inst.weights)]
    return doc


def from_json(doc: dict) -> Instance:
    kind = doc.get("mode", "exact")
    if kind == "exact":
        mode: PredicateMode = EXACT
    elif kind == "float":
        mode = float_mode(float(doc.get("eps", 1e-9)))
    else:
        raise ValueError(f"unknown mode {kind!r}")
    exact = mode.exact
    rows = doc["points"]
    pts, ws = [], []
    for row in rows:
        if len(row) not in (2, 3):
            raise ValueError(f"point rows are [x, y] or [x, y, w], got {row!r}")
        pts.append((_load_num(row[0], exact), _load_num(row[1], exact)))
        ws.append(_load_num(row[2], exact) if len(row) == 3 else mode.num(1))
    if "r2" in doc:
        r2 = _load_num(doc["r2"], exact)
    else:
        r = _load_num(doc.get("r", 1), exact)
        if not r > 0:
            raise ValueError("r must be positive")
        r2 = r * r
    if doc.get("convex", True):
        return build_instance(pts, ws, mode=mode, r2=r2)
    return build_cloud(pts, ws, mode=mode, r2=r2)


def dumps(inst: Instance) -> str:
    return json.dumps(to_json(inst), indent=1)


def loads(text: str) -> Instance:
    return from_json(json.loads(text))


def save(inst: Instance, path) -> None:
    Path(path).write_text(dumps(inst) + "\n")


def load(path) -> Instance:
    return loads(Path(path).read_text())
