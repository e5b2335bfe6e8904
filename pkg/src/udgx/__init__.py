"""Exact optimisation on unit-disk graphs of planar point sets."""
from .geom import (
    EXACT,
    Orientation,
    Point,
    PredicateMode,
    circumcenter,
    float_mode,
    orientation,
    outside_disk,
    pencil_param,
    squared_distance,
    validate_convex_ccw,
)

__all__ = [
    "EXACT",
    "Orientation",
    "Point",
    "PredicateMode",
    "circumcenter",
    "float_mode",
    "orientation",
    "outside_disk",
    "pencil_param",
    "squared_distance",
    "validate_convex_ccw",
]
