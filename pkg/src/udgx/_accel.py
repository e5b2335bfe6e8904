"""Two builds of ``_kernels``: numba for float64 data, plain Python for rationals."""
import importlib.util
import pathlib
import sys

import numpy as np

from . import _kernels as jit  # noqa: F401  (the ordinary import is the jitted build)

_SRC = pathlib.Path(__file__).with_name("_kernels.py")


def _load_plain():
    name = __package__ + "._kernels_plain"
    spec = importlib.util.spec_from_file_location(name, _SRC)
    mod = importlib.util.module_from_spec(spec)
    mod.JIT = False
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


plain = _load_plain()


def kernels_for(arr: np.ndarray):
    """Pick the build able to handle ``arr``'s dtype."""
    return plain if arr.dtype == object else jit
