"""Fewnomial hypersurface bounds, Morse census and homology oracle."""

import json
import os

from . import _core
from ._core import (
    BoundViolation,
    GenericityExhausted,
    InputError,
    StabilizationError,
    bs_constant,
    evaluate,
    isolate_roots,
    khovanskii_bound,
    milnor_bound,
    per_stratum_bound,
    simple_bound,
    theorem1_bound,
)

__all__ = [
    "BoundViolation",
    "GenericityExhausted",
    "InputError",
    "StabilizationError",
    "bounds",
    "bs_constant",
    "census",
    "evaluate",
    "isolate_roots",
    "khovanskii_bound",
    "milnor_bound",
    "oracle",
    "per_stratum_bound",
    "random_instance",
    "simple_bound",
    "theorem1_bound",
    "verify",
]


def _instance_text(instance):
    """Accepts a dict, a JSON string, or a path to a JSON file."""
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike) or (isinstance(instance, str) and os.path.exists(instance)):
        with open(instance, encoding="utf-8") as f:
            return f.read()
    return instance


def bounds(n, l, d=None):
    return json.loads(_core.bounds_json(n, l, d))


def random_instance(n, l, seed):
    return json.loads(_core.random_instance_json(n, l, seed))


def census(instance, seed=1, starts=0, shift=False, M=2.0):
    return json.loads(_core.census_json(_instance_text(instance), seed, starts, shift, M))


def oracle(instance, resolution=32, seed=1, M=2.0):
    return json.loads(_core.oracle_json(_instance_text(instance), resolution, seed, M))


def verify(instance, seed=1, starts=0, resolution=32, M=2.0, timings=True):
    return json.loads(_core.verify_json(_instance_text(instance), seed, starts, resolution, M, timings))
