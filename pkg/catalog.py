"""
Named entries reachable from the command line: the counterexample runners,
and the built-in functions for the hopflax and blcheck subcommands.
"""
import sys

import numpy as np

import config
from counterexamples import (
    run_asymmetric_body,
    run_ball_plus_point,
    run_connected_2d,
    run_half_one,
    run_localization_discontinuity,
    run_positive_suites,
)
from errors import LiteralParseError, ParameterRangeError
from grid_function import GridFunction, sample

CATALOG = [
    {
        "name": "half-one",
        "runner": run_half_one,
        "params": {"s": 0.75},
        "description": "A = [0,1] u [2,b] under x^(1/γ): V is not s-concave for s in (1/2, 1)",
    },
    {
        "name": "asymmetric-body",
        "runner": run_asymmetric_body,
        "params": {"s": 1 / 3, "a": config.ASYMMETRIC_DEFAULT_A},
        "description": "Dilation by the non-symmetric body [0,1] breaks s-concavity for s <= 1/2",
    },
    {
        "name": "ball-plus-point",
        "runner": run_ball_plus_point,
        "params": {"n": 2},
        "description": "Unit ball plus a point in R^n: |A + tB|^(1/n) is convex near 0",
    },
    {
        "name": "connected-2d",
        "runner": run_connected_2d,
        "params": {"grid_h": config.RASTER_DEFAULT_H},
        "description": "Connected planar set under the l1-ball measure, not 1/2-concave",
    },
    {
        "name": "localization-jump",
        "runner": run_localization_discontinuity,
        "params": {},
        "description": "Volume restricted to a segment jumps by 1 at t = 1",
    },
    {
        "name": "positive-suites",
        "runner": run_positive_suites,
        "params": {"seed": 0, "cases": 100},
        "description": "Randomized checks of the positive results and the junction ordering",
    },
]

# name -> (function, z_lo, z_hi, n); functions take and return arrays
FUNCTIONS = {
    "gauss": (lambda x: np.exp(-x ** 2 / 2), -12.0, 12.0, 2001),
    "laplace": (lambda x: np.exp(-np.abs(x)), -40.0, 40.0, 4001),
    "bump": (lambda x: np.maximum(0.0, 1 - x ** 2), -6.0, 6.0, 2001),
}

POTENTIALS = {
    "quadratic": (lambda x: x ** 2 / 2, -25.0, 25.0, 2001),
    "quadratic-plus-one": (lambda x: x ** 2 / 2 + 1, -30.0, 30.0, 4001),
    "one-plus-square": (lambda x: 1 + x ** 2, -400.0, 400.0, 16001),
    "cosh": (np.cosh, -15.0, 15.0, 3001),
}


def find(name: str) -> dict:
    for entry in CATALOG:
        if entry["name"] == name:
            return entry
    known = ", ".join(entry["name"] for entry in CATALOG)
    raise ParameterRangeError(f"unknown counterexample {name!r}; known: {known}")


def parse_params(entry: dict, pairs) -> dict:
    """
    Merge k=v overrides into the entry's defaults, typed like the defaults.

    Raises:
        LiteralParseError: on a malformed pair, unknown key or bad number
    """
    params = dict(entry["params"])
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        key = key.strip()
        if not sep or not key:
            raise LiteralParseError(f"expected k=v, got {pair!r}")
        if key not in params:
            raise LiteralParseError(f"{entry['name']} has no parameter {key!r}")
        kind = type(params[key])
        try:
            params[key] = kind(raw) if kind is int else float(raw)
        except ValueError:
            raise LiteralParseError(f"parameter {key} expects a {kind.__name__}, got {raw!r}")
    return params


def run(name: str, pairs=None):
    entry = find(name)
    params = parse_params(entry, pairs)
    print(f"[Catalog] running {name} with {params}", file=sys.stderr)
    return entry["runner"](**params)


def listing() -> list:
    return [
        {"name": entry["name"], "params": entry["params"], "description": entry["description"]}
        for entry in CATALOG
    ]


def builtin_grid(table: dict, name: str) -> GridFunction:
    if name not in table:
        raise LiteralParseError(f"unknown built-in {name!r}; known: {', '.join(table)}")
    fn, z_lo, z_hi, n = table[name]
    return sample(fn, z_lo, z_hi, n)
