"""ML-degree and maximum likelihood for Gumbel's Type-I bivariate exponential model.

Thin wrappers over the compiled core. Reports come back as plain dicts with
exact quantities as "p/q" strings.
"""

import json
import os
from fractions import Fraction

from ._core import DEFAULT_TOL, GumbelError
from . import _core

__all__ = ["GumbelError", "analyze", "curve", "simulate", "fixture", "to_csv"]


def _field(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_csv(pairs, moments=False):
    """CSV text for a sequence of (x, y) pairs, or (c, d) pairs if moments."""
    lines = ["c,d" if moments else "x,y"]
    lines += [f"{_field(a)},{_field(b)}" for a, b in pairs]
    return "\n".join(lines) + "\n"


def _as_csv(data):
    if isinstance(data, (str, os.PathLike)) and os.path.exists(data):
        with open(data, encoding="utf-8") as fh:
            return fh.read()
    if isinstance(data, str):
        return data
    return to_csv(data)


def analyze(data, tol=DEFAULT_TOL):
    """Full report for a CSV path, CSV text or a sequence of (x, y) pairs."""
    return json.loads(_core.analyze_csv(_as_csv(data), tol, "json"))


def curve(data, points=1001):
    """List of (theta, loglik, likelihood_shape) tuples."""
    rows = _core.curve_csv(_as_csv(data), points).splitlines()[1:]
    return [tuple(float(v) for v in row.split(",")) for row in rows]


def simulate(n, theta, reps, seed=1, tol=DEFAULT_TOL, jobs=1):
    return json.loads(_core.simulate(n, theta, reps, seed, tol, jobs, "json"))


def fixture(spec):
    """Dataset CSV for a spec dict (groups, pinned, singles, seed)."""
    return _core.fixture(json.dumps(spec))
