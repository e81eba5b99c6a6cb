"""Exact calculus for algebraic cycles on affine cubes.

Thin wrapper over the compiled core. Cycles and towers are exact objects in
canonical form; anything randomized takes an explicit seed and replays
identically.
"""
import json as _json

from ._core import Cycle, Tower, make_cycle, suite_names
from . import _core

__all__ = [
    "Cycle",
    "Tower",
    "cycle",
    "make_cycle",
    "cycle_from_dict",
    "cycle_to_dict",
    "load_cycle",
    "run_suite",
    "suite_names",
    "glue",
    "mv_check",
]


def cycle(ambient_dim, cube_dim, d, components, params=(), units=()):
    """Build a cycle from (coefficient, [generator strings]) pairs."""
    comps = [(int(c), [str(g) for g in gens]) for c, gens in components]
    return make_cycle(ambient_dim, cube_dim, d, comps, list(params), list(units))


def cycle_from_dict(doc):
    return Cycle.from_json(_json.dumps(doc))


def cycle_to_dict(z):
    return _json.loads(z.to_json())


def load_cycle(path):
    """Load a cycle file, unwrapping a fixture envelope if present."""
    with open(path) as fh:
        doc = _json.load(fh)
    return cycle_from_dict(doc.get("payload", doc))


def run_suite(name, seed=7, random=100, nmax=4, corpus="corpus"):
    """Run a named verification suite; returns the report as a dict."""
    return _json.loads(_core.run_suite(name, seed, random, nmax, corpus))


def glue(first, second, u_closed, v_closed):
    """Glue two cycles agreeing on the overlap of two principal opens."""
    return _core.glue_cycles(first, second, list(u_closed), list(v_closed))


def mv_check(samples, u_closed, v_closed):
    """Exactness report for the two-open section sequence; returns a dict."""
    return _json.loads(_core.mv_check(list(samples), list(u_closed), list(v_closed)))
