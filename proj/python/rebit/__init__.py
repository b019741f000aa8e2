"""Exact orbit classification for real 2x2x2x2 tensors.

States are TensorState dicts, {"coeffs": {"0000": "1", "1111": "1"}}, with
coefficients in the text form "p/q" or "c0,...,c7" (coordinates over eta,
eta^8 = -1). Every function returns plain dicts decoded from the JSON the
command-line tool prints.
"""

import json

from ._rebit import CriterionResult, MathError, ParseError
from . import _rebit

__all__ = ["classify", "decompose", "invariants", "h1", "run", "selftest", "state", "MathError", "ParseError"]


def _encode(s):
    return s if isinstance(s, str) else json.dumps(s)


def state(**coeffs):
    """state(e0000=1, e1111=1) -> TensorState dict."""
    out = {}
    for key, value in coeffs.items():
        if not key.startswith("e"):
            raise ValueError(f"bad coefficient name {key!r}")
        out[key[1:]] = str(value)
    return {"coeffs": out}


def classify(s):
    return json.loads(_rebit.classify(_encode(s)))


def decompose(s):
    return json.loads(_rebit.decompose(_encode(s)))


def invariants(s):
    return json.loads(_rebit.invariants(_encode(s)))


def h1(group):
    return json.loads(_rebit.h1(group))


def run(*args):
    """Run the command-line front end; returns (exit code, stdout, stderr)."""
    return _rebit.run(list(args))


def selftest(only=(), seed=None):
    if seed is None:
        return _rebit.selftest(list(only))
    return _rebit.selftest(list(only), seed)
