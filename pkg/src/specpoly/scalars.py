"""Scalar modes.

A computation runs either in exact rational arithmetic (``fractions.Fraction``)
or in IEEE double precision, never mixed.  Mode is carried by the containers
(polynomials, tuples); these helpers infer, validate and coerce.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import ModeMismatch, NonFinite

RATIONAL = "rational"
FLOAT = "float"

Scalar = Union[Fraction, int, float]


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def infer_mode(values: Iterable[Scalar]) -> str:
    """Mode of a collection: FLOAT if any float appears, else RATIONAL."""
    mode = RATIONAL
    for v in values:
        if isinstance(v, float):
            mode = FLOAT
        elif not is_exact(v):
            raise TypeError(f"unsupported scalar type {type(v).__name__}")
    return mode


def coerce(value: Scalar, mode: str) -> Scalar:
    if mode == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                raise NonFinite(f"non-finite value {value!r}")
            return Fraction(value)
        return Fraction(value)
    out = float(value)
    if not math.isfinite(out):
        raise NonFinite(f"non-finite value {value!r}")
    return out


def coerce_all(values: Iterable[Scalar], mode: str) -> tuple:
    return tuple(coerce(v, mode) for v in values)


def require_same_mode(a: str, b: str) -> str:
    if a != b:
        raise ModeMismatch(f"cannot mix {a} and {b} operands")
    return a


def check_finite(values: Iterable[Scalar]) -> None:
    for v in values:
        if isinstance(v, float) and not math.isfinite(v):
            raise NonFinite(f"non-finite entry {v!r}")


def parse_scalar(text) -> Scalar:
    """Parse a JSON scalar: numbers pass through, ``"p/q"`` strings are exact."""
    if isinstance(text, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(text, (int, float)):
        return text
    if isinstance(text, str):
        return Fraction(text)
    raise TypeError(f"cannot parse scalar from {text!r}")


def scalar_to_json(value: Scalar):
    if isinstance(value, Fraction):
        return str(value)
    return value
