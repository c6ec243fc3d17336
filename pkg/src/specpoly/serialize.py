"""JSON wire formats for polynomials, certificates, witnesses and chains.

Rationals travel as "p/q" strings so exactness survives the round trip;
floats stay native JSON numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .contract import ContractionChain, ContractionStep
from .errors import ConfigError
from .lpops import LPFunction
from .majorize import DoublyStochasticWitness, MajorizationCertificate
from .poly import HyperbolicPoly, from_roots, hyperbolic_from_coeffs
from .scalars import FLOAT, RATIONAL, parse_scalar, scalar_to_json


def poly_to_json(p: HyperbolicPoly) -> dict:
    return {"mode": p.mode, "roots": [scalar_to_json(r) for r in p.roots]}


def poly_from_json(obj, tol: float | None = None) -> HyperbolicPoly:
    """Accepts {"mode", "roots"}, a bare root list, or {"coeffs": [...]}.

    Coefficient import runs the root finder, so it always yields a
    float-mode polynomial and requires the input to be real-rooted.
    """
    if isinstance(obj, (list, tuple)):
        return from_roots([parse_scalar(v) for v in obj])
    if not isinstance(obj, dict):
        raise ConfigError(f"cannot read a polynomial from {obj!r}")
    if "coeffs" in obj:
        return hyperbolic_from_coeffs(
            [float(parse_scalar(v)) for v in obj["coeffs"]], tol)
    if "roots" not in obj:
        raise ConfigError("polynomial JSON needs 'roots' or 'coeffs'")
    mode = obj.get("mode")
    if mode is not None and mode not in (RATIONAL, FLOAT):
        raise ConfigError(f"unknown mode {mode!r}")
    return from_roots([parse_scalar(v) for v in obj["roots"]], mode)


def certificate_to_json(cert: MajorizationCertificate) -> dict:
    return {
        "verdict": cert.verdict.value,
        "sum_residual": scalar_to_json(cert.sum_residual),
        "slacks": [scalar_to_json(s) for s in cert.slacks],
        "tol": scalar_to_json(cert.tol),
    }


def witness_to_json(w: DoublyStochasticWitness) -> list:
    return [[scalar_to_json(v) for v in row] for row in w.matrix]


def witness_from_json(rows) -> DoublyStochasticWitness:
    return DoublyStochasticWitness(
        tuple(tuple(Fraction(parse_scalar(v)) for v in row) for row in rows))


def chain_to_json(chain: ContractionChain) -> dict:
    return {
        "source": poly_to_json(chain.source),
        "steps": [{"k": s.k, "l": s.l, "t": scalar_to_json(s.t)}
                  for s in chain.steps],
        "target": poly_to_json(chain.target),
    }


def chain_from_json(obj) -> ContractionChain:
    steps = tuple(ContractionStep(s["k"], s["l"], parse_scalar(s["t"]))
                  for s in obj["steps"])
    return ContractionChain(poly_from_json(obj["source"]), steps,
                            poly_from_json(obj["target"]))


def lp_to_json(phi: LPFunction) -> dict:
    return {
        "c": scalar_to_json(phi.c),
        "m": phi.m,
        "a": scalar_to_json(phi.a),
        "b": scalar_to_json(phi.b),
        "alphas": [scalar_to_json(a) for a in phi.alphas],
    }


def lp_from_json(obj) -> LPFunction:
    return LPFunction(
        c=parse_scalar(obj.get("c", 1)),
        m=int(obj.get("m", 0)),
        a=parse_scalar(obj.get("a", 0)),
        b=parse_scalar(obj.get("b", 0)),
        alphas=tuple(parse_scalar(v) for v in obj.get("alphas", ())),
    )
