"""Monic real-rooted (hyperbolic) polynomials, stored by their roots.

The sorted root tuple is the primary representation; the monic coefficient
vector is derived on demand and cached.  Everything a theorem in this
domain says is said about root tuples, so coefficient form exists only to
feed differential operators and the root finder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import roots as _rootfind
from .errors import DegreeTooSmall, EmptyTuple, NonPositiveEps
from .scalars import (FLOAT, RATIONAL, Scalar, check_finite, coerce,
                      coerce_all, infer_mode)


@dataclass(frozen=True)
class HyperbolicPoly:
    """Monic polynomial with all-real roots, identified with its root tuple."""

    roots: tuple
    mode: str

    @property
    def degree(self) -> int:
        return len(self.roots)

    def coefficients(self) -> tuple:
        """Monic coefficient vector, low degree first, length degree+1."""
        cached = self.__dict__.get("_coeffs")
        if cached is None:
            cached = expand_from_roots(self.roots, self.mode)
            self.__dict__["_coeffs"] = cached
        return cached

    def root_sum(self) -> Scalar:
        return sum(self.roots)

    def barycenter(self) -> Scalar:
        if self.mode == RATIONAL:
            return Fraction(self.root_sum(), self.degree)
        return self.root_sum() / self.degree

    def root_radius(self) -> Scalar:
        return max(abs(self.roots[0]), abs(self.roots[-1]))

    def to_float(self) -> "HyperbolicPoly":
        if self.mode == FLOAT:
            return self
        return HyperbolicPoly(tuple(float(r) for r in self.roots), FLOAT)

    def __str__(self) -> str:
        return f"HyperbolicPoly(deg={self.degree}, roots={self.roots})"


@dataclass(frozen=True)
class StrictnessReport:
    is_strict: bool
    min_gap: Optional[Scalar]  # None when degree 1 (no consecutive pairs)


def from_roots(root_values: Sequence[Scalar], mode: str | None = None,
               ) -> HyperbolicPoly:
    """Build the monic polynomial with exactly the given real roots.

    The mode is inferred (any float entry makes the whole polynomial
    float) unless given explicitly.
    """
    values = tuple(root_values)
    if not values:
        raise EmptyTuple("a hyperbolic polynomial needs at least one root")
    check_finite(values)
    if mode is None:
        mode = infer_mode(values)
    return HyperbolicPoly(tuple(sorted(coerce_all(values, mode))), mode)


def expand_from_roots(root_values: Sequence[Scalar], mode: str) -> tuple:
    """Coefficients of prod (x - r), low degree first, leading term exactly 1."""
    zero = Fraction(0) if mode == RATIONAL else 0.0
    one = Fraction(1) if mode == RATIONAL else 1.0
    coeffs = [one]
    for r in root_values:
        nxt = [zero] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i] -= r * a
            nxt[i + 1] += a
        coeffs = nxt
    coeffs[-1] = one
    return tuple(coeffs)


def to_coefficients(p: HyperbolicPoly) -> tuple:
    return p.coefficients()


def real_roots(coeffs: Sequence, tol: float | None = None) -> tuple[float, ...]:
    """Root tuple of a real-rooted coefficient vector (float mode)."""
    return _rootfind.real_roots(coeffs, tol)


def hyperbolic_from_coeffs(coeffs: Sequence, tol: float | None = None,
                           ) -> HyperbolicPoly:
    """Extract roots from a real-rooted coefficient vector.

    Always produces a float-mode polynomial: this is the one-way door out
    of exact arithmetic.
    """
    return HyperbolicPoly(_rootfind.real_roots(coeffs, tol), FLOAT)


def coeff_derivative(coeffs: Sequence) -> tuple:
    return tuple(coeffs[k] * k for k in range(1, len(coeffs)))


def derivative(p: HyperbolicPoly, tol: float | None = None) -> HyperbolicPoly:
    """The monic normalization P'/n of the derivative.

    Root extraction is numeric, so the result is float mode regardless of
    the input mode; the roots interlace those of P by Rolle's theorem.
    """
    n = p.degree
    if n < 2:
        raise DegreeTooSmall("derivative needs degree >= 2")
    dc = [float(c) * k / n for k, c in enumerate(p.coefficients()) if k >= 1]
    return hyperbolic_from_coeffs(dc, tol)


def taylor_shift(p: HyperbolicPoly, lam: Scalar) -> HyperbolicPoly:
    """P(x + lam); in root space the roots just translate by -lam."""
    lam = coerce(lam, p.mode)
    return HyperbolicPoly(tuple(r - lam for r in p.roots), p.mode)


def strict_perturb(p: HyperbolicPoly, eps: Scalar) -> HyperbolicPoly:
    """Split multiple roots without moving the barycenter.

    Root i moves down by (n-i)*eps for i < n and the top root moves up by
    n(n-1)/2 * eps, so consecutive gaps grow by eps and the root sum is
    unchanged (exactly, in rational mode).  As eps -> 0 the result
    converges to P in matching distance.
    """
    eps = coerce(eps, p.mode)
    if not eps > 0:
        raise NonPositiveEps("perturbation size must be positive")
    n = p.degree
    shifted = [p.roots[i] - (n - 1 - i) * eps for i in range(n - 1)]
    half = Fraction(n * (n - 1), 2) if p.mode == RATIONAL else n * (n - 1) / 2
    shifted.append(p.roots[-1] + half * eps)
    return HyperbolicPoly(tuple(shifted), p.mode)


def strictness(p: HyperbolicPoly) -> StrictnessReport:
    if p.degree == 1:
        return StrictnessReport(True, None)
    gap = min(p.roots[i + 1] - p.roots[i] for i in range(p.degree - 1))
    return StrictnessReport(gap > 0, gap)


def is_strict(p: HyperbolicPoly) -> bool:
    return strictness(p).is_strict


def eval_poly(coeffs: Sequence, x: Scalar) -> Scalar:
    acc = 0 * x
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc
