"""Entire functions of Laguerre-Polya type acting as differential operators.

An ``LPFunction`` stores the parameters (c, m, a, b, alphas) of
c x^m e^{-a^2 x^2 + b x} prod (1 - alpha_k x) e^{alpha_k x}, with the
canonical product truncated to finitely many factors (any action on a
degree-n polynomial only sees the Maclaurin prefix, and the approximant
machinery controls the truncation error empirically).  Maclaurin prefixes
are computed exactly by truncated series multiplication when the
parameters are rational.

A ``DiffOperator`` is a Maclaurin prefix a_m..a_N acting by
f(D)[P] = sum a_k P^(k), optionally rescaled so monic degree-n inputs map
to monic degree-(n-m) outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegreeTooSmall, ZeroTopTerm
from .poly import (HyperbolicPoly, coeff_derivative, hyperbolic_from_coeffs,
                   taylor_shift)
from .scalars import RATIONAL, Scalar, infer_mode


def _zero_like(values) -> Scalar:
    return Fraction(0) if infer_mode(values) == RATIONAL else 0.0


def _mul_trunc(a: list, b: list, n: int) -> list:
    out = [a[0] * 0] * (n + 1)
    for i, av in enumerate(a):
        if i > n or av == 0:
            continue
        for j, bv in enumerate(b):
            if i + j > n:
                break
            out[i + j] += av * bv
    return out


@dataclass(frozen=True)
class LPFunction:
    """Parameters of a (finitely truncated) Laguerre-Polya class function."""

    c: Scalar = 1
    m: int = 0
    a: Scalar = 0
    b: Scalar = 0
    alphas: tuple = ()

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("leading constant c must be nonzero")
        if self.m < 0:
            raise ValueError("vanishing order m must be nonnegative")
        object.__setattr__(self, "alphas", tuple(self.alphas))

    @property
    def mode(self) -> str:
        return infer_mode((self.c, self.a, self.b) + self.alphas)

    @property
    def in_lp_prime(self) -> bool:
        """The zero-drift subclass (b = 0): barycenter-preserving operators."""
        return self.b == 0

    def maclaurin_prefix(self, n: int) -> tuple:
        """Maclaurin coefficients a_0..a_N; exact for rational parameters.

        The first m entries vanish and a_m = c.
        """
        if n < self.m:
            raise DegreeTooSmall(f"prefix length {n} below vanishing order {self.m}")
        exact = self.mode == RATIONAL
        one = Fraction(1) if exact else 1.0
        k = n - self.m
        series = [one]

        if self.b != 0:
            b = Fraction(self.b) if exact else float(self.b)
            expb = [b ** i / math.factorial(i) for i in range(k + 1)]
            series = _mul_trunc(series, expb, k)
        if self.a != 0:
            a2 = (Fraction(self.a) if exact else float(self.a)) ** 2
            gauss = [one * 0] * (k + 1)
            for i in range(0, k + 1, 2):
                gauss[i] = (-a2) ** (i // 2) / math.factorial(i // 2)
            series = _mul_trunc(series, gauss, k)
        for alpha in self.alphas:
            if alpha == 0:
                continue
            al = Fraction(alpha) if exact else float(alpha)
            fac = [one] + [one * 0] + [
                al ** i * (1 - i) / math.factorial(i) for i in range(2, k + 1)]
            series = _mul_trunc(series, fac, k)

        c = Fraction(self.c) if exact else float(self.c)
        prefix = [one * 0] * self.m + [c * v for v in series]
        return tuple(prefix[:n + 1])

    def deform(self, s) -> "LPFunction":
        """The s-deformation: s_0 rescales the Gaussian decay, s_k rescales
        alpha_k; grading and drift are untouched.  Missing entries mean 1."""
        entries = tuple(s.entries if isinstance(s, DeformationVector) else s)

        def at(i):
            return entries[i] if i < len(entries) else 1

        new_alphas = tuple(at(k + 1) * al for k, al in enumerate(self.alphas))
        return LPFunction(self.c, self.m, at(0) * self.a, self.b, new_alphas)

    def scale_argument(self, s: Scalar) -> "LPFunction":
        """The function x -> phi(s x), again of Laguerre-Polya type."""
        if s == 0:
            if self.m != 0:
                raise DegreeTooSmall("phi(0 * x) vanishes identically for m > 0")
            return LPFunction(self.c, 0, 0, 0, ())
        return LPFunction(self.c * s ** self.m, self.m, s * self.a,
                          s * self.b, tuple(s * al for al in self.alphas))

    def approximant(self, j: int, n_j: int) -> tuple:
        """Coefficients of the j-th hyperbolic polynomial approximant.

        c x^m (1 - a^2 x^2 / j)^j (1 + tau_j x / n_j)^{n_j}
        prod_{v<=j} (1 - alpha_v x), with tau_j = b + sum_{v<=j} alpha_v.
        Alphas beyond the stored list count as zero (their factors reduce
        to 1).  The Maclaurin prefix converges entrywise to the function's
        as j and n_j grow.
        """
        if j < 1 or n_j < 1:
            raise ValueError("approximant needs j >= 1 and n_j >= 1")
        exact = self.mode == RATIONAL
        one = Fraction(1) if exact else 1.0
        alphas = [Fraction(a) if exact else float(a) for a in self.alphas[:j]]
        tau = (Fraction(self.b) if exact else float(self.b)) + sum(alphas)

        poly = [one]
        if self.a != 0:
            a2j = (Fraction(self.a) if exact else float(self.a)) ** 2 / j
            quad = [one]
            for _ in range(j):
                quad = _mul_trunc(quad, [one, one * 0, -a2j], len(quad) + 1)
            poly = _mul_trunc(poly, quad, len(poly) + len(quad))
        if tau != 0:
            lin = [one, tau / n_j]
            for _ in range(n_j):
                poly = _mul_trunc(poly, lin, len(poly))
        for al in alphas:
            if al != 0:
                poly = _mul_trunc(poly, [one, -al], len(poly))
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        c = Fraction(self.c) if exact else float(self.c)
        return tuple([one * 0] * self.m + [c * v for v in poly])


@dataclass(frozen=True)
class DeformationVector:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))


def deformation_leq(s, t) -> bool:
    """The coordinatewise order: |s_i| <= |t_i| and s_i t_i >= 0.

    Entries beyond either vector default to 1 (the identity deformation).
    """
    se = tuple(s.entries if isinstance(s, DeformationVector) else s)
    te = tuple(t.entries if isinstance(t, DeformationVector) else t)
    length = max(len(se), len(te))
    for i in range(length):
        si = se[i] if i < len(se) else 1
        ti = te[i] if i < len(te) else 1
        if abs(si) > abs(ti) or si * ti < 0:
            return False
    return True


@dataclass(frozen=True)
class DiffOperator:
    """f(D) known through the Maclaurin prefix a_m..a_N of f.

    With ``norm_degree`` set to n, the action is rescaled by
    1 / (C(n, m) * m! * a_m) so monic degree-n inputs give monic
    degree-(n-m) outputs.
    """

    order: int
    coeffs: tuple
    norm_degree: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroTopTerm("the leading prefix coefficient a_m must be nonzero")

    @classmethod
    def from_function(cls, phi: LPFunction, degree: int,
                      normalized: bool = True) -> "DiffOperator":
        """The operator D(phi, n) (or plain phi(D)) ready for degree-n inputs."""
        if normalized and degree < phi.m:
            raise DegreeTooSmall(
                f"cannot normalize at degree {degree} below order {phi.m}")
        prefix = phi.maclaurin_prefix(max(degree, phi.m))
        return cls(phi.m, prefix[phi.m:], degree if normalized else None)

    @property
    def normalizer(self) -> Scalar:
        """The rescaling factor; 1 when the operator is unnormalized."""
        if self.norm_degree is None:
            return 1
        am = self.coeffs[0]
        denom = math.comb(self.norm_degree, self.order) * math.factorial(self.order)
        if isinstance(am, float):
            return 1.0 / (denom * am)
        return Fraction(1, denom) / am

    def apply_coeffs(self, pc: Sequence) -> tuple:
        """sum_k a_k P^(k) on a low-first coefficient vector.

        Degree n input gives degree n - m output; n = m collapses to a
        constant and n < m to the zero polynomial.
        """
        d = list(pc)
        zero = d[0] * 0 if d else 0
        for _ in range(self.order):
            d = coeff_derivative(d)
        if not d:
            return (zero,)
        out = [zero] * len(d)
        for a in self.coeffs:
            if a != 0:
                for i, v in enumerate(d):
                    out[i] += a * v
            d = coeff_derivative(d)
            if not d:
                break
        k = self.normalizer
        if k != 1:
            out = [k * v for v in out]
        return tuple(out)


def apply_operator(op: DiffOperator, p: HyperbolicPoly,
                   tol: float | None = None) -> HyperbolicPoly:
    """Root form of op[P]; the image is hyperbolic, so extraction is safe.

    A ``NotRealRooted`` escaping from here signals numerical failure,
    never a failure of the theory.
    """
    if p.degree <= op.order:
        raise DegreeTooSmall(
            f"degree {p.degree} input collapses under an order-{op.order} "
            "operator; root form needs degree >= order + 1")
    return hyperbolic_from_coeffs(op.apply_coeffs(p.coefficients()), tol)


def appell(phi: LPFunction, n: int, normalized: bool = True) -> tuple:
    """Coefficients of phi(D)[x^n] (the n-th Appell polynomial of phi)."""
    if n < phi.m + 1:
        raise DegreeTooSmall(f"appell needs n >= m + 1 = {phi.m + 1}")
    exact = phi.mode == RATIONAL
    one = Fraction(1) if exact else 1.0
    xn = [one * 0] * n + [one]
    return DiffOperator.from_function(phi, n, normalized).apply_coeffs(xn)


def shift_pencil_coeffs(p: HyperbolicPoly, lam: Scalar) -> tuple:
    """(1 - lam D) e^{lam D} P = P(x + lam) - lam P'(x + lam), by coefficients."""
    c = taylor_shift(p, lam).coefficients()
    lam = c[0] * 0 + lam  # match the polynomial's scalar mode
    return tuple(c[i] - lam * (i + 1) * c[i + 1] for i in range(len(c) - 1)
                 ) + (c[-1],)


def shift_pencil(p: HyperbolicPoly, lam: Scalar,
                 tol: float | None = None) -> HyperbolicPoly:
    if p.degree < 1:
        raise DegreeTooSmall("shift pencil needs degree >= 1")
    return hyperbolic_from_coeffs(shift_pencil_coeffs(p, lam), tol)


def gaussian_coeffs(p: HyperbolicPoly, a: Scalar) -> tuple:
    """e^{-a D^2} P = sum (-a)^k P^(2k) / k!, a finite sum."""
    c = list(p.coefficients())
    a = c[0] * 0 + a
    out = list(c)
    d = c
    k = 0
    while True:
        k += 1
        d = coeff_derivative(coeff_derivative(d))
        if not d:
            break
        factor = (-a) ** k / math.factorial(k)
        for i, v in enumerate(d):
            out[i] += factor * v
    return tuple(out)


def gaussian_op(p: HyperbolicPoly, a: Scalar,
                tol: float | None = None) -> HyperbolicPoly:
    """Root form of the Gaussian heat flow; a < 0 leaves the
    Laguerre-Polya regime (images need not stay real-rooted), accepted
    for experimentation."""
    return hyperbolic_from_coeffs(gaussian_coeffs(p, a), tol)


# --- multiplier sequences -----------------------------------------------------

@dataclass(frozen=True)
class MultiplierSequence:
    """Diagonal action gamma_k on the monomial basis: T[x^k] = gamma_k x^k."""

    gammas: tuple

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(self.gammas))

    def normalized_truncation(self, n: int) -> "MultiplierSequence":
        """gamma_k / gamma_n for k = 0..n, the degree-preserving rescale."""
        g = self._padded(n)
        if g[n] == 0:
            raise ZeroTopTerm(f"gamma_{n} vanishes; cannot normalize")
        return MultiplierSequence(tuple(_exact_div(v, g[n]) for v in g))

    def _padded(self, n: int) -> list:
        g = list(self.gammas[:n + 1])
        g += [0] * (n + 1 - len(g))
        return g


def _exact_div(num, den):
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num, 1) / den


def multiplier_apply(seq, pc: Sequence, n: Optional[int] = None,
                     normalized: bool = False) -> tuple:
    """Coefficientwise scaling of a polynomial by a multiplier sequence."""
    gammas = seq.gammas if isinstance(seq, MultiplierSequence) else tuple(seq)
    ms = MultiplierSequence(gammas)
    if n is None:
        n = len(pc) - 1
    if normalized:
        ms = ms.normalized_truncation(n)
    g = ms._padded(n)
    return tuple(g[k] * pc[k] if k < len(pc) else g[k] * 0
                 for k in range(n + 1))


def falling_product(m: int) -> "callable":
    def h(x):
        out = 1 if not isinstance(x, float) else 1.0
        for i in range(m):
            out = out * (x - i)
        return out
    return h


def laguerre_ms(m: int, p: int, length: int) -> MultiplierSequence:
    """The sequence gamma_k = H(k + p) with H(x) = x(x-1)...(x-m+1).

    A multiplier sequence of the first kind; its operator has the closed
    form x^{m-p} [x^p P]^{(m)} (see ``laguerre_closed_form``).
    """
    if m < 1 or p < 0:
        raise ValueError("need m >= 1 and p >= 0")
    h = falling_product(m)
    return MultiplierSequence(tuple(h(k + p) for k in range(length)))


def laguerre_closed_form(m: int, p: int, pc: Sequence) -> tuple:
    """x^{m-p} [x^p P]^{(m)} evaluated on coefficients, exactly."""
    zero = pc[0] * 0 if len(pc) else 0
    work = [zero] * p + list(pc)
    for _ in range(m):
        work = list(coeff_derivative(work)) or [zero]
    if m >= p:
        return tuple([zero] * (m - p) + work)
    drop = p - m
    assert all(v == 0 for v in work[:drop])
    return tuple(work[drop:]) or (zero,)
