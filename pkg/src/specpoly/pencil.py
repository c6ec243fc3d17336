"""Dynamics of the pencil P - lam * P': root and critical trajectories.

Sampling a pencil at lam yields the sorted roots x_i(lam), the critical
points w_j(lam), and the drift-corrected partial sums
f_m(lam) = sum_{i<=m} (x_i(lam) - lam).  For 1 <= m <= n-1 these are
nondecreasing left of 0 and nonincreasing right of 0, while f_n is
constant; the scanner samples a grid and reports the worst violation.

Trajectory continuity across lam is enforced by sorting, which is valid
because the roots stay real along the whole pencil.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch
from .majorize import MajorizationCertificate, check_majorization
from .poly import HyperbolicPoly
from .roots import real_roots_with_criticals
from .scalars import Scalar


@dataclass(frozen=True)
class PencilSample:
    lam: float
    roots: tuple
    criticals: tuple
    partial_sums: tuple  # f_1 .. f_n

    def interlaces(self) -> bool:
        x, w = self.roots, self.criticals
        return all(x[j] < w[j] < x[j + 1] for j in range(len(w)))


def pencil_coeffs(p: HyperbolicPoly, lam: Scalar) -> tuple:
    c = p.coefficients()
    lam = c[0] * 0 + lam
    return tuple(c[i] - lam * (i + 1) * c[i + 1] for i in range(len(c) - 1)
                 ) + (c[-1],)


def pencil_at(p: HyperbolicPoly, lam: float,
              tol: float | None = None) -> PencilSample:
    """Sample the pencil at one lam (float computation throughout)."""
    lam = float(lam)
    pf = p.to_float()
    roots, crits = real_roots_with_criticals(pencil_coeffs(pf, lam), tol)
    sums = []
    acc = 0.0
    for r in roots:
        acc += r - lam
        sums.append(acc)
    return PencilSample(lam, roots, crits, tuple(sums))


def default_grid(p: HyperbolicPoly, points: int = 201) -> tuple:
    """Uniform grid over [-L, L], L = 1 + twice the root radius; contains 0."""
    if points < 3 or points % 2 == 0:
        points += 1 - points % 2
        points = max(points, 3)
    radius = float(p.root_radius())
    span = 1.0 + 2.0 * radius
    half = points // 2
    return tuple(span * k / half for k in range(-half, half + 1))


@dataclass(frozen=True)
class MonotonicityReport:
    """Worst slope violation per truncated sum, plus the f_n drift."""

    worst_per_m: tuple  # index m-1: worst monotonicity violation of f_m
    fn_drift: float     # max |f_n(lam) - f_n(0)| over the grid
    samples: int

    @property
    def worst_violation(self) -> float:
        return max(self.worst_per_m) if self.worst_per_m else 0.0

    def passed(self, slack: float, fn_tol: float) -> bool:
        return self.worst_violation <= slack and self.fn_drift <= fn_tol


def scan_monotonicity(p: HyperbolicPoly, grid, tol: float | None = None,
                      ) -> MonotonicityReport:
    """Check the up-down monotonicity of every f_m over a sorted grid.

    The grid must be sorted and contain 0 (the turning point).  Reports,
    for each m in 1..n-1, the largest increase of f_m across adjacent grid
    points on the wrong side of 0, and the drift of f_n from its value at
    lam = 0.
    """
    grid = tuple(float(g) for g in grid)
    if any(grid[i] > grid[i + 1] for i in range(len(grid) - 1)):
        raise ValueError("grid must be sorted")
    if not any(g == 0.0 for g in grid):
        raise ValueError("grid must contain 0")
    n = p.degree
    samples = [pencil_at(p, g, tol) for g in grid]
    base = next(s for s in samples if s.lam == 0.0)

    worst = [0.0] * (n - 1)
    for a, b in zip(samples, samples[1:]):
        for m in range(1, n):
            delta = b.partial_sums[m - 1] - a.partial_sums[m - 1]
            if b.lam <= 0.0:
                bad = -delta    # should be nondecreasing left of 0
            elif a.lam >= 0.0:
                bad = delta     # nonincreasing right of 0
            else:
                continue        # straddles 0: no claim
            if bad > worst[m - 1]:
                worst[m - 1] = bad
    drift = max(abs(s.partial_sums[-1] - base.partial_sums[-1])
                for s in samples)
    return MonotonicityReport(tuple(worst), drift, len(samples))


def pencil_majorization_check(p: HyperbolicPoly, q: HyperbolicPoly,
                              lam: float, tol: float | None = None,
                              root_tol: float | None = None,
                              ) -> MajorizationCertificate:
    """Certificate comparing the pencils of Q and P at one lam.

    Both pencils are monic of the same degree, so comparing their root
    tuples is well-posed.  Callers are expected to have Q majorized by P
    already; the certificate then lands in Less/Equal for every real lam.
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")
    sample_p = pencil_at(p, lam, root_tol)
    sample_q = pencil_at(q, lam, root_tol)
    return check_majorization(sample_q.roots, sample_p.roots, tol)
