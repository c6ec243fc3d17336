"""Pencil trajectories and the up-down monotonicity of partial sums."""

import math
import random

import pytest

from specpoly import (Verdict, from_roots, pencil_at,
                      pencil_majorization_check, scan_monotonicity)
from specpoly.errors import DegreeMismatch
from specpoly.harness import random_hyperbolic
from specpoly.pencil import default_grid, pencil_coeffs


def test_pencil_coeffs_x_squared():
    p = from_roots([0.0, 0.0])
    assert pencil_coeffs(p, 3.0) == (0.0, -6.0, 1.0)


def test_pencil_sample_x_squared():
    p = from_roots([0.0, 0.0])
    for lam in (-2.0, -1.0, 0.0, 1.0, 2.0):
        s = pencil_at(p, lam)
        expect = tuple(sorted((0.0, 2 * lam)))
        assert max(abs(a - b) for a, b in zip(s.roots, expect)) < 1e-9
        assert abs(s.partial_sums[0] - (-abs(lam))) < 1e-9
        assert abs(s.partial_sums[1]) < 1e-9


def test_pencil_sample_shifted_quadratic():
    p = from_roots([-1.0, 1.0])
    s = pencil_at(p, 1.0)   # x^2 - 2x - 1, roots 1 +- sqrt(2)
    expect = (1 - math.sqrt(2), 1 + math.sqrt(2))
    assert max(abs(a - b) for a, b in zip(s.roots, expect)) < 1e-9
    assert abs(s.partial_sums[-1] - 0.0) < 1e-9


def test_pencil_at_lambda_zero_recovers_roots():
    p = from_roots([-2.0, 0.5, 3.0])
    s = pencil_at(p, 0.0)
    assert max(abs(a - b) for a, b in zip(s.roots, p.roots)) < 1e-8
    assert s.interlaces()


def test_interlacing_along_pencil():
    rng = random.Random(17)
    for _ in range(30):
        p = random_hyperbolic(rng, rng.randint(2, 7), bound=5, mode="float",
                              min_gap=0.3)
        for lam in (-4.0, -0.5, 0.0, 0.5, 4.0):
            assert pencil_at(p, lam, tol=1e-12).interlaces()


def test_scan_x_squared_zero_violations():
    p = from_roots([0.0, 0.0])
    report = scan_monotonicity(p, (-2.0, -1.0, 0.0, 1.0, 2.0))
    assert report.worst_violation < 1e-9   # extraction noise only
    assert report.fn_drift < 1e-9


def test_scan_requires_sorted_grid_with_zero():
    p = from_roots([0.0, 1.0])
    with pytest.raises(ValueError):
        scan_monotonicity(p, (1.0, -1.0, 0.0))
    with pytest.raises(ValueError):
        scan_monotonicity(p, (-1.0, 1.0))


def test_scan_random_polys():
    rng = random.Random(23)
    for _ in range(20):
        p = random_hyperbolic(rng, rng.randint(2, 8), bound=5, mode="float",
                              min_gap=0.3)
        grid = default_grid(p, 101)
        report = scan_monotonicity(p, grid, tol=1e-11)
        assert report.worst_violation <= 1e-7
        scale = 1.0 + sum(abs(r) for r in p.roots)
        assert report.fn_drift <= 1e-8 * scale


def test_fm_concavity_probe_informational():
    # second differences of f_m over a uniform grid stay below tolerance;
    # this mirrors a known sharpening and is informational only
    rng = random.Random(29)
    p = random_hyperbolic(rng, 5, bound=4, mode="float", min_gap=0.4)
    grid = default_grid(p, 81)
    samples = [pencil_at(p, g, tol=1e-12) for g in grid]
    for m in range(1, p.degree):
        vals = [s.partial_sums[m - 1] for s in samples]
        second = [vals[i - 1] - 2 * vals[i] + vals[i + 1]
                  for i in range(1, len(vals) - 1)]
        assert max(second) <= 1e-7


def test_default_grid_shape():
    p = from_roots([-3.0, 7.0])
    grid = default_grid(p, 201)
    assert len(grid) == 201
    assert grid[0] == -grid[-1] == -(1 + 2 * 7.0)
    assert 0.0 in grid


def test_pencil_majorization_fixture():
    p = from_roots([0.0, 4.0])
    q = from_roots([1.0, 3.0])
    cert = pencil_majorization_check(p, q, 1.0)
    assert cert.verdict is Verdict.LESS
    # pencils at lam=1: x^2-6x+4 (roots 3 +- sqrt 5) vs x^2-6x+7
    # (roots 3 +- sqrt 2); top-root slack is sqrt(5) - sqrt(2)
    assert abs(float(cert.slacks[0])
               - (math.sqrt(5) - math.sqrt(2))) < 1e-8
    assert abs(float(cert.sum_residual)) < 1e-9


def test_pencil_majorization_reduces_at_zero():
    p = from_roots([0.0, 2.0, 7.0])
    q = from_roots([1.0, 2.0, 6.0])
    cert = pencil_majorization_check(p, q, 0.0)
    assert cert.verdict is Verdict.LESS


def test_pencil_majorization_equal_inputs():
    p = from_roots([0.0, 4.0])
    for lam in (-3.0, 0.0, 2.5):
        assert pencil_majorization_check(p, p, lam).verdict is Verdict.EQUAL


def test_pencil_majorization_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        pencil_majorization_check(from_roots([0.0]), from_roots([0.0, 1.0]), 1.0)
