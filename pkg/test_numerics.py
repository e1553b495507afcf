"""
Tests for the scalar numerics: binary entropy, its inverse, the star
convolution, binomials and the one-dimensional maximizers.

Usage:
    pytest test_numerics.py
"""

import math

import numpy as np
import pytest

from zero_error_adder.errors import DomainError
from zero_error_adder.numerics import (
    binary_entropy, binary_entropy_array, binomial, golden_section_max,
    grid_refine_max, inv_binary_entropy, star,
)


# ============================================================
# ENTROPY
# ============================================================

def test_binary_entropy_known_values():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == pytest.approx(1.0)
    assert binary_entropy(1 / 3) == pytest.approx(0.918296, abs=1e-6)


def test_binary_entropy_rejects_out_of_range():
    with pytest.raises(DomainError):
        binary_entropy(1.2)
    with pytest.raises(DomainError):
        binary_entropy(-0.1)


def test_binary_entropy_array_matches_scalar():
    ps = np.array([0.0, 0.05, 0.2, 0.5, 0.9, 1.0])
    values = binary_entropy_array(ps)
    for p, v in zip(ps, values):
        assert v == pytest.approx(binary_entropy(float(p)), abs=1e-15)


def test_inverse_entropy_endpoints():
    assert inv_binary_entropy(0.0) == 0.0
    assert inv_binary_entropy(1.0) == 0.5
    assert inv_binary_entropy(0.918296) == pytest.approx(1 / 3, abs=1e-5)


def test_inverse_entropy_identity():
    for x in np.linspace(0.0, 1.0, 101):
        p = inv_binary_entropy(float(x))
        assert 0.0 <= p <= 0.5
        assert binary_entropy(p) == pytest.approx(float(x), abs=1e-10)


def test_binary_entropy_is_symmetric():
    for p in np.linspace(0.0, 1.0, 201):
        p = float(p)
        assert binary_entropy(p) == pytest.approx(binary_entropy(1.0 - p), abs=1e-12)


def test_inverse_entropy_is_nondecreasing():
    values = [inv_binary_entropy(float(x)) for x in np.linspace(0.0, 1.0, 501)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_inverse_entropy_rejects_out_of_range():
    with pytest.raises(DomainError):
        inv_binary_entropy(1.5)


# ============================================================
# STAR AND BINOMIALS
# ============================================================

def test_star():
    assert star(0.1, 0.1) == pytest.approx(0.18)
    assert star(0.0, 0.3) == pytest.approx(0.3)
    assert star(0.5, 0.2) == pytest.approx(0.5)


def test_star_is_commutative_and_associative():
    grid = [float(p) for p in np.linspace(0.0, 1.0, 11)]
    for a in grid:
        for b in grid:
            assert star(a, b) == pytest.approx(star(b, a), abs=1e-12)
            for c in grid:
                assert star(star(a, b), c) == pytest.approx(star(a, star(b, c)), abs=1e-12)


def test_binomial_subset_identity():
    # Choosing a t-set and a d-subset of it, in either order
    for n in range(31):
        for t in range(n + 1):
            for d in range(t + 1):
                assert binomial(n, t) * binomial(t, d) == binomial(n, d) * binomial(n - d, t - d)


def test_binomial_is_exact():
    assert binomial(5, 2) == 10
    assert binomial(5, 0) == 1
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(100, 50) == math.comb(100, 50)
    with pytest.raises(DomainError):
        binomial(-1, 0)


# ============================================================
# MAXIMIZERS
# ============================================================

def test_golden_section_finds_peak():
    x, value = golden_section_max(lambda t: -(t - 0.3) ** 2, 0.0, 1.0, 1e-9)
    assert x == pytest.approx(0.3, abs=1e-6)
    assert value == pytest.approx(0.0, abs=1e-12)


def test_golden_section_degenerate_interval():
    x, value = golden_section_max(lambda t: t, 0.25, 0.25, 1e-9)
    assert x == 0.25
    assert value == 0.25


def test_grid_refine_improves_on_grid():
    # The kink at 0.5 is not a grid point of a 10-point grid
    f_grid = lambda xs: np.minimum(xs, 1.0 - xs)
    f_point = lambda x: min(x, 1.0 - x)
    x, value = grid_refine_max(f_grid, f_point, 0.0, 1.0, 10, 1e-10)
    grid_best = float(f_grid(np.linspace(0.0, 1.0, 10)).max())
    assert value >= grid_best
    assert x == pytest.approx(0.5, abs=1e-6)


def test_grid_refine_zero_width():
    x, value = grid_refine_max(lambda xs: xs * 2.0, lambda t: t * 2.0, 0.5, 0.5, 100, 1e-9)
    assert x == 0.5
    assert value == 1.0
