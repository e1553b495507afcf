"""
Scalar information-theoretic primitives.

This module provides:
1. Binary entropy h (scalar and numpy-vectorized) in bits
2. The inverse of h restricted to [0, 1/2], by bisection
3. The star convolution p*q = p(1-q) + q(1-p)
4. Exact binomial coefficients
5. One-dimensional maximizers (golden section, grid + golden refinement)

All rates are in bits.
"""

import math
from typing import Callable, Optional, Tuple

import numpy as np

from .config import DEFAULT_SETTINGS
from .errors import DomainError


INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


# ============================================================
# ENTROPY
# ============================================================

def _check_probability(name: str, value: float):
    if not (0.0 <= value <= 1.0):
        raise DomainError(f"{name}={value!r} is outside [0, 1]")


def binary_entropy(p: float) -> float:
    """h(p) = -p log p - (1-p) log(1-p), with 0 log 0 = 0"""
    _check_probability("p", p)
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def binary_entropy_array(p: np.ndarray) -> np.ndarray:
    """
    Vectorized binary entropy.

    Entries equal to 0 or 1 map to 0. Callers are responsible for keeping
    the entries inside [0, 1].
    """
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    inner = (p > 0.0) & (p < 1.0)
    q = p[inner]
    out[inner] = -q * np.log2(q) - (1.0 - q) * np.log2(1.0 - q)
    return out


def inv_binary_entropy(x: float, tol: Optional[float] = None) -> float:
    """
    The unique p in [0, 1/2] with h(p) = x, by bisection to within tol.
    """
    _check_probability("x", x)
    if tol is None:
        tol = DEFAULT_SETTINGS.inverse_entropy_tol
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 0.5

    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ============================================================
# STAR CONVOLUTION / BINOMIALS
# ============================================================

def star(p: float, q: float) -> float:
    """Probability that exactly one of Bern(p), Bern(q) fires"""
    _check_probability("p", p)
    _check_probability("q", q)
    return p * (1.0 - q) + q * (1.0 - p)


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n"""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ============================================================
# ONE-DIMENSIONAL MAXIMIZATION
# ============================================================

def golden_section_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-9,
) -> Tuple[float, float]:
    """
    Golden-section search for a maximum of f on [a, b].

    Assumes f is unimodal on the interval; returns (x, f(x)) for the
    midpoint of the final bracket of width <= tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x)

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc > yd:
        x = 0.5 * (a + d)
    else:
        x = 0.5 * (c + b)
    return x, f(x)


def grid_refine_max(
    f_grid: Callable[[np.ndarray], np.ndarray],
    f_point: Callable[[float], float],
    lo: float,
    hi: float,
    grid: int,
    tol: float,
) -> Tuple[float, float]:
    """
    Maximize f over [lo, hi] by a uniform grid, then golden refinement.

    The grid includes both endpoints. Refinement runs on the two cells
    around the best grid point and is kept only if it improves on it, so the
    result is never worse than the grid maximum. Ties go to the smallest
    grid index.
    """
    xs = np.linspace(lo, hi, grid)
    values = f_grid(xs)
    best = int(np.argmax(values))
    best_x, best_value = float(xs[best]), float(values[best])

    left = float(xs[max(best - 1, 0)])
    right = float(xs[min(best + 1, grid - 1)])
    if right > left:
        x, value = golden_section_max(f_point, left, right, tol)
        if value > best_value:
            return x, value
    return best_x, best_value
