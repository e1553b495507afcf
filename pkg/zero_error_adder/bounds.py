"""
Analytic outer bounds for the binary adder channel.

This module provides:
1. L(eta), J(p, eta) and the shared upper branch of J
2. R_sigma(r0, r1): the common-message sum-rate bound, maximized over eta
3. Gamma and the main outer bound on R2 as a function of R1
4. The exact common-message sum capacity as a function of r0
5. Slepian-Wolf entropies H(X1|U), H(X2|U), H(Y|U), H(Y) of a distribution
6. The bound curve rows consumed by the CLI

Optimizers are grid + golden-section refinement (see numerics); results
are deterministic for a given SolverSettings.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .config import DEFAULT_SETTINGS, SolverSettings
from .errors import DomainError, SingularityError
from .numerics import (
    binary_entropy, binary_entropy_array, inv_binary_entropy,
    star, grid_refine_max, golden_section_max,
)
from .schema import JointDistribution

logger = logging.getLogger(__name__)

LOG2_3 = math.log2(3)


# ============================================================
# RESULT TYPES
# ============================================================

@dataclass(frozen=True)
class BoundResult:
    """A bound value with the optimizing eta (and alpha for the main bound)"""
    value: float
    arg_eta: float
    arg_alpha: Optional[float] = None


@dataclass(frozen=True)
class SwPoint:
    """Entropies bounding the common-message region for one distribution"""
    h_x1_given_u: float
    h_x2_given_u: float
    h_y_given_u: float
    h_y: float


@dataclass(frozen=True)
class CurveRow:
    """One row of the bound curve CSV"""
    r1: float
    shannon: float
    new_bound: float
    alpha_star: float
    eta_star: float


# ============================================================
# L AND J
# ============================================================

def _check_eta(eta: float):
    if not (0.0 <= eta <= 0.5):
        raise DomainError(f"eta={eta!r} is outside [0, 1/2]")


def big_l(eta: float) -> float:
    """L(eta) = h(eta) + 1 - eta"""
    _check_eta(eta)
    return binary_entropy(eta) + 1.0 - eta


def j_upper(eta: float) -> float:
    """2 h(1/2 (1 - sqrt(1 - 2 eta))) - eta"""
    _check_eta(eta)
    return 2.0 * binary_entropy(0.5 * (1.0 - math.sqrt(1.0 - 2.0 * eta))) - eta


def big_j(p: float, eta: float) -> float:
    """
    J(p, eta).

    Upper branch when eta >= p*p; otherwise the lower branch, which
    divides by sqrt(1 - 2 p*p) and is singular at p*p = 1/2.
    """
    if not (0.0 <= p <= 0.5):
        raise DomainError(f"p={p!r} is outside [0, 1/2]")
    _check_eta(eta)
    s = star(p, p)
    if eta >= s:
        return j_upper(eta)
    # 1 - 2(p*p) factors as (1 - 2p)^2
    root = 1.0 - 2.0 * p
    if root == 0.0:
        raise SingularityError(f"J({p}, {eta}) is singular: eta < p*p = 1/2")
    ratio = (1.0 - eta - s) / root
    arg = 0.5 * (1.0 - ratio)
    if not (0.0 <= arg <= 1.0):
        raise DomainError(f"J({p}, {eta}) is undefined: entropy argument {arg!r} outside [0, 1]")
    return 2.0 * binary_entropy(arg) - 0.5 * (1.0 - ratio * ratio)


def _big_l_array(eta: np.ndarray) -> np.ndarray:
    return binary_entropy_array(eta) + 1.0 - eta


def _j_upper_array(eta: np.ndarray) -> np.ndarray:
    return 2.0 * binary_entropy_array(0.5 * (1.0 - np.sqrt(1.0 - 2.0 * eta))) - eta


def _big_j_array(p: float, eta: np.ndarray) -> np.ndarray:
    s = star(p, p)
    out = _j_upper_array(eta)
    lower = eta < s
    if lower.any():
        root = 1.0 - 2.0 * p
        if root == 0.0:
            raise SingularityError(f"J({p}, .) is singular below eta = p*p = 1/2")
        ratio = (1.0 - eta[lower] - s) / root
        out[lower] = 2.0 * binary_entropy_array(0.5 * (1.0 - ratio)) - 0.5 * (1.0 - ratio * ratio)
    return out


# ============================================================
# SUM-RATE BOUNDS
# ============================================================

def r_sigma(
    r0: float,
    r1: float,
    settings: Optional[SolverSettings] = None,
) -> BoundResult:
    """
    max over eta in [h^-1(r1), 1/2] of min{L(eta), J(h^-1(r1), eta) + r0}
    """
    settings = settings or DEFAULT_SETTINGS
    if r0 < 0.0:
        raise DomainError(f"r0={r0!r} must be nonnegative")
    if not (0.0 <= r1 <= 1.0):
        raise DomainError(f"r1={r1!r} is outside [0, 1]")

    p = inv_binary_entropy(r1, settings.inverse_entropy_tol)

    def f_grid(eta: np.ndarray) -> np.ndarray:
        return np.minimum(_big_l_array(eta), _big_j_array(p, eta) + r0)

    def f_point(eta: float) -> float:
        return min(big_l(eta), big_j(p, eta) + r0)

    eta, value = grid_refine_max(f_grid, f_point, p, 0.5, settings.eta_grid, settings.golden_tol)
    return BoundResult(value=value, arg_eta=eta)


def sumsw_bound(r0: float, settings: Optional[SolverSettings] = None) -> BoundResult:
    """
    Maximal r0 + r1 + r2 with a common message of rate r0:
    max over eta in [0, 1/2] of min{h(eta) + 1 - eta, j_upper(eta) + r0}.
    """
    settings = settings or DEFAULT_SETTINGS
    if r0 < 0.0:
        raise DomainError(f"r0={r0!r} must be nonnegative")

    def f_grid(eta: np.ndarray) -> np.ndarray:
        return np.minimum(_big_l_array(eta), _j_upper_array(eta) + r0)

    def f_point(eta: float) -> float:
        return min(big_l(eta), j_upper(eta) + r0)

    eta, value = grid_refine_max(f_grid, f_point, 0.0, 0.5, settings.eta_grid, settings.golden_tol)
    return BoundResult(value=value, arg_eta=eta)


# ============================================================
# MAIN OUTER BOUND
# ============================================================

def gamma(r1_cap: float, alpha: float, tol: Optional[float] = None) -> float:
    """Gamma(R1, alpha) = h((h^-1(R1) - alpha) / (1 - alpha))"""
    if not (0.0 <= r1_cap <= 1.0):
        raise DomainError(f"R1={r1_cap!r} is outside [0, 1]")
    p1 = inv_binary_entropy(r1_cap, tol)
    if not (0.0 <= alpha <= p1):
        raise DomainError(f"alpha={alpha!r} is outside [0, h^-1(R1)] = [0, {p1!r}]")
    return binary_entropy(max(0.0, (p1 - alpha) / (1.0 - alpha)))


def shannon_sum_bound(r1: float) -> float:
    """R2 <= 3/2 - R1, the sum-rate face of the Shannon region"""
    return 1.5 - r1


def theorem1_bound(r1: float, settings: Optional[SolverSettings] = None) -> BoundResult:
    """
    Outer bound on R2 for a given R1:
    min over alpha in [0, h^-1(R1)] of
    (1 - alpha) (R_sigma(alpha/(1-alpha), Gamma) - Gamma).

    Every admissible pair has R2 strictly below the returned value; the
    strictness is not encoded in the number.
    """
    settings = settings or DEFAULT_SETTINGS
    if not (0.0 < r1 <= 1.0):
        raise DomainError(f"R1={r1!r} is outside (0, 1]")

    p1 = inv_binary_entropy(r1, settings.inverse_entropy_tol)

    def evaluate(alpha: float) -> BoundResult:
        if alpha == 0.0:
            # R_sigma(0, R1) = 3/2 exactly, attained at eta = 1/2
            return BoundResult(value=shannon_sum_bound(r1), arg_eta=0.5, arg_alpha=0.0)
        g = gamma(r1, alpha, settings.inverse_entropy_tol)
        inner = r_sigma(alpha / (1.0 - alpha), g, settings)
        return BoundResult(
            value=(1.0 - alpha) * (inner.value - g),
            arg_eta=inner.arg_eta,
            arg_alpha=alpha,
        )

    alphas = np.linspace(0.0, p1, settings.alpha_grid)
    # Endpoints are part of the linspace grid
    results = [evaluate(float(a)) for a in alphas]
    best = min(range(len(results)), key=lambda i: (results[i].value, i))
    logger.debug("R1=%.6f: alpha grid best %.8f at alpha=%.6f", r1, results[best].value, alphas[best])

    left = float(alphas[max(best - 1, 0)])
    right = float(alphas[min(best + 1, len(alphas) - 1)])
    if right > left:
        alpha, _ = golden_section_max(lambda a: -evaluate(a).value, left, right, settings.alpha_tol)
        refined = evaluate(min(max(alpha, 0.0), p1))
        if refined.value < results[best].value:
            return refined
    return results[best]


def bound_curve(
    r1_min: float,
    r1_max: float,
    steps: int,
    settings: Optional[SolverSettings] = None,
) -> List[CurveRow]:
    """steps + 1 equally spaced rows of the new bound against 3/2 - R1"""
    if steps < 1:
        raise DomainError(f"steps={steps} must be at least 1")
    if not (0.0 < r1_min < r1_max <= 1.0):
        raise DomainError(f"need 0 < r1_min < r1_max <= 1, got [{r1_min}, {r1_max}]")

    rows = []
    for r1 in np.linspace(r1_min, r1_max, steps + 1):
        r1 = float(r1)
        result = theorem1_bound(r1, settings)
        rows.append(CurveRow(
            r1=r1,
            shannon=shannon_sum_bound(r1),
            new_bound=result.value,
            alpha_star=result.arg_alpha,
            eta_star=result.arg_eta,
        ))
        logger.info("curve R1=%.6f bound=%.6f", r1, result.value)
    return rows


# ============================================================
# SLEPIAN-WOLF ENTROPIES
# ============================================================

def _entropy_bits(probs: np.ndarray) -> float:
    probs = probs[probs > 0.0]
    return float(-(probs * np.log2(probs)).sum())


def _sum_law(a: float, b: float) -> np.ndarray:
    """Law of X1 + X2 for independent Bern(a), Bern(b)"""
    return np.array([(1.0 - a) * (1.0 - b), a * (1.0 - b) + b * (1.0 - a), a * b])


def sw_point(dist: JointDistribution) -> SwPoint:
    """H(X1|U), H(X2|U), H(X1+X2|U), H(X1+X2) for a factorized distribution"""
    p_u = np.array(dist.p_u)
    laws = [_sum_law(a, b) for a, b in zip(dist.p_x1_given_u, dist.p_x2_given_u)]

    h_x1 = sum(w * binary_entropy(a) for w, a in zip(dist.p_u, dist.p_x1_given_u))
    h_x2 = sum(w * binary_entropy(b) for w, b in zip(dist.p_u, dist.p_x2_given_u))
    h_y_u = sum(w * _entropy_bits(law) for w, law in zip(dist.p_u, laws))
    h_y = _entropy_bits(sum(w * law for w, law in zip(p_u, laws)))
    return SwPoint(h_x1_given_u=h_x1, h_x2_given_u=h_x2, h_y_given_u=h_y_u, h_y=h_y)


def optimal_common_message_distribution(eta: float) -> JointDistribution:
    """
    X_i = U xor Z_i with U ~ Bern(1/2), Z_i ~ Bern(p*), p* * p* = eta.

    Evaluated at the maximizing eta of sumsw_bound this distribution
    achieves the common-message sum capacity.
    """
    _check_eta(eta)
    p = 0.5 * (1.0 - math.sqrt(1.0 - 2.0 * eta))
    return JointDistribution(
        p_u=(0.5, 0.5),
        p_x1_given_u=(p, 1.0 - p),
        p_x2_given_u=(p, 1.0 - p),
    )


def sample_distribution(rng: np.random.Generator, support_sizes=(1, 2, 3)) -> JointDistribution:
    """
    Random distribution: |U| uniform over support_sizes, P_U ~ Dirichlet(1),
    Bernoulli parameters uniform on [0, 1].
    """
    k = int(rng.choice(support_sizes))
    p_u = rng.dirichlet(np.ones(k))
    p_u = p_u / p_u.sum()
    return JointDistribution(
        p_u=tuple(float(x) for x in p_u),
        p_x1_given_u=tuple(float(x) for x in rng.uniform(0.0, 1.0, k)),
        p_x2_given_u=tuple(float(x) for x in rng.uniform(0.0, 1.0, k)),
    )
