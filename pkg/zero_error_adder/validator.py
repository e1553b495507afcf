"""
Numerical validation of the outer-bound ingredients.

This module provides:
1. Issue/result report types shared with the CLI
2. A seeded randomized check that every sampled distribution's
   Slepian-Wolf sum stays under R_sigma(r0, r1)
3. A shattering trend check on random codebooks of rate above R

A passing run is numerical evidence only.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .bounds import r_sigma, sample_distribution, sw_point
from .codebook import max_k_shattered
from .config import DEFAULT_SETTINGS, SolverSettings
from .errors import DomainError
from .numerics import inv_binary_entropy
from .schema import JointDistribution
from .sps import classic_sps_bound, family_to_codebook, random_family

logger = logging.getLogger(__name__)

TOLERANCE = 1e-6

# R_sigma(r0, r1) >= 3/2: at eta = 1/2 both terms of the min equal 3/2
# and eta = 1/2 is always a grid point.
SCREEN_FLOOR = 1.5


# ============================================================
# VALIDATION RESULT
# ============================================================

@dataclass
class ValidationIssue:
    """A failed check"""
    message: str


@dataclass
class ValidationResult:
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.issues

    def add_error(self, message: str):
        self.issues.append(ValidationIssue(message))


@dataclass
class LemmaCheckReport(ValidationResult):
    """
    Outcome of validate_lemma_sw.

    worst_gap is the largest sum - bound seen. Checks settled by a screen
    use a lower estimate of the bound, so their gap is an upper estimate.
    """
    trials: int = 0
    r0_grid: List[float] = field(default_factory=list)
    seed: int = 0
    checks: int = 0
    exact_evaluations: int = 0
    worst_gap: float = float("-inf")

    @property
    def violations(self) -> int:
        return len(self.issues)


# ============================================================
# LEMMA CHECK
# ============================================================

def describe_distribution(dist: JointDistribution) -> str:
    def fmt(values):
        return "(" + ", ".join(f"{v:.6f}" for v in values) + ")"
    return (
        f"P_U={fmt(dist.p_u)} P(X1=1|U)={fmt(dist.p_x1_given_u)} "
        f"P(X2=1|U)={fmt(dist.p_x2_given_u)}"
    )


def validate_lemma_sw(
    trials: int,
    r0_grid: Sequence[float],
    seed: int = 0,
    support_sizes: Sequence[int] = (1, 2, 3),
    settings: Optional[SolverSettings] = None,
) -> LemmaCheckReport:
    """
    Sample `trials` distributions and check, for every r0 in the grid,

        min(r0 + r1 + r2, H(Y)) <= R_sigma(r0, r1) + 1e-6

    with r1 = H(X1|U) and r2 = min(H(X2|U), H(Y|U) - r1).

    Sums up to 3/2 are accepted without optimization. Larger sums are
    compared first with R_sigma on the coarse screen grid (a lower
    estimate of the maximum), then with the full optimizer.
    """
    settings = settings or DEFAULT_SETTINGS
    if trials < 1:
        raise DomainError(f"trials={trials} must be at least 1")
    if not r0_grid:
        raise DomainError("r0 grid is empty")
    if any(r0 < 0.0 for r0 in r0_grid):
        raise DomainError("r0 values must be nonnegative")

    coarse = settings.model_copy(update={"eta_grid": settings.screen_grid})
    rng = np.random.default_rng(seed)
    report = LemmaCheckReport(trials=trials, r0_grid=[float(r) for r in r0_grid], seed=seed)

    for trial in range(trials):
        dist = sample_distribution(rng, support_sizes)
        point = sw_point(dist)
        r1 = min(max(point.h_x1_given_u, 0.0), 1.0)
        r2 = min(point.h_x2_given_u, point.h_y_given_u - r1)

        for r0 in report.r0_grid:
            report.checks += 1
            total = min(r0 + r1 + r2, point.h_y)
            if total <= SCREEN_FLOOR:
                report.worst_gap = max(report.worst_gap, total - SCREEN_FLOOR)
                continue
            screened = r_sigma(r0, r1, coarse).value
            if total <= screened:
                report.worst_gap = max(report.worst_gap, total - screened)
                continue
            report.exact_evaluations += 1
            bound = r_sigma(r0, r1, settings).value
            gap = total - bound
            report.worst_gap = max(report.worst_gap, gap)
            if gap > TOLERANCE:
                report.add_error(
                    f"trial {trial}, r0={r0:.4f}: sum {total:.9f} exceeds bound {bound:.9f} "
                    f"for {describe_distribution(dist)}"
                )

    logger.info(
        "lemma check: %d checks, %d exact evaluations, worst gap %.3e, %d violations",
        report.checks, report.exact_evaluations, report.worst_gap, report.violations,
    )
    return report


# ============================================================
# SHATTERING TREND
# ============================================================

@dataclass
class ShatteringRow:
    n: int
    size: int
    vc_dimension: int
    lemma_floor: int
    target: float


@dataclass
class ShatteringTrendReport(ValidationResult):
    """
    Outcome of check_shattering_trend.

    lemma_floor is the smallest d with sum_{t <= d} C(n, t) >= |C|; every
    codebook must shatter a set at least that large. target = n h^-1(R) is
    the asymptotic size and is only reported.
    """
    rate: float = 0.0
    epsilon: float = 0.0
    seed: int = 0
    rows: List[ShatteringRow] = field(default_factory=list)


def lemma_floor(n: int, size: int) -> int:
    """Smallest d whose Sauer-Perles-Shelah count reaches size"""
    for d in range(n + 1):
        if classic_sps_bound(n, d) >= size:
            return d
    raise DomainError(f"{size} words do not fit in length {n}")


def check_shattering_trend(
    ns: Sequence[int],
    rate: float,
    epsilon: float = 0.05,
    seed: int = 0,
    settings: Optional[SolverSettings] = None,
) -> ShatteringTrendReport:
    """
    Draw one random codebook of size 2^ceil(n (R + epsilon)) per n and
    record its VC-dimension against n h^-1(R).

    Only the Sauer-Perles-Shelah floor is asserted: a VC-dimension below
    lemma_floor(n, |C|) is an error.
    """
    settings = settings or DEFAULT_SETTINGS
    if not (0.0 < rate < 1.0):
        raise DomainError(f"rate={rate!r} is outside (0, 1)")
    if epsilon < 0.0:
        raise DomainError(f"epsilon={epsilon!r} must be nonnegative")

    rng = np.random.default_rng(seed)
    report = ShatteringTrendReport(rate=rate, epsilon=epsilon, seed=seed)
    target_fraction = inv_binary_entropy(rate, settings.inverse_entropy_tol)

    for n in ns:
        log_size = math.ceil(n * (rate + epsilon))
        if log_size > n:
            raise DomainError(f"rate {rate} + {epsilon} needs more than 2^{n} words at n={n}")
        c = family_to_codebook(random_family(rng, n, 1 << log_size))
        row = ShatteringRow(
            n=n,
            size=c.size,
            vc_dimension=max_k_shattered(c, 1, settings).size,
            lemma_floor=lemma_floor(n, c.size),
            target=n * target_fraction,
        )
        report.rows.append(row)
        logger.info("n=%d |C|=%d vc=%d floor=%d target=%.3f",
                    n, row.size, row.vc_dimension, row.lemma_floor, row.target)
        if row.vc_dimension < row.lemma_floor:
            report.add_error(
                f"n={n}: VC-dimension {row.vc_dimension} is below the floor {row.lemma_floor} for |C|={row.size}"
            )
    return report
