"""
Tests for the analytic bounds: L, J, R_sigma, the common-message sum
capacity, the main outer bound and the Slepian-Wolf entropies.

Usage:
    pytest test_bounds.py
"""

import math

import numpy as np
import pytest

from zero_error_adder.bounds import (
    LOG2_3, big_j, big_l, bound_curve, gamma, j_upper,
    optimal_common_message_distribution, r_sigma, sample_distribution,
    shannon_sum_bound, sumsw_bound, sw_point, theorem1_bound,
)
from zero_error_adder.errors import DomainError, SingularityError
from zero_error_adder.numerics import binary_entropy, star
from zero_error_adder.schema import JointDistribution
from zero_error_adder.sps import corollary_beta
from zero_error_adder.validator import LemmaCheckReport, ValidationResult, validate_lemma_sw


# ============================================================
# L AND J
# ============================================================

def test_big_l_values():
    assert big_l(0.0) == pytest.approx(1.0)
    assert big_l(0.5) == pytest.approx(1.5)
    assert big_l(1 / 3) == pytest.approx(LOG2_3, abs=1e-12)


def test_big_j_lower_branch_example():
    # p*p = 0.18 > 0.1, so the lower branch applies
    assert big_j(0.1, 0.1) == pytest.approx(0.477794, abs=1e-5)


def test_big_j_upper_branch_matches_j_upper():
    assert big_j(0.1, 0.3) == j_upper(0.3)
    assert big_j(0.0, 0.2) == j_upper(0.2)


def test_big_j_singular_at_half():
    with pytest.raises(SingularityError):
        big_j(0.5, 0.2)


def test_big_j_domain():
    with pytest.raises(DomainError):
        big_j(0.6, 0.2)
    with pytest.raises(DomainError):
        big_l(0.7)


def test_branch_continuity():
    for p in np.arange(0.05, 0.46, 0.05):
        p = float(p)
        s = star(p, p)
        below = big_j(p, s - 1e-7)
        above = big_j(p, s + 1e-7)
        assert abs(above - below) < 1e-5


def test_j_bounded_by_upper_branch():
    for p in np.linspace(0.0, 0.45, 19):
        p = float(p)
        for eta in np.linspace(p, 0.5, 50):
            eta = float(eta)
            assert big_j(p, eta) <= j_upper(eta) + 1e-12


# ============================================================
# SUM-RATE BOUNDS
# ============================================================

def test_r_sigma_values():
    assert r_sigma(0.0, 0.0).value == pytest.approx(1.5, abs=1e-9)
    assert r_sigma(0.5, 1.0).value == pytest.approx(1.5, abs=1e-9)


def test_sumsw_endpoints():
    assert sumsw_bound(0.0).value == pytest.approx(1.5, abs=1e-6)
    assert sumsw_bound(1.0).value == pytest.approx(LOG2_3, abs=1e-4)


def test_sumsw_equals_r_sigma_at_zero_rate():
    for r0 in np.linspace(0.0, 2.0, 50):
        r0 = float(r0)
        assert abs(sumsw_bound(r0).value - r_sigma(r0, 0.0).value) <= 1e-9


def test_sumsw_monotone_and_saturates():
    values = [sumsw_bound(float(r0)).value for r0 in np.linspace(0.0, 2.0, 21)]
    for a, b in zip(values, values[1:]):
        assert b >= a - 1e-12
    assert values[-1] == pytest.approx(LOG2_3, abs=1e-6)


def test_sumsw_rejects_negative_rate():
    with pytest.raises(DomainError):
        sumsw_bound(-0.1)


# ============================================================
# MAIN OUTER BOUND
# ============================================================

def test_gamma_values():
    assert gamma(1.0, 0.25) == pytest.approx(binary_entropy(1 / 3), abs=1e-9)
    assert gamma(0.7, 0.0) == pytest.approx(0.7, abs=1e-9)
    with pytest.raises(DomainError):
        gamma(1.0, 0.6)


def test_theorem1_at_full_rate():
    result = theorem1_bound(1.0)
    assert 0.4789 <= result.value <= 0.4799
    assert result.value < 0.49216
    assert 0.0 <= result.arg_alpha <= 0.5
    assert 0.0 <= result.arg_eta <= 0.5


def test_theorem1_never_exceeds_shannon_near_corner():
    for r1 in np.linspace(0.95, 1.0, 6):
        r1 = float(r1)
        assert theorem1_bound(r1).value <= shannon_sum_bound(r1) + 1e-12


def test_theorem1_alpha_zero_is_exactly_shannon():
    # Below R1 ~ 0.995 the minimizing alpha is the endpoint 0
    result = theorem1_bound(0.97)
    assert result.arg_alpha <= 1e-5
    assert result.value == pytest.approx(shannon_sum_bound(0.97), abs=1e-9)


def test_theorem1_beats_shannon_with_interior_alpha():
    for r1 in (0.999, 1.0):
        result = theorem1_bound(r1)
        assert result.value < shannon_sum_bound(r1) - 1e-3
        assert result.arg_alpha > 0.0


def _h(x):
    x = np.clip(x, 0.0, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = -x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x)
    return np.nan_to_num(out)


_P_TABLE = np.linspace(0.0, 0.5, 200_001)
_H_TABLE = _h(_P_TABLE)


def _nested_grid_theorem1(r1, alphas=300, etas=3000):
    p1 = float(np.interp(r1, _H_TABLE, _P_TABLE))
    best = math.inf
    for alpha in np.linspace(0.0, p1, alphas):
        g = float(_h((p1 - alpha) / (1.0 - alpha)))
        q = float(np.interp(g, _H_TABLE, _P_TABLE))
        eta = np.linspace(q, 0.5, etas)
        s = 2.0 * q * (1.0 - q)
        j = 2.0 * _h(0.5 * (1.0 - np.sqrt(1.0 - 2.0 * eta))) - eta
        lower = eta < s
        if lower.any():
            ratio = (1.0 - eta[lower] - s) / (1.0 - 2.0 * q)
            j[lower] = 2.0 * _h(0.5 * (1.0 - ratio)) - 0.5 * (1.0 - ratio ** 2)
        inner = np.minimum(_h(eta) + 1.0 - eta, j + alpha / (1.0 - alpha)).max()
        best = min(best, (1.0 - alpha) * (float(inner) - g))
    return best


@pytest.mark.parametrize("r1", [0.99, 0.999])
def test_theorem1_matches_nested_grid(r1):
    assert theorem1_bound(r1).value == pytest.approx(_nested_grid_theorem1(r1), abs=1e-3)


def test_theorem1_domain():
    with pytest.raises(DomainError):
        theorem1_bound(0.0)
    with pytest.raises(DomainError):
        theorem1_bound(1.1)


def test_bound_curve_rows():
    rows = bound_curve(0.96, 1.0, 4)
    assert len(rows) == 5
    assert [r.r1 for r in rows] == sorted(r.r1 for r in rows)
    assert rows[0].r1 == pytest.approx(0.96)
    assert rows[-1].r1 == pytest.approx(1.0)
    for row in rows:
        assert row.shannon == pytest.approx(1.5 - row.r1)
        assert row.new_bound <= row.shannon + 1e-9
        assert all(math.isfinite(v) for v in (row.alpha_star, row.eta_star))


def test_corollary_beta():
    for r, alpha in [(0.9, 0.1), (1.0, 0.25), (0.5, 0.0)]:
        assert corollary_beta(r, alpha) == pytest.approx((1 - alpha) * gamma(r, alpha), abs=1e-12)


# ============================================================
# SLEPIAN-WOLF ENTROPIES
# ============================================================

def test_sw_point_degenerate_u():
    dist = JointDistribution(p_u=(1.0,), p_x1_given_u=(0.5,), p_x2_given_u=(0.5,))
    point = sw_point(dist)
    assert point.h_x1_given_u == pytest.approx(1.0, abs=1e-12)
    assert point.h_x2_given_u == pytest.approx(1.0, abs=1e-12)
    assert point.h_y_given_u == pytest.approx(1.5, abs=1e-12)
    assert point.h_y == pytest.approx(1.5, abs=1e-12)


def test_sw_point_inputs_equal_to_u():
    dist = JointDistribution(p_u=(0.5, 0.5), p_x1_given_u=(0.0, 1.0), p_x2_given_u=(0.0, 1.0))
    point = sw_point(dist)
    assert point.h_x1_given_u == pytest.approx(0.0, abs=1e-12)
    assert point.h_x2_given_u == pytest.approx(0.0, abs=1e-12)
    assert point.h_y_given_u == pytest.approx(0.0, abs=1e-12)
    assert point.h_y == pytest.approx(1.0, abs=1e-12)


def test_invalid_distribution_rejected():
    with pytest.raises(ValueError):
        JointDistribution(p_u=(0.5, 0.6), p_x1_given_u=(0.1, 0.1), p_x2_given_u=(0.1, 0.1))
    with pytest.raises(ValueError):
        JointDistribution(p_u=(0.25,) * 4, p_x1_given_u=(0.1,) * 4, p_x2_given_u=(0.1,) * 4)


def test_random_distribution_entropies_in_range():
    rng = np.random.default_rng(3)
    for _ in range(10_000):
        point = sw_point(sample_distribution(rng))
        assert point.h_y_given_u <= point.h_y + 1e-12
        for value in (point.h_x1_given_u, point.h_x2_given_u, point.h_y_given_u, point.h_y):
            assert -1e-12 <= value <= LOG2_3 + 1e-12


def test_optimal_distribution_achieves_sum_capacity():
    for r0 in (0.0, 0.1, 0.3, 0.5):
        result = sumsw_bound(r0)
        point = sw_point(optimal_common_message_distribution(result.arg_eta))
        assert point.h_y_given_u == pytest.approx(j_upper(result.arg_eta), abs=1e-9)
        assert point.h_y == pytest.approx(big_l(result.arg_eta), abs=1e-9)
        assert min(point.h_y, point.h_y_given_u + r0) == pytest.approx(result.value, abs=1e-6)


# ============================================================
# LEMMA CHECK
# ============================================================

def test_lemma_check_has_no_violations():
    r0_grid = [round(0.05 * i, 2) for i in range(11)]
    report = validate_lemma_sw(10_000, r0_grid, seed=7)
    assert report.checks == 10_000 * 11
    assert report.violations == 0
    assert report.is_valid
    assert report.worst_gap <= 1e-6


def test_lemma_check_degenerate_u_never_exceeds_three_halves():
    report = validate_lemma_sw(500, [0.0, 0.5], seed=1, support_sizes=(1,))
    assert report.violations == 0
    assert report.exact_evaluations == 0
    assert report.worst_gap <= 0.0


def test_validation_result_collects_failures():
    result = ValidationResult()
    assert result.is_valid
    result.add_error("sum exceeds bound")
    assert not result.is_valid
    assert [issue.message for issue in result.issues] == ["sum exceeds bound"]
    report = LemmaCheckReport()
    report.add_error("a")
    report.add_error("b")
    assert report.violations == 2


def test_lemma_check_rejects_bad_arguments():
    with pytest.raises(DomainError):
        validate_lemma_sw(0, [0.0])
    with pytest.raises(DomainError):
        validate_lemma_sw(10, [])
