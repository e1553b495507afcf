"""
Tests for the end-to-end procedures: Weldon-type bounds, partitioning,
system construction and exhaustive pair search.

Usage:
    pytest test_pipeline.py
"""

import math

import numpy as np
import pytest

from zero_error_adder.bounds import LOG2_3
from zero_error_adder.codebook import all_shattered_sets, is_systematic, is_zero_error_pair, is_zero_error_system
from zero_error_adder.config import SolverSettings
from zero_error_adder.errors import BudgetExceededError, DomainError, PreconditionError
from zero_error_adder.fixtures import colliding_pair, intro_pair
from zero_error_adder.pipeline import (
    build_system, enumerate_zero_error_pairs, exhaustive_max_pair,
    partition_by_projection, proposition1_bound, weldon_bound, weldon_max_r1,
)
from zero_error_adder.schema import CoordSet


# ============================================================
# WELDON-TYPE BOUNDS
# ============================================================

def test_weldon_bounds():
    assert weldon_bound(1.0) == 0.0
    assert weldon_bound(0.0) == pytest.approx(LOG2_3)
    assert weldon_max_r1(1.0) == pytest.approx(0.369, abs=1e-3)
    with pytest.raises(DomainError):
        weldon_bound(1.5)


def test_weldon_holds_for_systematic_first_books():
    checked = 0
    for n in (1, 2, 3):
        for c1, c2 in enumerate_zero_error_pairs(n):
            if not is_systematic(c1).is_systematic:
                continue
            checked += 1
            assert math.log2(c2.size) <= (n - math.log2(c1.size)) * LOG2_3 + 1e-12, (c1, c2)
    assert checked > 0


def test_proposition1_is_weaker_than_shannon():
    for r1 in np.linspace(0.001, 1.0, 1000):
        r1 = float(r1)
        assert r1 + proposition1_bound(r1) > 1.5


# ============================================================
# PARTITION
# ============================================================

def test_partition_keeps_every_pattern():
    c1, c2 = intro_pair()
    part = partition_by_projection(c2, CoordSet.full(2))
    assert set(part.buckets) == {0, 1, 2, 3}
    assert part.buckets[3] == ()
    assert part.label(2) == "10"

    part = partition_by_projection(c1, CoordSet(n=2, indices=(2,)))
    assert part.buckets == {0: (0b00,), 1: (0b11,)}


def test_partition_budget_comes_from_settings():
    c1, _ = intro_pair()
    with pytest.raises(BudgetExceededError):
        partition_by_projection(c1, CoordSet.full(2), SolverSettings(max_partition_coords=1))
    assert len(partition_by_projection(c1, CoordSet.full(2)).buckets) == 4


# ============================================================
# CONSTRUCTION
# ============================================================

def test_build_system_hand_trace():
    c1, c2 = intro_pair()
    report = build_system(c1, c2, CoordSet(n=2, indices=(1,)))
    assert report.k == 1
    assert report.k_prime_log == 1
    assert report.g_set == ["0"]
    v = report.system
    assert (v.m0, v.m1, v.m2) == (1, 1, 2)
    first, second = v.pairs[0]
    assert first.to_strings() == ["1"]
    assert second.to_strings() == ["0", "1"]
    assert report.verdict.is_zero_error_system
    assert report.mass == 2
    assert report.mass_bound_holds
    assert report.log_slack_holds
    assert report.alpha == pytest.approx(0.5)
    r0, r1, r2 = report.rates()
    assert (r0, r1, r2) == (0.0, 0.0, 1.0)


def test_build_system_on_full_coordinate_set():
    c1, c2 = intro_pair()
    report = build_system(c1, c2, CoordSet(n=2, indices=()))
    assert report.system.m0 == 1
    assert report.system.pairs[0][0] == c1
    assert report.verdict.is_zero_error_system


def test_build_system_preconditions():
    c1, c2 = intro_pair()
    with pytest.raises(PreconditionError):
        build_system(c1, c2, CoordSet.full(2))
    a, b = colliding_pair()
    with pytest.raises(PreconditionError):
        build_system(a, b, CoordSet(n=2, indices=(1,)))


def test_construction_end_to_end():
    built = 0
    for n in (1, 2, 3):
        for c1, c2 in enumerate_zero_error_pairs(n):
            for s in all_shattered_sets(c1, 1):
                report = build_system(c1, c2, s)
                v = report.system
                assert is_zero_error_system(v).is_zero_error_system, (c1, c2, s)
                assert v.m0 == len(report.g_set)
                assert v.m1 == report.k
                assert v.m2 == 1 << report.k_prime_log
                assert v.n == n - s.size
                assert report.mass == v.m0 * v.m2
                assert report.mass_bound_holds
                assert report.log_slack_holds
                rates = report.rates()
                if rates is not None:
                    # m0 <= 2^|S|
                    assert rates[0] <= report.alpha / (1.0 - report.alpha) + 1e-12
                built += 1
    assert built > 0


# ============================================================
# EXHAUSTIVE SEARCH
# ============================================================

def test_enumerate_pairs_small():
    pairs = list(enumerate_zero_error_pairs(1))
    assert len(pairs) == 5
    assert all(is_zero_error_pair(c1, c2).is_zero_error for c1, c2 in pairs)
    assert all(0 in c1.words for c1, _ in pairs)


def test_enumerate_pairs_limit():
    with pytest.raises(BudgetExceededError):
        next(enumerate_zero_error_pairs(4))


def test_search_n1():
    result = exhaustive_max_pair(1)
    assert result.best_product == 2
    assert result.complete
    c1, c2 = result.witnesses[0]
    assert c1.size * c2.size == 2


def test_search_n2():
    result = exhaustive_max_pair(2)
    assert result.best_product == 6
    assert result.best_product <= 3 ** 2
    assert intro_pair() in result.witnesses
    for c1, c2 in result.witnesses:
        assert is_zero_error_pair(c1, c2).is_zero_error
        assert c1.size * c2.size == 6


def test_search_without_symmetry_reduction():
    result = exhaustive_max_pair(2, canonical=False)
    assert result.best_product == 6
    assert len(result.witnesses) >= len(exhaustive_max_pair(2).witnesses)


def test_search_n3_is_consistent_with_enumeration():
    result = exhaustive_max_pair(3)
    best = max(c1.size * c2.size for c1, c2 in enumerate_zero_error_pairs(3))
    assert result.best_product == best
    assert result.best_product <= 27


def test_search_budgets():
    with pytest.raises(BudgetExceededError):
        exhaustive_max_pair(5)
    with pytest.raises(BudgetExceededError):
        exhaustive_max_pair(7, time_budget=1.0)
    with pytest.raises(DomainError):
        exhaustive_max_pair(0)


def test_search_time_budget_reports_incomplete():
    result = exhaustive_max_pair(5, time_budget=1e-9)
    assert not result.complete


def test_search_rate_at_n2():
    result = exhaustive_max_pair(2)
    assert math.log2(result.best_product) / 2 == pytest.approx(1.29248, abs=1e-5)


def test_best_product_is_supermultiplicative():
    # Concatenating a best pair with itself
    assert exhaustive_max_pair(4).best_product >= exhaustive_max_pair(2).best_product ** 2
