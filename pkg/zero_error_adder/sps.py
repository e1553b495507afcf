"""
Soft Sauer-Perles-Shelah machinery.

This module provides:
1. Subset families <-> codebooks (indicator vectors)
2. Monotonicity test and the shifting compression to a monotone family
3. t*, the soft bound on families without a k-shattered d-set, and the
   classic Sauer-Perles-Shelah sum
4. The shattering exponent beta = (1 - alpha) Gamma(R, alpha)
5. The counting step for monotone families (a d-set inside many members)

Bounds are exact Fractions; nothing here rounds.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Tuple

import numpy as np

from .bounds import gamma
from .errors import DomainError
from .numerics import binomial
from .schema import Codebook, CoordSet, SoftSpsParams, SubsetFamily, coord_bit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SoftSpsResult:
    t_star: int
    bound: Fraction

    @property
    def bound_floor(self) -> int:
        return self.bound.numerator // self.bound.denominator


# ============================================================
# FAMILIES
# ============================================================

def family_from_codebook(c: Codebook) -> SubsetFamily:
    return SubsetFamily(n=c.n, sets=c.words)


def family_to_codebook(f: SubsetFamily) -> Codebook:
    if not f.sets:
        raise DomainError("an empty family has no codebook counterpart")
    return Codebook(n=f.n, words=f.sets)


def random_family(rng: np.random.Generator, n: int, size: int) -> SubsetFamily:
    """size distinct members drawn uniformly from the subsets of [n]"""
    if not (0 <= size <= (1 << n)):
        raise DomainError(f"cannot draw {size} distinct subsets of [{n}]")
    chosen = rng.choice(1 << n, size=size, replace=False)
    return SubsetFamily(n=n, sets=tuple(int(x) for x in chosen))


def is_monotone(f: SubsetFamily) -> bool:
    """Downward closed: removing any element of a member gives a member"""
    members = set(f.sets)
    for g in f.sets:
        for i in range(1, f.n + 1):
            bit = coord_bit(i, f.n)
            if g & bit and (g ^ bit) not in members:
                return False
    return True


def shift_to_monotone(f: SubsetFamily) -> SubsetFamily:
    """
    Shift F down to a monotone family of the same size.

    Coordinates are processed cyclically 1..n; at coordinate i every member
    G containing i with G - {i} outside the family is replaced by G - {i}.
    Stops after a full pass without changes. Each replacement lowers the
    total element count, so the loop terminates.
    """
    current = set(f.sets)
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for i in range(1, f.n + 1):
            bit = coord_bit(i, f.n)
            movers = [g for g in current if g & bit and (g ^ bit) not in current]
            if movers:
                current.difference_update(movers)
                current.update(g ^ bit for g in movers)
                changed = True
    logger.debug("shifting finished after %d passes over n=%d", passes, f.n)
    return SubsetFamily(n=f.n, sets=tuple(current))


# ============================================================
# BOUNDS
# ============================================================

def t_star(p: SoftSpsParams) -> int:
    """Smallest t in [d, n] with C(n-d, t-d) >= k; n if there is none"""
    for t in range(p.d, p.n + 1):
        if binomial(p.n - p.d, t - p.d) >= p.k:
            return t
    return p.n


def soft_sps_bound(p: SoftSpsParams) -> SoftSpsResult:
    """
    sum_{t=1}^{t*} C(n,t) + C(n,t*) sum_{t=t*+1}^{n} C(t*,d) / C(t,d)

    The first sum starts at t = 1 as stated, so the empty set is not
    counted.
    """
    ts = t_star(p)
    head = sum(binomial(p.n, t) for t in range(1, ts + 1))
    tail = sum(
        (Fraction(binomial(ts, p.d), binomial(t, p.d)) for t in range(ts + 1, p.n + 1)),
        Fraction(0),
    )
    return SoftSpsResult(t_star=ts, bound=head + binomial(p.n, ts) * tail)


def classic_sps_bound(n: int, d: int) -> int:
    """sum_{t=0}^{d} C(n, t)"""
    if not (0 <= d <= n):
        raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
    return sum(binomial(n, t) for t in range(d + 1))


def corollary_beta(r: float, alpha: float) -> float:
    """beta = (1 - alpha) h((h^-1(R) - alpha) / (1 - alpha))"""
    return (1.0 - alpha) * gamma(r, alpha)


def densest_d_subset(g: SubsetFamily, d: int, t: int) -> Tuple[CoordSet, int]:
    """
    The d-set contained in the most members of size t, with that count.

    Ties go to the lexicographically smallest d-set. For a monotone family
    the returned set is count-shattered, and the count is at least
    |G_t| C(t,d) / C(n,d).
    """
    if not (0 <= d <= t <= g.n):
        raise DomainError(f"need 0 <= d <= t <= n, got d={d}, t={t}, n={g.n}")
    hits: Counter = Counter()
    for s in g.sets:
        if bin(s).count("1") != t:
            continue
        elements = [i for i in range(1, g.n + 1) if s & coord_bit(i, g.n)]
        hits.update(combinations(elements, d))
    if not hits:
        return CoordSet(n=g.n, indices=tuple(range(1, d + 1))), 0
    best = min(hits, key=lambda s: (-hits[s], s))
    return CoordSet(n=g.n, indices=best), hits[best]
