"""
End-to-end procedures.

This module provides:
1. Weldon's bound for systematic codebooks and its shattering-based
   generalization (which is always weaker than the Shannon sum-rate line)
2. Partitioning a codebook by its projection on a coordinate set
3. The construction of a zero-error system from a zero-error pair
4. Exhaustive search for the best zero-error pairs at small n

Usage:
    from zero_error_adder.pipeline import build_system
    from zero_error_adder.fixtures import intro_pair
    from zero_error_adder.schema import CoordSet

    c1, c2 = intro_pair()
    report = build_system(c1, c2, CoordSet(n=2, indices=(1,)))
    print(report.system.m0, report.verdict.is_zero_error_system)
"""

import logging
import math
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Optional, Tuple

from .bounds import LOG2_3
from .codebook import SystemVerdict, is_zero_error_pair, is_zero_error_system
from .config import DEFAULT_SETTINGS, SolverSettings
from .errors import BudgetExceededError, DomainError, LengthMismatchError, PreconditionError
from .numerics import inv_binary_entropy
from .schema import Codebook, CoordSet, Word, ZeroErrorSystem, coord_bit, word_to_str

logger = logging.getLogger(__name__)


# ============================================================
# WELDON-TYPE BOUNDS
# ============================================================

def _check_rate(name: str, value: float, upper: float = 1.0):
    if not (0.0 <= value <= upper):
        raise DomainError(f"{name}={value!r} is outside [0, {upper}]")


def weldon_bound(r1: float) -> float:
    """R2 <= (1 - R1) log2 3 when C1 is systematic"""
    _check_rate("R1", r1)
    return (1.0 - r1) * LOG2_3


def weldon_max_r1(r2: float) -> float:
    """Largest R1 that Weldon's bound leaves open for a given R2"""
    _check_rate("R2", r2, LOG2_3)
    return 1.0 - r2 / LOG2_3


def proposition1_bound(r1: float) -> float:
    """R2 <= (1 - h^-1(R1)) log2 3 for any zero-error pair"""
    _check_rate("R1", r1)
    return (1.0 - inv_binary_entropy(r1)) * LOG2_3


# ============================================================
# PARTITION BY PROJECTION
# ============================================================

def _pattern(word: Word, n: int, indices: Tuple[int, ...]) -> int:
    g = 0
    for i in indices:
        g = (g << 1) | (1 if word & coord_bit(i, n) else 0)
    return g


def _restrict(words: Tuple[Word, ...], n: int, coords: CoordSet) -> Codebook:
    return Codebook(n=coords.size, words=tuple(_pattern(w, n, coords.indices) for w in words))


@dataclass
class PartitionByProjection:
    """
    Words of a codebook grouped by their restriction to S.

    Keys are patterns g as ints (first coordinate of S most significant);
    every one of the 2^|S| patterns is present, possibly with no words.
    """
    s: CoordSet
    buckets: Dict[int, Tuple[Word, ...]] = field(default_factory=dict)

    def label(self, g: int) -> str:
        return word_to_str(g, self.s.size)


def partition_by_projection(
    c: Codebook,
    s: CoordSet,
    settings: Optional[SolverSettings] = None,
) -> PartitionByProjection:
    """C_g = {c in C : c(S) = g} for every g in {0,1}^|S|"""
    settings = settings or DEFAULT_SETTINGS
    if s.n != c.n:
        raise LengthMismatchError(f"coordinate set is over [{s.n}] but the codebook has n={c.n}")
    if s.size > settings.max_partition_coords:
        raise BudgetExceededError(
            f"partitioning enumerates 2^|S| buckets; |S| <= {settings.max_partition_coords}"
        )
    grouped: Dict[int, List[Word]] = defaultdict(list)
    for w in c.words:
        grouped[_pattern(w, c.n, s.indices)].append(w)
    buckets = {g: tuple(grouped.get(g, ())) for g in range(1 << s.size)}
    return PartitionByProjection(s=s, buckets=buckets)


# ============================================================
# SYSTEM CONSTRUCTION
# ============================================================

@dataclass
class ConstructionReport:
    """
    Result of turning a zero-error pair into a zero-error system on S-bar.

    k is the common size of the first-side pieces, 2^k_prime_log that of
    the second-side pieces, g_set the second-side patterns kept and mass
    the number of second-side words they hold.
    """
    n: int
    s: CoordSet
    k: int
    k_prime_log: int
    g_set: List[str]
    system: ZeroErrorSystem
    verdict: SystemVerdict
    mass: int
    c2_size: int

    @property
    def mass_bound(self) -> float:
        """|C2| / (2 (n R2 + 1)) with n R2 = log2|C2|"""
        return self.c2_size / (2.0 * (math.log2(self.c2_size) + 1.0))

    @property
    def mass_bound_holds(self) -> bool:
        return self.mass >= self.mass_bound

    @property
    def log_slack_holds(self) -> bool:
        """log2 m0 + log2 m2 >= log2|C2| - 1 - log2(log2|C2| + 1)"""
        log_c2 = math.log2(self.c2_size)
        lhs = math.log2(self.system.m0) + math.log2(self.system.m2)
        return lhs >= log_c2 - 1.0 - math.log2(log_c2 + 1.0) - 1e-12

    @property
    def alpha(self) -> float:
        return self.s.size / self.n

    @property
    def m(self) -> int:
        """Length of the system words, |S-bar|"""
        return self.n - self.s.size

    def rates(self) -> Optional[Tuple[float, float, float]]:
        """(r0, r1, r2) = log2(m0, m1, m2) / m; None when S-bar is empty"""
        if self.m == 0:
            return None
        v = self.system
        return (math.log2(v.m0) / self.m, math.log2(v.m1) / self.m, math.log2(v.m2) / self.m)


def build_system(
    c1: Codebook,
    c2: Codebook,
    s: CoordSet,
    settings: Optional[SolverSettings] = None,
) -> ConstructionReport:
    """
    Construct a zero-error system over S-bar from a zero-error pair.

    Every first-side bucket C1_g keeps its k smallest words, k being the
    smallest bucket size; every nonempty second-side bucket C2_g keeps its
    2^floor(log2|C2_g|) smallest words. The size class k' capturing the
    most second-side words wins (smaller k' on ties), G is the set of
    patterns in that class, and the system pairs the first-side piece of
    the complement pattern with the second-side piece of g, restricted to
    S-bar.
    """
    if c1.n != c2.n:
        raise LengthMismatchError(f"codebooks have lengths {c1.n} and {c2.n}")
    if not is_zero_error_pair(c1, c2).is_zero_error:
        raise PreconditionError("construction needs a zero-error pair")

    first = partition_by_projection(c1, s, settings)
    second = partition_by_projection(c2, s, settings)

    k = min(len(words) for words in first.buckets.values())
    if k == 0:
        empty = next(g for g, words in first.buckets.items() if not words)
        raise PreconditionError(
            f"S={s.label()} is not shattered by C1: pattern {first.label(empty)} has no words"
        )

    trimmed_second: Dict[int, Tuple[Word, ...]] = {}
    size_class: Dict[int, int] = {}
    class_mass: Dict[int, int] = defaultdict(int)
    for g, words in second.buckets.items():
        if not words:
            continue
        e = len(words).bit_length() - 1
        trimmed_second[g] = words[: 1 << e]
        size_class[g] = e
        class_mass[e] += 1 << e

    k_prime = min(class_mass, key=lambda e: (-class_mass[e], e))
    g_set = sorted(g for g, e in size_class.items() if e == k_prime)
    logger.debug("S=%s: k=%d, class masses %s, chose k'=%d", s.label(), k, dict(class_mass), k_prime)

    s_bar = s.complement()
    all_ones = (1 << s.size) - 1
    pairs = tuple(
        (
            _restrict(first.buckets[g ^ all_ones][:k], c1.n, s_bar),
            _restrict(trimmed_second[g], c2.n, s_bar),
        )
        for g in g_set
    )
    system = ZeroErrorSystem(pairs=pairs)
    verdict = is_zero_error_system(system)
    if not verdict.is_zero_error_system:
        logger.error("construction on S=%s produced a colliding system: %s", s.label(), verdict)

    return ConstructionReport(
        n=c1.n,
        s=s,
        k=k,
        k_prime_log=k_prime,
        g_set=[first.label(g) for g in g_set],
        system=system,
        verdict=verdict,
        mass=class_mass[k_prime],
        c2_size=c2.size,
    )


# ============================================================
# EXHAUSTIVE SEARCH
# ============================================================

@dataclass
class SearchResult:
    """
    Best |C1| |C2| over zero-error pairs of length n.

    complete is False when a time budget cut the search short; the
    product and witnesses are then the best found so far.
    """
    n: int
    best_product: int
    witnesses: List[Tuple[Codebook, Codebook]] = field(default_factory=list)
    complete: bool = True
    examined: int = 0


def _difference(a: Word, b: Word) -> Tuple[int, int]:
    """a - b as (coordinates equal to +1, coordinates equal to -1)"""
    return a & ~b, b & ~a


def _conflict_graph(c1: Tuple[Word, ...], n: int) -> List[int]:
    """
    adj[b] has bit b' set when b and b' cannot both be in C2:
    b' - b is a difference of two words of C1.
    """
    diffs = {_difference(a, a2) for a in c1 for a2 in c1 if a != a2}
    size = 1 << n
    adj = [0] * size
    for b in range(size):
        for b2 in range(b + 1, size):
            if _difference(b2, b) in diffs:
                adj[b] |= 1 << b2
                adj[b2] |= 1 << b
    return adj


def _maximum_independent_sets(adj: List[int], candidates: int, floor: int) -> Tuple[int, List[int]]:
    """
    All maximum independent sets, as bitmasks, if the maximum is >= floor.

    Returns (size, sets); sets is empty when nothing reaches floor.
    """
    best = [floor, []]

    def grow(chosen: int, cand: int, size: int):
        if size + bin(cand).count("1") < best[0]:
            return
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, [chosen]
            else:
                best[1].append(chosen)
            return
        v = cand & -cand
        grow(chosen | v, cand & ~adj[v.bit_length() - 1] & ~v, size + 1)
        grow(chosen, cand & ~v, size)

    grow(0, candidates, 0)
    return best[0], best[1]


def _independent_sets(adj: List[int], cand: int, chosen: int = 0) -> Iterator[int]:
    """Every nonempty independent set, each exactly once"""
    while cand:
        v = cand & -cand
        cand &= ~v
        grown = chosen | v
        yield grown
        yield from _independent_sets(adj, cand & ~adj[v.bit_length() - 1], grown)


def _mask_words(mask: int) -> Tuple[Word, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _symmetries(n: int) -> List[List[int]]:
    """Word maps of every coordinate permutation combined with every flip pattern"""
    maps = []
    for perm in permutations(range(1, n + 1)):
        moved = [0] * (1 << n)
        for w in range(1 << n):
            out = 0
            for src, dst in zip(range(1, n + 1), perm):
                if w & coord_bit(src, n):
                    out |= coord_bit(dst, n)
            moved[w] = out
        for flip in range(1 << n):
            maps.append([moved[w] ^ flip for w in range(1 << n)])
    return maps


def _canonical(pair: Tuple[Tuple[Word, ...], Tuple[Word, ...]], maps: List[List[int]]):
    """Lexicographically least image of the pair (or its swap, for equal sizes)"""
    c1, c2 = pair
    options = [(c1, c2)]
    if len(c1) == len(c2):
        options.append((c2, c1))
    return min(
        (tuple(sorted(m[w] for w in a)), tuple(sorted(m[w] for w in b)))
        for m in maps
        for a, b in options
    )


def exhaustive_max_pair(
    n: int,
    time_budget: Optional[float] = None,
    canonical: bool = True,
    settings: Optional[SolverSettings] = None,
) -> SearchResult:
    """
    Maximum of |C1| |C2| over zero-error pairs in {0,1}^n.

    WLOG |C1| <= |C2| (the pair condition is symmetric) and C1 contains the
    zero word (flipping a coordinate in both books preserves zero-error).
    For each C1 the best C2 is a maximum independent set of the conflict
    graph. With canonical=True witnesses are deduplicated up to coordinate
    permutations, flips and swapping the books.
    """
    settings = settings or DEFAULT_SETTINGS
    if n < 1:
        raise DomainError(f"n={n} must be at least 1")
    if n > settings.max_search_n:
        raise BudgetExceededError(f"pair search is limited to n <= {settings.max_search_n}")
    if n > settings.full_search_n and time_budget is None:
        raise BudgetExceededError(
            f"n={n} exceeds the exhaustive limit {settings.full_search_n}; pass a time budget"
        )

    size = 1 << n
    everything = (1 << size) - 1
    cap = math.isqrt(3 ** n)  # |C1|^2 <= |C1||C2| <= 3^n
    started = time.monotonic()

    result = SearchResult(n=n, best_product=0)
    found: List[Tuple[Tuple[Word, ...], Tuple[Word, ...]]] = []

    for m1 in range(1, cap + 1):
        for rest in combinations(range(1, size), m1 - 1):
            if time_budget is not None and time.monotonic() - started > time_budget:
                result.complete = False
                logger.warning("search for n=%d stopped by the %.1fs budget", n, time_budget)
                break
            c1 = (0,) + rest
            result.examined += 1
            needed = max(m1, -(-result.best_product // m1))
            if needed > size:
                continue
            m2, sets = _maximum_independent_sets(_conflict_graph(c1, n), everything, needed)
            if not sets:
                continue
            if m1 * m2 > result.best_product:
                result.best_product = m1 * m2
                found = []
            found.extend((c1, _mask_words(s)) for s in sets)
        if not result.complete:
            break

    if canonical:
        maps = _symmetries(n)
        found = sorted({_canonical(pair, maps) for pair in found})
    else:
        found = sorted(found)
    result.witnesses = [(Codebook(n=n, words=a), Codebook(n=n, words=b)) for a, b in found]
    logger.info("n=%d: best product %d from %d C1 candidates", n, result.best_product, result.examined)
    return result


def enumerate_zero_error_pairs(n: int) -> Iterator[Tuple[Codebook, Codebook]]:
    """
    Every zero-error pair of length n <= 3 whose first book holds the zero
    word. Any other pair maps onto one of these by flipping coordinates.
    """
    if not (1 <= n <= 3):
        raise BudgetExceededError(f"pair enumeration is limited to 1 <= n <= 3, got n={n}")
    size = 1 << n
    everything = (1 << size) - 1
    for m1 in range(1, size + 1):
        for rest in combinations(range(1, size), m1 - 1):
            c1 = (0,) + rest
            first = Codebook(n=n, words=c1)
            for mask in _independent_sets(_conflict_graph(c1, n), everything):
                yield first, Codebook(n=n, words=_mask_words(mask))
