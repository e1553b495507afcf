"""
Codebook operations.

This module provides:
1. Sumsets with multiplicities and zero-error verification of pairs
2. Projection multisets and (k-)shattering, including the maximal
   k-shattered coordinate set
3. S-complement pairs and systematic codebooks
4. Zero-error system verification
5. Standard codebooks (Hamming balls, the full cube) and concatenation

A real sum a + b of two words is keyed by the pair (a & b, a ^ b): the
first marks coordinates summing to 2, the second those summing to 1.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import DEFAULT_SETTINGS, SolverSettings
from .errors import BudgetExceededError, DomainError, LengthMismatchError
from .schema import (
    Codebook, CoordSet, Word, ZeroErrorSystem,
    coord_bit, ternary_to_str, word_to_str, MAX_WORD_LENGTH,
)

logger = logging.getLogger(__name__)


# ============================================================
# RESULT TYPES
# ============================================================

@dataclass
class SumsetMultiset:
    """Real-sum vectors (as '0'/'1'/'2' strings) with multiplicities"""
    n: int
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct(self) -> int:
        return len(self.counts)


@dataclass
class ProjectionMultiset:
    """Patterns c(S) (as '0'/'1' strings of length |S|) with multiplicities"""
    coords: CoordSet
    counts: Dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class PairVerdict:
    """Zero-error verdict for a pair; witness is (a, b, a', b') with a+b = a'+b'"""
    is_zero_error: bool
    witness: Optional[Tuple[Word, Word, Word, Word]] = None


@dataclass(frozen=True)
class ShatterResult:
    """
    Largest k-shattered coordinate set.

    size is -1 (and witness None) when even the empty set is not
    k-shattered, i.e. the codebook has fewer than k words.
    """
    size: int
    witness: Optional[CoordSet]


@dataclass(frozen=True)
class SystematicVerdict:
    is_systematic: bool
    target_size: int
    witness: Optional[CoordSet] = None


@dataclass(frozen=True)
class SystemVerdict:
    """
    Zero-error verdict for a system.

    A failing pair sets first == second and carries pair_witness; two
    overlapping sumsets set first < second and the shared sum_vector.
    Indices are 0-based.
    """
    is_zero_error_system: bool
    first: Optional[int] = None
    second: Optional[int] = None
    sum_vector: Optional[str] = None
    pair_witness: Optional[Tuple[Word, Word, Word, Word]] = None


# ============================================================
# SUMSETS
# ============================================================

def _check_same_n(c1: Codebook, c2: Codebook):
    if c1.n != c2.n:
        raise LengthMismatchError(f"codebooks have lengths {c1.n} and {c2.n}")


def _check_coords(c: Codebook, s: CoordSet):
    if s.n != c.n:
        raise LengthMismatchError(f"coordinate set is over [{s.n}] but the codebook has n={c.n}")


def sumset(c1: Codebook, c2: Codebook) -> SumsetMultiset:
    """C1 + C2 over the reals, with multiplicities"""
    _check_same_n(c1, c2)
    packed = Counter((a & b, a ^ b) for a in c1.words for b in c2.words)
    counts = {ternary_to_str(ones, twos, c1.n): m for (twos, ones), m in packed.items()}
    return SumsetMultiset(n=c1.n, counts=dict(sorted(counts.items())))


def is_zero_error_pair(c1: Codebook, c2: Codebook) -> PairVerdict:
    """
    True iff every element of C1 + C2 has multiplicity one.

    Pairs are scanned in lexicographic order; the witness is the first
    collision met, earlier pair first.
    """
    _check_same_n(c1, c2)
    seen: Dict[Tuple[int, int], Tuple[Word, Word]] = {}
    for a in c1.words:
        for b in c2.words:
            key = (a & b, a ^ b)
            earlier = seen.get(key)
            if earlier is not None:
                return PairVerdict(False, (earlier[0], earlier[1], a, b))
            seen[key] = (a, b)
    return PairVerdict(True)


def sum_rate(c1: Codebook, c2: Codebook) -> float:
    """(log2|C1| + log2|C2|) / n"""
    _check_same_n(c1, c2)
    if c1.n == 0:
        raise DomainError("sum rate is undefined for n = 0")
    return (c1.log_size + c2.log_size) / c1.n


# ============================================================
# PROJECTIONS AND SHATTERING
# ============================================================

def _extract(word: Word, n: int, indices: Sequence[int]) -> str:
    return "".join("1" if word & coord_bit(i, n) else "0" for i in indices)


def project(c: Codebook, s: CoordSet) -> ProjectionMultiset:
    """P_S^+(C): the multiset of restrictions c(S)"""
    _check_coords(c, s)
    counts = Counter(_extract(w, c.n, s.indices) for w in c.words)
    return ProjectionMultiset(coords=s, counts=dict(sorted(counts.items())))


def _bit_matrix(c: Codebook) -> np.ndarray:
    """|C| x n matrix of bits, column j is coordinate j+1"""
    shifts = np.arange(c.n - 1, -1, -1, dtype=np.uint64)
    words = np.array(c.words, dtype=np.uint64)[:, None]
    return ((words >> shifts) & np.uint64(1)).astype(np.int64)


def _pattern_counts(matrix: np.ndarray, indices: Sequence[int]) -> np.ndarray:
    """Occurrences of each of the 2^|S| patterns; index = pattern as a binary number"""
    t = len(indices)
    if t == 0:
        return np.array([matrix.shape[0]])
    weights = 1 << np.arange(t - 1, -1, -1, dtype=np.int64)
    patterns = matrix[:, [i - 1 for i in indices]] @ weights
    return np.bincount(patterns, minlength=1 << t)


def _is_k_shattered(matrix: np.ndarray, indices: Sequence[int], k: int) -> bool:
    if (1 << len(indices)) * k > matrix.shape[0]:
        return False
    return int(_pattern_counts(matrix, indices).min()) >= k


def is_k_shattered(c: Codebook, s: CoordSet, k: int = 1) -> bool:
    """All 2^|S| patterns occur at least k times in P_S^+(C)"""
    _check_coords(c, s)
    if k < 1:
        raise DomainError(f"k={k} must be at least 1")
    return _is_k_shattered(_bit_matrix(c), s.indices, k)


def _next_level(current: List[Tuple[int, ...]], n: int) -> Iterable[Tuple[int, ...]]:
    """
    Candidate (t+1)-sets whose t-subsets are all in ``current``.

    ``current`` is lexicographically sorted, and so is the output.
    """
    known = set(current)
    for base in current:
        start = base[-1] + 1 if base else 1
        for j in range(start, n + 1):
            cand = base + (j,)
            if all(cand[:i] + cand[i + 1:] in known for i in range(len(cand) - 1)):
                yield cand


def _shattered_levels(c: Codebook, k: int, settings: SolverSettings):
    """
    Yield (t, k-shattered t-sets in lex order) for t = 0, 1, ...

    A set is tested only if all of its subsets one element smaller passed:
    the multiplicity of a pattern on a superset is at most that of its
    restriction. Stops once 2^(t+1) k exceeds |C|.
    """
    if k < 1:
        raise DomainError(f"k={k} must be at least 1")
    if c.n > settings.max_shatter_n:
        raise BudgetExceededError(
            f"exhaustive shattering search is limited to n <= {settings.max_shatter_n}, got n={c.n}"
        )
    if c.size < k:
        return
    matrix = _bit_matrix(c)
    current: List[Tuple[int, ...]] = [()]
    t = 0
    yield t, current
    while (1 << (t + 1)) * k <= c.size:
        current = [s for s in _next_level(current, c.n) if _is_k_shattered(matrix, s, k)]
        if not current:
            return
        t += 1
        logger.debug("k=%d: %d shattered sets of size %d", k, len(current), t)
        yield t, current


def max_k_shattered(
    c: Codebook,
    k: int = 1,
    settings: Optional[SolverSettings] = None,
) -> ShatterResult:
    """Largest k-shattered S (k = 1 gives the VC-dimension), lex-smallest witness"""
    settings = settings or DEFAULT_SETTINGS
    best = ShatterResult(size=-1, witness=None)
    for t, sets in _shattered_levels(c, k, settings):
        best = ShatterResult(size=t, witness=CoordSet(n=c.n, indices=sets[0]))
    return best


def shattered_sets(
    c: Codebook,
    k: int,
    size: int,
    settings: Optional[SolverSettings] = None,
) -> List[CoordSet]:
    """All k-shattered coordinate sets of the given size, in lex order"""
    settings = settings or DEFAULT_SETTINGS
    for t, sets in _shattered_levels(c, k, settings):
        if t == size:
            return [CoordSet(n=c.n, indices=s) for s in sets]
    return []


def all_shattered_sets(c: Codebook, k: int = 1, settings: Optional[SolverSettings] = None) -> List[CoordSet]:
    """Every k-shattered coordinate set, by size and then lex order"""
    settings = settings or DEFAULT_SETTINGS
    return [
        CoordSet(n=c.n, indices=s)
        for _, sets in _shattered_levels(c, k, settings)
        for s in sets
    ]


def s_complement_pairs(c1: Codebook, c2: Codebook, s: CoordSet) -> List[Tuple[Word, Word]]:
    """Pairs (a, b) with a(S) + b(S) equal to the all-ones vector"""
    _check_same_n(c1, c2)
    _check_coords(c1, s)
    mask = s.mask
    return [(a, b) for a in c1.words for b in c2.words if (a ^ b) & mask == mask]


def is_systematic(c: Codebook, settings: Optional[SolverSettings] = None) -> SystematicVerdict:
    """
    Some S with |S| = log2|C| is shattered.

    When |C| is not a power of two the target size is ceil(log2|C|).
    """
    target = (c.size - 1).bit_length()
    sets = shattered_sets(c, 1, target, settings)
    if sets:
        return SystematicVerdict(True, target, sets[0])
    return SystematicVerdict(False, target)


# ============================================================
# ZERO-ERROR SYSTEMS
# ============================================================

def is_zero_error_system(v: ZeroErrorSystem) -> SystemVerdict:
    """Every pair is zero-error and the sumsets are mutually disjoint"""
    n = v.n
    owner: Dict[Tuple[int, int], int] = {}
    for i, (c1, c2) in enumerate(v.pairs):
        verdict = is_zero_error_pair(c1, c2)
        if not verdict.is_zero_error:
            a, b = verdict.witness[0], verdict.witness[1]
            return SystemVerdict(
                False, first=i, second=i,
                sum_vector=ternary_to_str(a ^ b, a & b, n),
                pair_witness=verdict.witness,
            )
        for a in c1.words:
            for b in c2.words:
                key = (a & b, a ^ b)
                j = owner.get(key)
                if j is not None:
                    return SystemVerdict(
                        False, first=j, second=i,
                        sum_vector=ternary_to_str(a ^ b, a & b, n),
                    )
        for a in c1.words:
            for b in c2.words:
                owner[(a & b, a ^ b)] = i
    return SystemVerdict(True)


# ============================================================
# STANDARD CODEBOOKS
# ============================================================

def hamming_ball(n: int, d: int) -> Codebook:
    """All words of length n with at most d ones"""
    if not (0 <= d <= n):
        raise DomainError(f"radius d={d} must lie in [0, n={n}]")
    words = []
    for t in range(d + 1):
        for ones in combinations(range(1, n + 1), t):
            w = 0
            for i in ones:
                w |= coord_bit(i, n)
            words.append(w)
    return Codebook(n=n, words=tuple(words))


def full_cube(n: int) -> Codebook:
    """{0,1}^n"""
    return Codebook(n=n, words=tuple(range(1 << n)))


def concatenate(c: Codebook, other: Codebook) -> Codebook:
    """C x C': every word of C followed by every word of C'"""
    if c.n + other.n > MAX_WORD_LENGTH:
        raise DomainError(f"concatenation length {c.n + other.n} exceeds {MAX_WORD_LENGTH}")
    return Codebook(
        n=c.n + other.n,
        words=tuple((a << other.n) | b for a in c.words for b in other.words),
    )


def format_quadruple(witness: Tuple[Word, Word, Word, Word], n: int) -> str:
    """'(a, b, a2, b2)' with every word in text form"""
    return "(" + ", ".join(word_to_str(w, n) for w in witness) + ")"
