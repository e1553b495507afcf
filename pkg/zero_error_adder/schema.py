"""
Core data models using Pydantic.

This module defines the type system shared by every part of the toolkit:
codebooks over {0,1}^n, coordinate sets, zero-error systems, subset
families, joint distributions for the common-message region and the
parameters of the soft Sauer-Perles-Shelah bound.

WORD ENCODING:
A word of length n is stored as a Python int. Coordinate i (1-based,
leftmost character of the text form) is bit n-i, so numeric order of the
ints equals lexicographic order of the '0'/'1' strings.
"""

import math
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


MAX_WORD_LENGTH = 64

# Word is a plain int; see the module docstring for the bit layout
Word = int


# ============================================================
# WORD HELPERS
# ============================================================

def coord_bit(i: int, n: int) -> int:
    """Bit mask of coordinate i (1-based) in a length-n word"""
    return 1 << (n - i)


def word_from_str(text: str) -> Word:
    """'0110' -> int; raises ValueError on anything but 0/1"""
    if any(ch not in "01" for ch in text):
        raise ValueError(f"invalid character in word '{text}'")
    return int(text, 2) if text else 0


def word_to_str(word: Word, n: int) -> str:
    """int -> zero-padded '0'/'1' string of length n"""
    return format(word, f"0{n}b") if n > 0 else ""


def ternary_to_str(ones: Word, twos: Word, n: int) -> str:
    """
    Render a real-sum vector a+b from its parts.

    ``twos`` marks coordinates where both words are 1, ``ones`` where
    exactly one is.
    """
    return "".join(
        "2" if twos >> (n - i) & 1 else "1" if ones >> (n - i) & 1 else "0"
        for i in range(1, n + 1)
    )


# ============================================================
# CODEBOOKS AND COORDINATES
# ============================================================

class Codebook(BaseModel):
    """
    A duplicate-free, nonempty set of binary words of length n.

    Words are kept sorted ascending (lexicographic order of their text form).
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_WORD_LENGTH, description="Word length")
    words: Tuple[int, ...] = Field(description="Codewords as ints, sorted")

    @field_validator('words')
    @classmethod
    def reject_duplicates(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("codebook contains duplicate words")
        return tuple(sorted(v))

    @model_validator(mode='after')
    def check_lengths(self):
        if not self.words:
            raise ValueError("codebook must be nonempty")
        limit = 1 << self.n
        for w in self.words:
            if not (0 <= w < limit):
                raise ValueError(f"word {w} does not fit in {self.n} bits")
        return self

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "Codebook":
        """Build from '0'/'1' strings of equal length"""
        if not strings:
            raise ValueError("codebook must be nonempty")
        n = len(strings[0])
        for s in strings:
            if len(s) != n:
                raise ValueError(f"word '{s}' has length {len(s)}, expected {n}")
        return cls(n=n, words=tuple(word_from_str(s) for s in strings))

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def log_size(self) -> float:
        return math.log2(len(self.words))

    def to_strings(self) -> List[str]:
        return [word_to_str(w, self.n) for w in self.words]


class CoordSet(BaseModel):
    """A subset S of [n] = {1..n}, stored as sorted 1-based indices"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_WORD_LENGTH)
    indices: Tuple[int, ...] = Field(default=())

    @field_validator('indices')
    @classmethod
    def sort_indices(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("coordinate set has repeated indices")
        return tuple(sorted(v))

    @model_validator(mode='after')
    def check_range(self):
        for i in self.indices:
            if not (1 <= i <= self.n):
                raise ValueError(f"invalid index {i}: coordinates run from 1 to {self.n}")
        return self

    @classmethod
    def parse(cls, text: str, n: int) -> "CoordSet":
        """'1,3' -> {1,3}; an empty string is the empty set"""
        text = text.strip().strip("{}")
        if not text:
            return cls(n=n)
        try:
            indices = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"invalid coordinate list '{text}'")
        return cls(n=n, indices=indices)

    @classmethod
    def full(cls, n: int) -> "CoordSet":
        return cls(n=n, indices=tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= coord_bit(i, self.n)
        return m

    def complement(self) -> "CoordSet":
        chosen = set(self.indices)
        return CoordSet(n=self.n, indices=tuple(i for i in range(1, self.n + 1) if i not in chosen))

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


class ZeroErrorSystem(BaseModel):
    """
    An indexed list of codebook pairs with uniform cardinalities.

    m0 is the number of pairs, m1 (m2) the common size of the first
    (second) side books.
    """
    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Tuple[Codebook, Codebook], ...]

    @model_validator(mode='after')
    def check_uniform(self):
        if not self.pairs:
            raise ValueError("system must contain at least one pair")
        n = self.pairs[0][0].n
        m1 = self.pairs[0][0].size
        m2 = self.pairs[0][1].size
        for i, (c1, c2) in enumerate(self.pairs):
            if c1.n != n or c2.n != n:
                raise ValueError(f"Pair {i+1}: word length differs from n={n}")
            if c1.size != m1:
                raise ValueError(f"Pair {i+1}: first codebook has {c1.size} words, expected {m1}")
            if c2.size != m2:
                raise ValueError(f"Pair {i+1}: second codebook has {c2.size} words, expected {m2}")
        return self

    @property
    def n(self) -> int:
        return self.pairs[0][0].n

    @property
    def m0(self) -> int:
        return len(self.pairs)

    @property
    def m1(self) -> int:
        return self.pairs[0][0].size

    @property
    def m2(self) -> int:
        return self.pairs[0][1].size


# ============================================================
# SUBSET FAMILIES
# ============================================================

class SubsetFamily(BaseModel):
    """
    A duplicate-free family of subsets of [n].

    Members use the word encoding: element i of a member is coordinate i of
    its indicator vector. Unlike a codebook the family may be empty.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, le=MAX_WORD_LENGTH)
    sets: Tuple[int, ...] = Field(default=())

    @field_validator('sets')
    @classmethod
    def reject_duplicates(cls, v):
        if len(set(v)) != len(v):
            raise ValueError("family contains duplicate members")
        return tuple(sorted(v))

    @model_validator(mode='after')
    def check_members(self):
        limit = 1 << self.n
        for s in self.sets:
            if not (0 <= s < limit):
                raise ValueError(f"member {s} is not a subset of [{self.n}]")
        return self

    @property
    def size(self) -> int:
        return len(self.sets)


# ============================================================
# DISTRIBUTIONS AND PARAMETERS
# ============================================================

class JointDistribution(BaseModel):
    """
    P_U P_{X1|U} P_{X2|U} with |U| <= 3 and binary X1, X2.

    p_x1_given_u[u] is P(X1 = 1 | U = u); likewise for X2.
    """
    model_config = ConfigDict(frozen=True)

    p_u: Tuple[float, ...]
    p_x1_given_u: Tuple[float, ...]
    p_x2_given_u: Tuple[float, ...]

    @model_validator(mode='after')
    def check_distribution(self):
        k = len(self.p_u)
        if not (1 <= k <= 3):
            raise ValueError(f"U must have support size 1..3, got {k}")
        if len(self.p_x1_given_u) != k or len(self.p_x2_given_u) != k:
            raise ValueError("conditional parameters must have one entry per value of U")
        for name in ("p_u", "p_x1_given_u", "p_x2_given_u"):
            for value in getattr(self, name):
                if not (0.0 <= value <= 1.0):
                    raise ValueError(f"{name} entry {value} is outside [0, 1]")
        if abs(sum(self.p_u) - 1.0) > 1e-12:
            raise ValueError(f"p_u sums to {sum(self.p_u)!r}, not 1")
        return self


class SoftSpsParams(BaseModel):
    """Parameters (n, d, k) of the soft Sauer-Perles-Shelah bound"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    d: int = Field(ge=1)
    k: int = Field(ge=1)

    @model_validator(mode='after')
    def check_d(self):
        if self.d > self.n:
            raise ValueError(f"d={self.d} exceeds n={self.n}")
        return self
