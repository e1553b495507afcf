"""
Test Fixtures - Named codebooks and systems.

These can be used to:
1. Exercise verification and construction without writing files
2. Serve as known-answer inputs for the bounds on shattering
3. Seed the CLI examples in the README
"""

from typing import Tuple

from .codebook import hamming_ball
from .schema import Codebook, ZeroErrorSystem

# ============================================================
# EXAMPLE CODEBOOKS (text form)
# ============================================================

# Zero-error pair of length 2 with sum rate (1/2) log2 6
INTRO_C1 = ["00", "11"]
INTRO_C2 = ["00", "01", "10"]

# A colliding pair: 01 + 00 = 00 + 01
COLLIDING_C1 = ["00", "01"]
COLLIDING_C2 = ["00", "01"]

# Monotone family on [3]: {}, {1}, {2}, {1,2}, {3}
MONOTONE_FAMILY = ["000", "100", "010", "110", "001"]

# Not monotone: {1,2} is present without {2}
SHIFTABLE_FAMILY = ["000", "100", "110", "011"]


def intro_pair() -> Tuple[Codebook, Codebook]:
    return Codebook.from_strings(INTRO_C1), Codebook.from_strings(INTRO_C2)


def colliding_pair() -> Tuple[Codebook, Codebook]:
    return Codebook.from_strings(COLLIDING_C1), Codebook.from_strings(COLLIDING_C2)


def intro_system() -> ZeroErrorSystem:
    """The intro pair as a one-pair system"""
    return ZeroErrorSystem(pairs=(intro_pair(),))


def duplicated_system() -> ZeroErrorSystem:
    """The intro pair listed twice; its two sumsets coincide"""
    pair = intro_pair()
    return ZeroErrorSystem(pairs=(pair, pair))


# ============================================================
# REGISTRY
# ============================================================

ALL_FIXTURES = {
    "intro_c1": lambda: Codebook.from_strings(INTRO_C1),
    "intro_c2": lambda: Codebook.from_strings(INTRO_C2),
    "colliding_c1": lambda: Codebook.from_strings(COLLIDING_C1),
    "monotone_family": lambda: Codebook.from_strings(MONOTONE_FAMILY),
    "shiftable_family": lambda: Codebook.from_strings(SHIFTABLE_FAMILY),
    "ball_8_2": lambda: hamming_ball(8, 2),
}
