# zero_error_adder package
"""
Zero-error binary adder channel - outer bounds and codebook combinatorics.
"""

from .bounds import r_sigma, sumsw_bound, theorem1_bound
from .codebook import is_zero_error_pair, is_zero_error_system, max_k_shattered
from .pipeline import build_system, exhaustive_max_pair
from .schema import Codebook, CoordSet, ZeroErrorSystem
from .sps import shift_to_monotone, soft_sps_bound

__all__ = [
    'Codebook', 'CoordSet', 'ZeroErrorSystem',
    'r_sigma', 'sumsw_bound', 'theorem1_bound',
    'is_zero_error_pair', 'is_zero_error_system', 'max_k_shattered',
    'shift_to_monotone', 'soft_sps_bound',
    'build_system', 'exhaustive_max_pair',
]
