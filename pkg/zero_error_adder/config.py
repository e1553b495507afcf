"""
Solver settings.

All tunable resolution knobs of the optimizers and exhaustive searches live
in one pydantic model. Functions take an optional ``settings`` argument and
fall back to DEFAULT_SETTINGS.
"""

from pydantic import BaseModel, ConfigDict, Field


class SolverSettings(BaseModel):
    """Numerical resolution and search budgets"""
    model_config = ConfigDict(frozen=True)

    # One-dimensional optimizers
    eta_grid: int = Field(default=10_000, ge=10, le=1_000_000,
                          description="Uniform grid points for the inner eta maximization")
    alpha_grid: int = Field(default=1_000, ge=10, le=100_000,
                            description="Uniform grid points for the outer alpha minimization")
    golden_tol: float = Field(default=1e-9, gt=0, le=1e-3,
                              description="Interval width at which golden-section refinement stops")
    alpha_tol: float = Field(default=1e-6, gt=0, le=1e-2,
                             description="Refinement width for the outer alpha search")
    inverse_entropy_tol: float = Field(default=1e-12, gt=0, le=1e-6,
                                       description="Absolute tolerance of the h^-1 bisection")
    screen_grid: int = Field(default=128, ge=10, le=100_000,
                             description="Coarse eta grid used to settle easy lemma checks")

    # Exhaustive combinatorics
    max_shatter_n: int = Field(default=24, ge=1, le=64,
                               description="Largest n for exhaustive shattering searches")
    full_search_n: int = Field(default=4, ge=1, le=6,
                               description="Largest n searched exhaustively without a time budget")
    max_search_n: int = Field(default=6, ge=1, le=8,
                              description="Largest n the pair search accepts at all")
    max_partition_coords: int = Field(default=20, ge=0, le=30,
                                      description="Largest |S| split into 2^|S| projection buckets")


DEFAULT_SETTINGS = SolverSettings()
