"""Exact dimer-monomer (matching) counts and entropy constants on the
hanoi and sierpx self-similar graph families."""

from ._core import (
    BudgetExhaustedError,
    ConsistencyError,
    DomainError,
    PrecisionError,
    ResourceLimitError,
    build,
    count_by_boundary,
    count_matchings,
    edge_list,
    entropy,
    entropy_bounds,
    iterate,
    ratio_fixed_point,
    ratios,
    verify,
)

__all__ = [
    "BudgetExhaustedError",
    "ConsistencyError",
    "DomainError",
    "PrecisionError",
    "ResourceLimitError",
    "build",
    "count_by_boundary",
    "count_matchings",
    "edge_list",
    "entropy",
    "entropy_bounds",
    "iterate",
    "ratio_fixed_point",
    "ratios",
    "verify",
]

__version__ = "0.1.0"
