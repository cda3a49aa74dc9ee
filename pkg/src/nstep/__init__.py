"""nstep: exact arithmetic and identity checking for n-step Fibonacci,
n-step Lucas and generalized n-step sequences."""

from .engine import (Family, OrderError, SeedError, SequenceSpec, TermCache,
                     Window, make_spec)
from .fasteval import DoublingEvaluator, Ring, matrix_power_oracle, term_at
from .identities import (GridConfig, adjudicate, all_ids, check,
                         registry_table, run_grid)
from .series import (generating_function, partial_sum_closed, sum_first,
                     weighted_partial_sum)

__all__ = [
    "DoublingEvaluator",
    "Family",
    "GridConfig",
    "OrderError",
    "Ring",
    "SeedError",
    "SequenceSpec",
    "TermCache",
    "Window",
    "adjudicate",
    "all_ids",
    "check",
    "generating_function",
    "make_spec",
    "matrix_power_oracle",
    "partial_sum_closed",
    "registry_table",
    "run_grid",
    "sum_first",
    "term_at",
    "weighted_partial_sum",
]

__version__ = "0.1.0"
