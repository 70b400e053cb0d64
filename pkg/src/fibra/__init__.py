"""Fibonacci words and arrays: generation, tandem counts, factor complexity."""

from .analysis import (
    CountReport,
    PrimitivityMode,
    TandemType,
    complexity2d_finite,
    complexity2d_infinite,
    count_Ia_closed,
    count_Ib_closed,
    count_quartics_closed,
    distinct_Ia_closed,
    distinct_Ib_closed,
    distinct_quartics_closed,
    enumerate_factors_2d,
    enumerate_quartics,
    enumerate_tandems,
    verify_sweep,
)
from .array2d import Grid, col_concat, fib_array, is_2d_primitive, primitive_root_2d, row_concat, subgrid
from .dfao import export_automaton, prefix_via_dfao, symbol_at
from .errors import FibraError
from .fibcore import fib, zeck_value, zeckendorf
from .morphism2d import apply_mu, fib_array_via_mu, infinite_prefix_2d, mu_power
from .word1d import (
    complexity_closed,
    complexity_enum,
    distinct_squares_closed,
    enumerate_squares,
    fib_word,
    infinite_prefix,
    square_occurrences_closed,
)

__version__ = "0.1.0"
