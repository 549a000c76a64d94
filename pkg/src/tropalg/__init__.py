"""Tropical linear algebra over max-plus and min-plus semirings.

The package bundles four layers: scalar semiring arithmetic with
idempotent addition, matrices with closure and residuation-based
equation solving, shortest-path search on weighted digraphs, exact
rational linear programming, and a small script interpreter that ties
them to a command-line calculator.
"""

from .errors import (
    AlgebraMismatch,
    ClosureUndefined,
    DimensionMismatch,
    IllegalElement,
    IndexOutOfRange,
    InvalidGraph,
    NoInverse,
    NoPath,
    NoSolution,
    TropalgError,
    UnsupportedDegree,
)
from .graph import WeightedGraph, find_shortest_path, search_least_distances
from .lp import (
    Infeasible,
    Interval,
    LpProblem,
    Optimal,
    SimplexStats,
    Unbounded,
    simplex_solve,
    solve_univariate_linear,
)
from .semiring import (
    ALGEBRAS_BY_NAME,
    NEG_INF,
    POS_INF,
    Algebra,
    Domain,
    ExtScalar,
    OpCounts,
    Q_CLASSICAL,
    Q_MAX_PLUS,
    Q_MIN_PLUS,
    R64_CLASSICAL,
    R64_MAX_PLUS,
    R64_MIN_PLUS,
    SemiringKind,
    Z_MAX_PLUS,
    Z_MIN_PLUS,
    count_ops,
    semiring_le,
    trop_add,
    trop_closure_scalar,
    trop_mul,
    trop_neg,
)
from .solvers import (
    IntervalBound,
    bellman_homogeneous,
    bellman_inequality,
    bellman_solve,
    solve_lae_tropic,
    solve_lai_tropic,
)
from .trmatrix import (
    TropMatrix,
    closure_block,
    closure_iterative,
    diag,
    identity,
    mat_le,
    mat_mul,
    mat_oplus,
    pad_to_power_of_two,
    pseudo_inverse,
    zero_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "TropalgError",
    "IllegalElement",
    "AlgebraMismatch",
    "NoInverse",
    "ClosureUndefined",
    "DimensionMismatch",
    "NoSolution",
    "InvalidGraph",
    "NoPath",
    "IndexOutOfRange",
    "UnsupportedDegree",
    "SemiringKind",
    "Domain",
    "ExtScalar",
    "NEG_INF",
    "POS_INF",
    "Algebra",
    "ALGEBRAS_BY_NAME",
    "Z_MAX_PLUS",
    "Z_MIN_PLUS",
    "Q_MAX_PLUS",
    "Q_MIN_PLUS",
    "R64_MAX_PLUS",
    "R64_MIN_PLUS",
    "Q_CLASSICAL",
    "R64_CLASSICAL",
    "OpCounts",
    "count_ops",
    "trop_add",
    "trop_mul",
    "trop_neg",
    "trop_closure_scalar",
    "semiring_le",
    "TropMatrix",
    "mat_mul",
    "mat_oplus",
    "mat_le",
    "pseudo_inverse",
    "diag",
    "identity",
    "zero_matrix",
    "pad_to_power_of_two",
    "closure_iterative",
    "closure_block",
    "IntervalBound",
    "solve_lae_tropic",
    "solve_lai_tropic",
    "bellman_solve",
    "bellman_homogeneous",
    "bellman_inequality",
    "WeightedGraph",
    "search_least_distances",
    "find_shortest_path",
    "LpProblem",
    "Optimal",
    "Infeasible",
    "Unbounded",
    "SimplexStats",
    "simplex_solve",
    "solve_univariate_linear",
    "Interval",
]
