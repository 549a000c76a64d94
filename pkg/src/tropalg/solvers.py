"""Solvers for tropical linear systems built on residuation and closures.

For A x <= b residuation gives a principal solution: on a finite right
hand side it is (b- A)- where minus denotes the pseudo-inverse, and in
general each coordinate takes the tightest cap any row imposes on it.
Every column below the principal solution in the natural order of the
semiring is a solution, which makes the solution set of each coordinate a
half-line. For A x = b the same column is the greatest sub-solution, so
the system is solvable iff the principal solution satisfies it exactly.
The Bellman equation X = A X + B has the least solution A^x B, and the
columns of A^x generate solutions of the homogeneous system A x = x.

Every solver re-verifies its defining equality or inequality by direct
multiplication before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraMismatch, DimensionMismatch, NoSolution
from .semiring import ExtScalar, NEG_INF, POS_INF, SemiringKind, semiring_le, trop_mul, trop_neg
from .trmatrix import TropMatrix, closure_block, mat_le, mat_mul, mat_oplus

__all__ = [
    "IntervalBound",
    "solve_lai_tropic",
    "solve_lae_tropic",
    "bellman_solve",
    "bellman_homogeneous",
    "bellman_inequality",
]


@dataclass(frozen=True, slots=True)
class IntervalBound:
    """One coordinate's solution interval for a system A x <= b."""

    lower: ExtScalar
    upper: ExtScalar
    lower_closed: bool
    upper_closed: bool


def _require_system(a: TropMatrix, b: TropMatrix, what: str):
    if not a.alg.is_tropical:
        raise AlgebraMismatch(f"{what} requires a tropical algebra")
    if a.alg != b.alg:
        raise AlgebraMismatch("matrix and right-hand side live in different algebras")
    if b.cols != 1:
        raise DimensionMismatch("the right-hand side must be a column")
    if a.rows != b.rows:
        raise DimensionMismatch(
            f"matrix has {a.rows} rows but the right-hand side has {b.rows}"
        )


def _principal(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Residuation bound for A x <= b, coordinate by coordinate.

    Each row with a finite a_jk caps x_k at b_j (-a_jk); the cap that is
    least in the natural order wins. Rows whose a_jk is the zero element
    never constrain x_k, and a coordinate no row touches is pinned at the
    zero element, the one value that keeps every product harmless. On a
    finite b this agrees with the negated-transpose product (b- A)-, but
    a zero entry of b forces its row's coordinates down to zero, which
    that product formula would silently drop.
    """
    alg = a.alg
    zero = alg.zero()
    out = []
    for k in range(a.cols):
        best = None
        for j in range(a.rows):
            ajk = a.get(j, k)
            if ajk == zero:
                continue
            cap = trop_mul(b.get(j, 0), trop_neg(ajk), alg)
            if best is None or semiring_le(cap, best, alg):
                best = cap
        out.append(zero if best is None else best)
    return TropMatrix.column(out, alg)


def solve_lai_tropic(a: TropMatrix, b: TropMatrix):
    """Solve A x <= b; returns (principal solution, per-coordinate intervals).

    The solution set is exactly the set of columns below the principal
    solution in the natural order, so over max-plus each coordinate
    ranges over (-inf, x_k] and over min-plus, where the order is
    reversed, over [x_k, +inf). Residuation plus the verification costs
    O(m n) semiring operations.
    """
    _require_system(a, b, "solve_lai_tropic")
    x = _principal(a, b)
    if not mat_le(mat_mul(a, x), b):
        raise AssertionError("residuation produced a non-solution")
    maxplus = a.alg.kind is SemiringKind.MAX_PLUS
    bounds = []
    for k in range(x.rows):
        v = x.entries[k]
        if maxplus:
            bounds.append(IntervalBound(NEG_INF, v, False, True))
        else:
            bounds.append(IntervalBound(v, POS_INF, True, False))
    return x, tuple(bounds)


def solve_lae_tropic(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Solve A x = b exactly, or raise NoSolution.

    The principal solution of the relaxation A x <= b is the greatest
    sub-solution, so the equation is solvable iff it attains b.
    """
    _require_system(a, b, "solve_lae_tropic")
    x = _principal(a, b)
    if mat_mul(a, x) != b:
        raise NoSolution("the system A x = b has no solution")
    return x


def bellman_solve(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """The least solution X = A^x B of the equation X = A X + B."""
    if not a.alg.is_tropical:
        raise AlgebraMismatch("bellman_solve requires a tropical algebra")
    if a.alg != b.alg:
        raise AlgebraMismatch("matrix and right-hand side live in different algebras")
    if a.rows != b.rows:
        raise DimensionMismatch(
            f"matrix has {a.rows} rows but the right-hand side has {b.rows}"
        )
    x = mat_mul(closure_block(a), b)
    if mat_oplus(mat_mul(a, x), b) != x:
        raise AssertionError("closure produced a non-fixed-point")
    return x


def bellman_homogeneous(a: TropMatrix) -> TropMatrix:
    """Columns of A^x that solve the homogeneous equation A x = x.

    The qualifying columns are returned side by side; NoSolution is
    raised when none qualifies.
    """
    if not a.alg.is_tropical:
        raise AlgebraMismatch("bellman_homogeneous requires a tropical algebra")
    closed = closure_block(a)
    kept = []
    for k in range(closed.cols):
        c = closed.col(k)
        if mat_mul(a, c) == c:
            kept.append(c)
    if not kept:
        raise NoSolution("no column of the closure solves A x = x")
    n = a.rows
    ent = []
    for j in range(n):
        for c in kept:
            ent.append(c.entries[j])
    return TropMatrix(n, len(kept), tuple(ent), a.alg)


def bellman_inequality(a: TropMatrix, b: TropMatrix | None = None) -> TropMatrix:
    """Solve the Bellman inequality A x + b <= x.

    Without b the generator A^x of solutions of A x <= x is returned;
    with b the particular solution A^x b is returned, verified against
    the inequality before being handed back.
    """
    if not a.alg.is_tropical:
        raise AlgebraMismatch("bellman_inequality requires a tropical algebra")
    closed = closure_block(a)
    if b is None:
        return closed
    if a.alg != b.alg:
        raise AlgebraMismatch("matrix and right-hand side live in different algebras")
    if a.rows != b.rows:
        raise DimensionMismatch(
            f"matrix has {a.rows} rows but the right-hand side has {b.rows}"
        )
    x = mat_mul(closed, b)
    if not mat_le(mat_oplus(mat_mul(a, x), b), x):
        raise AssertionError("closure produced a non-solution of the inequality")
    return x
