"""Evaluator for parsed calculator scripts.

A Session starts in the classical rational space Q and changes algebra on
each SPACE statement. Values remember the space they were created under;
mixing spaces is an error rather than a silent coercion. Expression
statements always print. An assignment prints exactly when its right-hand
side is a command call, so `x = \\SimplexMax(A, b, c);` shows the answer
while plain data bindings like `A = [[1, 2], [3, 0]];` stay quiet.

Printed forms: scalars as integers, reduced fractions or trimmed floats;
the two infinities as -\\infty and \\infty; a one-column matrix as a flat
list [4, 3]; every other matrix as nested rows [[0, 1], [2, 0]]; solution
intervals with ( ) for open and [ ] for closed ends and \\emptyset when
empty. The latex format differs only for matrices, which become pmatrix
blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .. import lp as _lp
from ..errors import ClosureUndefined, NoSolution, TropalgError
from ..graph import WeightedGraph, find_shortest_path, search_least_distances
from ..semiring import (
    ALGEBRAS_BY_NAME,
    NEG_INF,
    POS_INF,
    Algebra,
    Domain,
    ExtScalar,
    Q_CLASSICAL,
    SemiringKind,
    trop_add,
    trop_closure_scalar,
    trop_mul,
    trop_neg,
)
from ..solvers import (
    bellman_homogeneous,
    bellman_inequality,
    bellman_solve,
    solve_lae_tropic,
    solve_lai_tropic,
)
from ..trmatrix import TropMatrix, closure_block, mat_mul, mat_oplus
from .errors import ArityError, EvalError, UnknownCommand, UnknownSpace
from .parser import (
    Assign,
    BinOp,
    Call,
    EmptyLit,
    ExprStmt,
    Ineq,
    InfinityLit,
    ListLit,
    MatrixLit,
    ScalarLit,
    SpaceDecl,
    UnaryNeg,
    Var,
)

__all__ = [
    "Session",
    "RenderOptions",
    "Binding",
    "UndefinedClosure",
    "EmptyMatrix",
    "VertexPath",
    "IntervalList",
    "LpResult",
    "evaluate",
    "render",
]


@dataclass(frozen=True)
class UndefinedClosure:
    """Scalar closure that diverges; prints as the missing infinity."""

    sign: int


@dataclass(frozen=True)
class EmptyMatrix:
    """The empty literal () or [], used for absent constraint groups."""


@dataclass(frozen=True)
class VertexPath:
    vertices: tuple


@dataclass(frozen=True)
class IntervalList:
    """Per-coordinate solution bounds; one (lower, upper) row per unknown."""

    rows: tuple


@dataclass(frozen=True)
class LpResult:
    outcome: object
    domain: Domain


@dataclass(frozen=True)
class Binding:
    value: object
    space: str


@dataclass
class Session:
    space_name: str = "Q"
    algebra: Algebra = Q_CLASSICAL
    poly_var: str | None = None
    bindings: dict = field(default_factory=dict)
    output: list = field(default_factory=list)


@dataclass(frozen=True)
class RenderOptions:
    fmt: str = "plain"
    show_objective: bool = False


def evaluate(stmts, session: Session, options: RenderOptions | None = None, emit=None):
    """Run statements against the session; returns the lines printed here."""
    options = options or RenderOptions()
    ev = _Evaluator(session)
    lines: list[str] = []

    def out(line: str):
        session.output.append(line)
        lines.append(line)
        if emit is not None:
            emit(line)

    for stmt in stmts:
        if isinstance(stmt, SpaceDecl):
            ev.set_space(stmt)
            continue
        if isinstance(stmt, Assign):
            value = ev.eval(stmt.expr)
            session.bindings[stmt.name] = Binding(value, session.space_name)
            if isinstance(stmt.expr, Call):
                out(render(value, options))
                _maybe_objective(value, options, out)
            continue
        if isinstance(stmt, ExprStmt):
            value = ev.eval(stmt.expr)
            out(render(value, options))
            _maybe_objective(value, options, out)
            continue
        raise TypeError(f"not a statement node: {stmt!r}")
    return lines


def _maybe_objective(value, options, out):
    if (
        options.show_objective
        and isinstance(value, LpResult)
        and isinstance(value.outcome, _lp.Optimal)
    ):
        out("objective: " + _render_rational(value.outcome.objective, value.domain))


_SPACE_ARITIES = {
    "closure": (1,),
    "solveLAETropic": (2,),
    "solveLAITropic": (2,),
    "BellmanEquation": (1, 2),
    "BellmanInequality": (1, 2),
    "findTheShortestPath": (3,),
    "searchLeastDistances": (1,),
    "SimplexMax": (3, 5, 7),
    "SimplexMin": (3, 5, 7),
    "solve": (1,),
}


class _Evaluator:
    def __init__(self, session: Session):
        self.session = session

    # ---- spaces ----

    def set_space(self, stmt: SpaceDecl):
        name = stmt.name
        if name == "Q" and len(stmt.vars) == 1:
            self.session.space_name = f"Q[{stmt.vars[0]}]"
            self.session.algebra = Q_CLASSICAL
            self.session.poly_var = stmt.vars[0]
            return
        if name not in ALGEBRAS_BY_NAME:
            raise UnknownSpace(f"unknown space {name}", stmt.line, stmt.col)
        if stmt.vars:
            raise EvalError(
                f"space {name} does not take variables", stmt.line, stmt.col
            )
        self.session.space_name = name
        self.session.algebra = ALGEBRAS_BY_NAME[name]
        self.session.poly_var = None

    # ---- expressions ----

    def eval(self, node):
        if isinstance(node, ScalarLit):
            return self.scalar_literal(node)
        if isinstance(node, InfinityLit):
            return self.infinity_literal(node)
        if isinstance(node, Var):
            return self.lookup(node)
        if isinstance(node, EmptyLit):
            return EmptyMatrix()
        if isinstance(node, MatrixLit):
            rows = [[self.entry(e) for e in row] for row in node.rows]
            return self.wrap(lambda: TropMatrix.from_rows(rows, self.session.algebra), node)
        if isinstance(node, ListLit):
            values = [self.entry(e) for e in node.items]
            return self.wrap(lambda: TropMatrix.column(values, self.session.algebra), node)
        if isinstance(node, UnaryNeg):
            return self.negate(self.eval(node.operand), node)
        if isinstance(node, BinOp):
            return self.binop(node)
        if isinstance(node, Call):
            return self.call(node)
        if isinstance(node, Ineq):
            raise EvalError(
                "inequalities are only meaningful inside \\solve", node.line, node.col
            )
        raise TypeError(f"not an expression node: {node!r}")

    def wrap(self, thunk, node):
        """Turn library errors into positioned script errors."""
        try:
            return thunk()
        except EvalError:
            raise
        except TropalgError as e:
            raise EvalError(str(e), node.line, node.col) from e

    def entry(self, node) -> ExtScalar:
        value = self.eval(node)
        if not isinstance(value, ExtScalar):
            raise EvalError(
                "matrix entries must be scalars", node.line, node.col
            )
        return value

    def scalar_literal(self, node: ScalarLit) -> ExtScalar:
        domain = self.session.algebra.domain
        text = node.value
        try:
            if domain is Domain.F64:
                return ExtScalar.of(float(Fraction(text)))
            if node.kind == "int":
                return ExtScalar.of(int(text))
            if domain is Domain.Z:
                raise EvalError(
                    f"{text} is not an element of an integer space", node.line, node.col
                )
            return ExtScalar.of(Fraction(text))
        except (ValueError, OverflowError) as e:
            raise EvalError(str(e), node.line, node.col) from e

    def infinity_literal(self, node: InfinityLit) -> ExtScalar:
        alg = self.session.algebra
        if not alg.is_tropical:
            raise EvalError(
                f"space {self.session.space_name} has no infinite elements",
                node.line,
                node.col,
            )
        value = POS_INF if node.sign > 0 else NEG_INF
        return self.wrap(lambda: alg.require_legal(value), node)

    def lookup(self, node: Var):
        binding = self.session.bindings.get(node.name)
        if binding is None:
            raise EvalError(f"undefined variable {node.name!r}", node.line, node.col)
        if binding.space != self.session.space_name:
            raise EvalError(
                f"variable {node.name!r} belongs to space {binding.space}, "
                f"the current space is {self.session.space_name}",
                node.line,
                node.col,
            )
        return binding.value

    def negate(self, value, node):
        alg = self.session.algebra
        if isinstance(value, ExtScalar):
            if alg.is_tropical:
                return self.wrap(lambda: trop_neg(value), node)
            return ExtScalar.of(-value.finite)
        if isinstance(value, TropMatrix):
            if alg.is_tropical:
                entries = [
                    [self.wrap(lambda e=e: trop_neg(e), node) for e in row]
                    for row in value.to_lists()
                ]
            else:
                entries = [
                    [ExtScalar.of(-e.finite) for e in row] for row in value.to_lists()
                ]
            return TropMatrix.from_rows(entries, alg)
        raise EvalError("cannot negate this value", node.line, node.col)

    def binop(self, node: BinOp):
        left = self.eval(node.left)
        right = self.eval(node.right)
        alg = self.session.algebra
        scalar_l = isinstance(left, ExtScalar)
        scalar_r = isinstance(right, ExtScalar)
        matrix_l = isinstance(left, TropMatrix)
        matrix_r = isinstance(right, TropMatrix)
        if node.op == "+":
            if scalar_l and scalar_r:
                return self.wrap(lambda: trop_add(left, right, alg), node)
            if matrix_l and matrix_r:
                return self.wrap(lambda: mat_oplus(left, right), node)
        elif node.op == "*":
            if scalar_l and scalar_r:
                return self.wrap(lambda: trop_mul(left, right, alg), node)
            if matrix_l and matrix_r:
                return self.wrap(lambda: mat_mul(left, right), node)
            if scalar_l and matrix_r:
                return self.scale(left, right, node)
            if matrix_l and scalar_r:
                return self.scale(right, left, node)
        elif node.op == "-":
            if scalar_l and scalar_r:
                if alg.is_tropical:
                    return self.wrap(
                        lambda: trop_mul(left, trop_neg(right), alg), node
                    )
                return ExtScalar.of(left.finite - right.finite)
            if matrix_l and matrix_r:
                if alg.is_tropical:
                    raise EvalError(
                        "matrix subtraction is not defined in a tropical space",
                        node.line,
                        node.col,
                    )
                return self.wrap(
                    lambda: mat_oplus(left, self.negate(right, node)), node
                )
        raise EvalError(
            f"operator {node.op!r} does not apply to these operands",
            node.line,
            node.col,
        )

    def scale(self, scalar: ExtScalar, matrix: TropMatrix, node) -> TropMatrix:
        alg = self.session.algebra
        entries = [
            [self.wrap(lambda e=e: trop_mul(scalar, e, alg), node) for e in row]
            for row in matrix.to_lists()
        ]
        return TropMatrix.from_rows(entries, alg)

    # ---- commands ----

    def call(self, node: Call):
        cmd = node.command
        if cmd not in _SPACE_ARITIES:
            raise UnknownCommand(f"unknown command \\{cmd}", node.line, node.col)
        if len(node.args) not in _SPACE_ARITIES[cmd]:
            counts = " or ".join(str(k) for k in _SPACE_ARITIES[cmd])
            raise ArityError(
                f"\\{cmd} takes {counts} argument(s), got {len(node.args)}",
                node.line,
                node.col,
            )
        if cmd == "solve":
            return self.cmd_solve(node)
        handler = getattr(self, "cmd_" + cmd.lower())
        return handler(node)

    def require_tropical(self, node, cmd):
        if not self.session.algebra.is_tropical:
            raise EvalError(
                f"\\{cmd} needs a tropical space, the current space is "
                f"{self.session.space_name}",
                node.line,
                node.col,
            )

    def require_classical(self, node, cmd):
        if self.session.algebra.is_tropical:
            raise EvalError(
                f"\\{cmd} needs a classical space, the current space is "
                f"{self.session.space_name}",
                node.line,
                node.col,
            )

    def matrix_arg(self, node, what) -> TropMatrix:
        value = self.eval(node)
        if not isinstance(value, TropMatrix):
            raise EvalError(f"{what} must be a matrix", node.line, node.col)
        return value

    def cmd_closure(self, node: Call):
        self.require_tropical(node, "closure")
        value = self.eval(node.args[0])
        alg = self.session.algebra
        if isinstance(value, ExtScalar):
            try:
                return trop_closure_scalar(value, alg)
            except ClosureUndefined:
                return UndefinedClosure(1 if alg.kind is SemiringKind.MAX_PLUS else -1)
        if isinstance(value, TropMatrix):
            return self.wrap(lambda: closure_block(value), node)
        raise EvalError(
            "\\closure needs a scalar or a matrix", node.args[0].line, node.args[0].col
        )

    def cmd_solvelaetropic(self, node: Call):
        self.require_tropical(node, "solveLAETropic")
        a = self.matrix_arg(node.args[0], "the coefficient matrix")
        b = self.matrix_arg(node.args[1], "the right-hand side")
        return self.wrap(lambda: solve_lae_tropic(a, b), node)

    def cmd_solvelaitropic(self, node: Call):
        self.require_tropical(node, "solveLAITropic")
        a = self.matrix_arg(node.args[0], "the coefficient matrix")
        b = self.matrix_arg(node.args[1], "the right-hand side")
        _, bounds = self.wrap(lambda: solve_lai_tropic(a, b), node)
        return IntervalList(tuple((ib.lower, ib.upper) for ib in bounds))

    def cmd_bellmanequation(self, node: Call):
        self.require_tropical(node, "BellmanEquation")
        a = self.matrix_arg(node.args[0], "the coefficient matrix")
        if len(node.args) == 1:
            return self.wrap(lambda: bellman_homogeneous(a), node)
        b = self.matrix_arg(node.args[1], "the right-hand side")
        return self.wrap(lambda: bellman_solve(a, b), node)

    def cmd_bellmaninequality(self, node: Call):
        self.require_tropical(node, "BellmanInequality")
        a = self.matrix_arg(node.args[0], "the coefficient matrix")
        if len(node.args) == 1:
            return self.wrap(lambda: bellman_inequality(a), node)
        b = self.matrix_arg(node.args[1], "the right-hand side")
        return self.wrap(lambda: bellman_inequality(a, b), node)

    def cmd_findtheshortestpath(self, node: Call):
        a = self.matrix_arg(node.args[0], "the adjacency matrix")
        start = self.index_arg(node.args[1], "the start vertex")
        goal = self.index_arg(node.args[2], "the end vertex")
        g = self.wrap(lambda: WeightedGraph(a), node)
        path = self.wrap(lambda: find_shortest_path(g, start, goal), node)
        return VertexPath(tuple(path))

    def cmd_searchleastdistances(self, node: Call):
        a = self.matrix_arg(node.args[0], "the adjacency matrix")
        g = self.wrap(lambda: WeightedGraph(a), node)
        return self.wrap(lambda: search_least_distances(g), node)

    def index_arg(self, node, what) -> int:
        value = self.eval(node)
        if isinstance(value, ExtScalar) and value.is_finite:
            v = value.finite
            if isinstance(v, int):
                return v
            if isinstance(v, float) and v.is_integer():
                return int(v)
        raise EvalError(f"{what} must be an integer", node.line, node.col)

    def cmd_simplexmax(self, node: Call):
        return self.simplex(node, "max")

    def cmd_simplexmin(self, node: Call):
        return self.simplex(node, "min")

    def simplex(self, node: Call, sense: str):
        self.require_classical(node, "SimplexMax" if sense == "max" else "SimplexMin")
        k = (len(node.args) - 1) // 2
        mats = [self.group_arg(arg) for arg in node.args[:k]]
        rhss = [self.group_arg(arg) for arg in node.args[k : 2 * k]]
        c = self.column_arg(node.args[-1], "the objective")
        groups = []
        for pos, (a, b) in enumerate(zip(mats, rhss)):
            if a is None or b is None:
                if (a is None) != (b is None):
                    raise EvalError(
                        "a constraint matrix and its right-hand side must be "
                        "empty together",
                        node.line,
                        node.col,
                    )
                groups.append(((), ()))
            else:
                groups.append((self.rational_rows(a, node), self.rational_column(b, node)))
        while len(groups) < 3:
            groups.append(((), ()))
        if k == 1:
            a_le, b_le = groups[0]
            a_eq = b_eq = a_ge = b_ge = ()
        else:
            (a_le, b_le), (a_eq, b_eq) = groups[0], groups[1]
            a_ge, b_ge = groups[2]
        problem = self.wrap(
            lambda: _lp.LpProblem(
                c=self.rational_column(c, node),
                a_le=a_le,
                b_le=b_le,
                a_eq=a_eq,
                b_eq=b_eq,
                a_ge=a_ge,
                b_ge=b_ge,
                sense=sense,
            ),
            node,
        )
        outcome = self.wrap(lambda: _lp.simplex_solve(problem), node)
        return LpResult(outcome, self.session.algebra.domain)

    def group_arg(self, node) -> TropMatrix | None:
        value = self.eval(node)
        if isinstance(value, EmptyMatrix):
            return None
        if isinstance(value, TropMatrix):
            return value
        raise EvalError(
            "constraint arguments must be matrices or the empty literal",
            node.line,
            node.col,
        )

    def column_arg(self, node, what) -> TropMatrix:
        value = self.eval(node)
        if not isinstance(value, TropMatrix):
            raise EvalError(f"{what} must be a vector", node.line, node.col)
        return value

    def rational_rows(self, m: TropMatrix, node):
        return tuple(
            tuple(self.rational(e, node) for e in row) for row in m.to_lists()
        )

    def rational_column(self, m: TropMatrix, node):
        if m.cols != 1:
            raise EvalError(
                f"expected a column vector, got a {m.rows}x{m.cols} matrix",
                node.line,
                node.col,
            )
        return tuple(self.rational(e, node) for e in (row[0] for row in m.to_lists()))

    def rational(self, e: ExtScalar, node) -> Fraction:
        if not e.is_finite:
            raise EvalError(
                "linear programming data must be finite", node.line, node.col
            )
        return Fraction(e.finite)

    # ---- univariate inequalities ----

    def cmd_solve(self, node: Call):
        if self.session.algebra is not Q_CLASSICAL:
            raise EvalError(
                "\\solve needs the space Q or Q[x], the current space is "
                f"{self.session.space_name}",
                node.line,
                node.col,
            )
        arg = node.args[0]
        if isinstance(arg, ListLit):
            items = arg.items
        elif isinstance(arg, Ineq):
            items = (arg,)
        else:
            raise EvalError(
                "\\solve takes a list of inequalities", node.line, node.col
            )
        ineqs = []
        unknown = None
        for item in items:
            if not isinstance(item, Ineq):
                raise EvalError(
                    "\\solve takes a list of inequalities", item.line, item.col
                )
            la, lb, lv = self.linear_form(item.left)
            ra, rb, rv = self.linear_form(item.right)
            v = self.merge_unknowns(lv, rv, item)
            unknown = self.merge_unknowns(unknown, v, item)
            ineqs.append((la - ra, lb - rb, item.op))
        return _lp.solve_univariate_linear(ineqs)

    def merge_unknowns(self, a, b, node):
        if a is not None and b is not None and a != b:
            raise EvalError(
                f"inequalities mix the unknowns {a!r} and {b!r}", node.line, node.col
            )
        return a or b

    def linear_form(self, node):
        """Reduce an expression to (a, b, var) meaning a*var + b."""
        zero = Fraction(0)
        if isinstance(node, ScalarLit):
            try:
                return zero, Fraction(node.value), None
            except ValueError as e:
                raise EvalError(str(e), node.line, node.col) from e
        if isinstance(node, Var):
            binding = self.session.bindings.get(node.name)
            if binding is not None:
                if binding.space != self.session.space_name:
                    raise EvalError(
                        f"variable {node.name!r} belongs to space {binding.space}, "
                        f"the current space is {self.session.space_name}",
                        node.line,
                        node.col,
                    )
                value = binding.value
                if isinstance(value, ExtScalar) and value.is_finite:
                    return zero, Fraction(value.finite), None
                raise EvalError(
                    f"variable {node.name!r} is not a finite scalar",
                    node.line,
                    node.col,
                )
            if self.session.poly_var is None or node.name == self.session.poly_var:
                return Fraction(1), zero, node.name
            raise EvalError(f"undefined variable {node.name!r}", node.line, node.col)
        if isinstance(node, UnaryNeg):
            a, b, v = self.linear_form(node.operand)
            return -a, -b, v
        if isinstance(node, BinOp):
            la, lb, lv = self.linear_form(node.left)
            ra, rb, rv = self.linear_form(node.right)
            v = self.merge_unknowns(lv, rv, node)
            if node.op == "+":
                return la + ra, lb + rb, v
            if node.op == "-":
                return la - ra, lb - rb, v
            if la != 0 and ra != 0:
                raise EvalError(
                    "\\solve handles linear inequalities only; this one has "
                    "degree 2",
                    node.line,
                    node.col,
                )
            return la * rb + ra * lb, lb * rb, v
        raise EvalError(
            "inequalities may contain numbers, the unknown, +, - and * only",
            node.line,
            node.col,
        )


# ---- rendering ----


def _render_scalar(e: ExtScalar) -> str:
    if e.inf_sign < 0:
        return "-\\infty"
    if e.inf_sign > 0:
        return "\\infty"
    v = e.finite
    if isinstance(v, float):
        return str(int(v)) if v.is_integer() else repr(v)
    return str(v)


def render(value, options: RenderOptions | None = None) -> str:
    options = options or RenderOptions()
    if isinstance(value, ExtScalar):
        return _render_scalar(value)
    if isinstance(value, UndefinedClosure):
        return "\\infty" if value.sign > 0 else "-\\infty"
    if isinstance(value, TropMatrix):
        return _render_matrix(value.to_lists(), value.cols == 1, options)
    if isinstance(value, IntervalList):
        return _render_matrix([list(row) for row in value.rows], False, options)
    if isinstance(value, VertexPath):
        return "[" + ", ".join(str(v) for v in value.vertices) + "]"
    if isinstance(value, LpResult):
        return _render_lp(value, options)
    if isinstance(value, _lp.Interval):
        return _render_interval(value)
    if isinstance(value, EmptyMatrix):
        return "[]"
    raise TypeError(f"no rendering for {value!r}")


def _render_matrix(rows, flat: bool, options: RenderOptions) -> str:
    cells = [[_render_scalar(e) for e in row] for row in rows]
    if options.fmt == "latex":
        body = " \\\\ ".join(" & ".join(row) for row in cells)
        return "\\begin{pmatrix} " + body + " \\end{pmatrix}"
    if flat:
        return "[" + ", ".join(row[0] for row in cells) + "]"
    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in cells) + "]"


def _render_rational(q: Fraction, domain: Domain) -> str:
    if domain is Domain.F64:
        return _render_scalar(ExtScalar.of(float(q)))
    return _render_scalar(ExtScalar.of(q))


def _render_lp(value: LpResult, options: RenderOptions) -> str:
    out = value.outcome
    if isinstance(out, _lp.Infeasible):
        return "Infeasible"
    if isinstance(out, _lp.Unbounded):
        return "Unbounded"
    cells = [_render_rational(x, value.domain) for x in out.x]
    if options.fmt == "latex":
        return "\\begin{pmatrix} " + " \\\\ ".join(cells) + " \\end{pmatrix}"
    return "[" + ", ".join(cells) + "]"


def _render_interval(v: _lp.Interval) -> str:
    if v.is_empty:
        return "\\emptyset"
    lo = "-\\infty" if v.lo is None else _render_scalar(ExtScalar.of(v.lo))
    hi = "\\infty" if v.hi is None else _render_scalar(ExtScalar.of(v.hi))
    open_b = "[" if v.lo_closed else "("
    close_b = "]" if v.hi_closed else ")"
    return f"{open_b}{lo}, {hi}{close_b}"
