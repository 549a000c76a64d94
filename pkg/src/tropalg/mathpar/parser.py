"""Recursive-descent parser producing a small statement and expression AST.

Number literals keep their source spelling; the interpreter converts them
once it knows which domain is active, so `7/2` can become an exact
rational in Q and an error in Z. Unary minus applied directly to a number
or infinity literal folds into the literal, which keeps `-3` a single
node everywhere. Source positions ride along on every node for error
messages but never take part in equality, so ASTs compare structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError
from .lexer import Token, TokenKind, tokenize

__all__ = [
    "SpaceDecl",
    "Assign",
    "ExprStmt",
    "ScalarLit",
    "InfinityLit",
    "MatrixLit",
    "ListLit",
    "EmptyLit",
    "Var",
    "BinOp",
    "UnaryNeg",
    "Call",
    "Ineq",
    "parse",
    "unparse",
    "unparse_expr",
]


def _pos():
    return field(default=0, compare=False)


@dataclass(frozen=True)
class ScalarLit:
    value: str
    kind: str  # "int" | "rat" | "dec"
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class InfinityLit:
    sign: int
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class Var:
    name: str
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class EmptyLit:
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class MatrixLit:
    rows: tuple
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class ListLit:
    items: tuple
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class BinOp:
    op: str  # "+" | "-" | "*"
    left: "Expr"
    right: "Expr"
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class UnaryNeg:
    operand: "Expr"
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class Call:
    command: str
    args: tuple
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class Ineq:
    left: "Expr"
    op: str  # "<" | "<=" | ">" | ">="
    right: "Expr"
    line: int = _pos()
    col: int = _pos()


Expr = Union[
    ScalarLit, InfinityLit, Var, EmptyLit, MatrixLit, ListLit, BinOp, UnaryNeg, Call, Ineq
]


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    vars: tuple
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class Assign:
    name: str
    expr: Expr
    line: int = _pos()
    col: int = _pos()


@dataclass(frozen=True)
class ExprStmt:
    expr: Expr
    line: int = _pos()
    col: int = _pos()


Stmt = Union[SpaceDecl, Assign, ExprStmt]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind is not TokenKind.EOF:
            self.i += 1
        return tok

    def expect(self, kind: TokenKind, what: str) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            raise ParseError(
                f"expected {what}, found {tok.lexeme or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return self.next()

    def parse_script(self) -> list[Stmt]:
        stmts: list[Stmt] = []
        while self.peek().kind is not TokenKind.EOF:
            stmts.append(self.parse_statement())
        return stmts

    def parse_statement(self) -> Stmt:
        tok = self.peek()
        if tok.kind is TokenKind.IDENT and self.peek(1).kind is TokenKind.EQUALS:
            if tok.value == "SPACE":
                return self.parse_space_decl()
            self.next()
            self.next()
            expr = self.parse_expr()
            self.expect(TokenKind.SEMICOLON, "';'")
            return Assign(tok.value, expr, line=tok.line, col=tok.col)
        expr = self.parse_expr()
        self.expect(TokenKind.SEMICOLON, "';'")
        return ExprStmt(expr, line=tok.line, col=tok.col)

    def parse_space_decl(self) -> SpaceDecl:
        tok = self.next()  # SPACE
        self.next()  # =
        name = self.expect(TokenKind.IDENT, "a space name")
        self.expect(TokenKind.LBRACKET, "'['")
        vars_: list[str] = []
        if self.peek().kind is TokenKind.IDENT:
            vars_.append(self.next().value)
            while self.peek().kind is TokenKind.COMMA:
                self.next()
                vars_.append(self.expect(TokenKind.IDENT, "a variable name").value)
        self.expect(TokenKind.RBRACKET, "']'")
        self.expect(TokenKind.SEMICOLON, "';'")
        return SpaceDecl(name.value, tuple(vars_), line=tok.line, col=tok.col)

    def parse_expr(self) -> Expr:
        left = self.parse_additive()
        tok = self.peek()
        if tok.kind is TokenKind.RELOP:
            self.next()
            right = self.parse_additive()
            return Ineq(left, tok.value, right, line=tok.line, col=tok.col)
        return left

    def parse_additive(self) -> Expr:
        node = self.parse_multiplicative()
        while self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            tok = self.next()
            rhs = self.parse_multiplicative()
            op = "+" if tok.kind is TokenKind.PLUS else "-"
            node = BinOp(op, node, rhs, line=tok.line, col=tok.col)
        return node

    def parse_multiplicative(self) -> Expr:
        node = self.parse_unary()
        while self.peek().kind is TokenKind.STAR:
            tok = self.next()
            rhs = self.parse_unary()
            node = BinOp("*", node, rhs, line=tok.line, col=tok.col)
        return node

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok.kind is TokenKind.MINUS:
            self.next()
            operand = self.parse_unary()
            if isinstance(operand, ScalarLit) and not operand.value.startswith("-"):
                return ScalarLit(
                    "-" + operand.value, operand.kind, line=tok.line, col=tok.col
                )
            if isinstance(operand, InfinityLit):
                return InfinityLit(-operand.sign, line=tok.line, col=tok.col)
            return UnaryNeg(operand, line=tok.line, col=tok.col)
        return self.parse_atom()

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind in (TokenKind.INTEGER, TokenKind.RATIONAL, TokenKind.DECIMAL):
            self.next()
            kind = {
                TokenKind.INTEGER: "int",
                TokenKind.RATIONAL: "rat",
                TokenKind.DECIMAL: "dec",
            }[tok.kind]
            return ScalarLit(tok.value.replace(" ", ""), kind, line=tok.line, col=tok.col)
        if tok.kind is TokenKind.INFINITY:
            self.next()
            return InfinityLit(1, line=tok.line, col=tok.col)
        if tok.kind is TokenKind.IDENT:
            self.next()
            return Var(tok.value, line=tok.line, col=tok.col)
        if tok.kind is TokenKind.COMMAND:
            return self.parse_call()
        if tok.kind is TokenKind.LPAREN:
            self.next()
            if self.peek().kind is TokenKind.RPAREN:
                self.next()
                return EmptyLit(line=tok.line, col=tok.col)
            inner = self.parse_expr()
            self.expect(TokenKind.RPAREN, "')'")
            return inner
        if tok.kind is TokenKind.LBRACKET:
            return self.parse_bracket()
        raise ParseError(
            f"expected an expression, found {tok.lexeme or 'end of input'!r}",
            tok.line,
            tok.col,
        )

    def parse_bracket(self) -> Expr:
        tok = self.next()  # [
        if self.peek().kind is TokenKind.RBRACKET:
            self.next()
            return EmptyLit(line=tok.line, col=tok.col)
        if self.peek().kind is TokenKind.LBRACKET:
            rows = [self.parse_row()]
            while self.peek().kind is TokenKind.COMMA:
                self.next()
                rows.append(self.parse_row())
            self.expect(TokenKind.RBRACKET, "']'")
            w = len(rows[0])
            for row in rows:
                if len(row) != w:
                    raise ParseError(
                        f"matrix rows have {w} and {len(row)} entries",
                        tok.line,
                        tok.col,
                    )
            return MatrixLit(tuple(rows), line=tok.line, col=tok.col)
        items = [self.parse_expr()]
        while self.peek().kind is TokenKind.COMMA:
            self.next()
            items.append(self.parse_expr())
        self.expect(TokenKind.RBRACKET, "']'")
        return ListLit(tuple(items), line=tok.line, col=tok.col)

    def parse_row(self) -> tuple:
        self.expect(TokenKind.LBRACKET, "'['")
        items = [self.parse_expr()]
        while self.peek().kind is TokenKind.COMMA:
            self.next()
            items.append(self.parse_expr())
        self.expect(TokenKind.RBRACKET, "']'")
        return tuple(items)

    def parse_call(self) -> Call:
        tok = self.next()  # COMMAND
        self.expect(TokenKind.LPAREN, "'(' after command")
        args: list[Expr] = []
        if self.peek().kind is not TokenKind.RPAREN:
            args.append(self.parse_expr())
            while self.peek().kind is TokenKind.COMMA:
                self.next()
                args.append(self.parse_expr())
        self.expect(TokenKind.RPAREN, "')'")
        return Call(tok.value, tuple(args), line=tok.line, col=tok.col)


def parse(text: str) -> list[Stmt]:
    return _Parser(tokenize(text)).parse_script()


_PREC = {"+": 1, "-": 1, "*": 2}


def unparse_expr(node: Expr, parent_prec: int = 0) -> str:
    if isinstance(node, ScalarLit):
        s = node.value
        return s if parent_prec < 3 or not s.startswith("-") else f"({s})"
    if isinstance(node, InfinityLit):
        s = "\\infty" if node.sign > 0 else "-\\infty"
        return s if parent_prec < 3 or node.sign > 0 else f"({s})"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, EmptyLit):
        return "[]"
    if isinstance(node, MatrixLit):
        rows = ", ".join(
            "[" + ", ".join(unparse_expr(e) for e in row) + "]" for row in node.rows
        )
        return f"[{rows}]"
    if isinstance(node, ListLit):
        return "[" + ", ".join(unparse_expr(e) for e in node.items) + "]"
    if isinstance(node, UnaryNeg):
        return "-" + unparse_expr(node.operand, 3)
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left = unparse_expr(node.left, prec)
        # +, - and * all associate to the left here, so a right child at
        # equal precedence needs parentheses to survive a round trip.
        right = unparse_expr(node.right, prec + 1)
        s = f"{left} {node.op} {right}"
        return f"({s})" if prec < parent_prec else s
    if isinstance(node, Call):
        return f"\\{node.command}(" + ", ".join(unparse_expr(a) for a in node.args) + ")"
    if isinstance(node, Ineq):
        return f"{unparse_expr(node.left)} {node.op} {unparse_expr(node.right)}"
    raise TypeError(f"not an expression node: {node!r}")


def unparse(stmt: Stmt) -> str:
    if isinstance(stmt, SpaceDecl):
        return f"SPACE = {stmt.name}[{', '.join(stmt.vars)}];"
    if isinstance(stmt, Assign):
        return f"{stmt.name} = {unparse_expr(stmt.expr)};"
    if isinstance(stmt, ExprStmt):
        return f"{unparse_expr(stmt.expr)};"
    raise TypeError(f"not a statement node: {stmt!r}")
