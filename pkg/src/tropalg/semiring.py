"""Scalar arithmetic over the max-plus and min-plus semirings.

The max-plus semiring extends a number domain (exact integers, exact
rationals, or IEEE float64) with the single absorbing element -infinity,
and reads semiring addition as max and semiring multiplication as
ordinary +. The min-plus semiring is the order dual: it adjoins +infinity
and reads addition as min. Both are semifields, since every finite x has
the multiplicative inverse -x. Classical (plus/times) arithmetic over Q
and float64 sits behind the same entry points so matrix code and the
interpreter can stay algebra-generic.

Exact domains never round: max, min and + of ints and Fractions are
exact, so no epsilon comparisons appear anywhere in the library.
Infinities are tagged states of ExtScalar, never sentinel numeric values;
IEEE infinities are converted to the tagged state at the boundary by
ExtScalar.of.

All functions here are pure. count_ops() installs a thread-local counter
that tallies semiring additions and multiplications; the complexity
assertions in the test suite measure work through it.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import AlgebraMismatch, ClosureUndefined, IllegalElement, NoInverse

__all__ = [
    "SemiringKind",
    "Domain",
    "ExtScalar",
    "Algebra",
    "NEG_INF",
    "POS_INF",
    "Z_MAX_PLUS",
    "Z_MIN_PLUS",
    "Q_MAX_PLUS",
    "Q_MIN_PLUS",
    "R64_MAX_PLUS",
    "R64_MIN_PLUS",
    "Q_CLASSICAL",
    "R64_CLASSICAL",
    "ALGEBRAS_BY_NAME",
    "OpCounts",
    "count_ops",
    "trop_add",
    "trop_mul",
    "trop_neg",
    "trop_closure_scalar",
    "semiring_le",
]


class SemiringKind(Enum):
    MAX_PLUS = "max-plus"
    MIN_PLUS = "min-plus"
    CLASSICAL = "classical"


class Domain(Enum):
    Z = "Z"
    Q = "Q"
    F64 = "F64"


@dataclass(frozen=True, slots=True)
class ExtScalar:
    """A finite number or the single infinite element of an algebra.

    finite holds an int, a Fraction (lowest terms, positive denominator,
    normalised to int when integral) or a float. It is None exactly when
    inf_sign is -1 (minus infinity) or +1 (plus infinity).
    """

    finite: int | Fraction | float | None
    inf_sign: int = 0

    @staticmethod
    def of(value) -> "ExtScalar":
        """Wrap a plain number, normalising rationals and IEEE infinities."""
        if isinstance(value, ExtScalar):
            return value
        if isinstance(value, bool):
            raise IllegalElement("booleans are not semiring elements")
        if isinstance(value, int):
            return ExtScalar(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return ExtScalar(int(value))
            return ExtScalar(value)
        if isinstance(value, float):
            if math.isnan(value):
                raise IllegalElement("NaN is not a semiring element")
            if math.isinf(value):
                return NEG_INF if value < 0 else POS_INF
            return ExtScalar(value)
        raise IllegalElement(f"cannot interpret {value!r} as a semiring element")

    @property
    def is_finite(self) -> bool:
        return self.inf_sign == 0

    @property
    def is_neg_inf(self) -> bool:
        return self.inf_sign < 0

    @property
    def is_pos_inf(self) -> bool:
        return self.inf_sign > 0

    def __lt__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        if self.inf_sign != other.inf_sign:
            return self.inf_sign < other.inf_sign
        if self.inf_sign != 0:
            return False
        return self.finite < other.finite

    def __le__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return other < self

    def __ge__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return other <= self

    def __str__(self):
        if self.inf_sign < 0:
            return "-inf"
        if self.inf_sign > 0:
            return "inf"
        return str(self.finite)


NEG_INF = ExtScalar(None, -1)
POS_INF = ExtScalar(None, +1)


@dataclass(frozen=True, slots=True)
class Algebra:
    """A semiring kind crossed with a number domain.

    The tropical algebras are ZMaxPlus, ZMinPlus, QMaxPlus, QMinPlus,
    R64MaxPlus and R64MinPlus; the classical ones are Q and R64. A
    max-plus algebra contains -infinity only, a min-plus algebra contains
    +infinity only, and classical algebras contain no infinite element.
    """

    kind: SemiringKind
    domain: Domain

    @property
    def name(self) -> str:
        return _NAMES[self]

    @property
    def is_tropical(self) -> bool:
        return self.kind is not SemiringKind.CLASSICAL

    def zero(self) -> ExtScalar:
        """The additive identity: -inf, +inf, or the ordinary 0."""
        if self.kind is SemiringKind.MAX_PLUS:
            return NEG_INF
        if self.kind is SemiringKind.MIN_PLUS:
            return POS_INF
        return ExtScalar(0.0) if self.domain is Domain.F64 else ExtScalar(0)

    def one(self) -> ExtScalar:
        """The multiplicative identity: 0 tropically, 1 classically."""
        if self.is_tropical:
            return ExtScalar(0.0) if self.domain is Domain.F64 else ExtScalar(0)
        return ExtScalar(1.0) if self.domain is Domain.F64 else ExtScalar(1)

    def require_legal(self, a: ExtScalar) -> ExtScalar:
        """Reject the infinity this algebra does not contain."""
        s = a.inf_sign
        if s == 0:
            return a
        k = self.kind
        if k is SemiringKind.MAX_PLUS:
            if s > 0:
                raise IllegalElement("+infinity is not an element of a max-plus algebra")
            return a
        if k is SemiringKind.MIN_PLUS:
            if s < 0:
                raise IllegalElement("-infinity is not an element of a min-plus algebra")
            return a
        raise AlgebraMismatch("classical algebras contain no infinite element")

    def require_member(self, a: ExtScalar) -> ExtScalar:
        """require_legal plus the number-domain check on finite values."""
        self.require_legal(a)
        if a.inf_sign:
            return a
        f = a.finite
        d = self.domain
        if d is Domain.Z:
            if isinstance(f, int) and not isinstance(f, bool):
                return a
        elif d is Domain.Q:
            if isinstance(f, (int, Fraction)) and not isinstance(f, bool):
                return a
        else:
            if isinstance(f, float):
                return a
        raise IllegalElement(f"{f!r} is not in the number domain {d.value}")


Z_MAX_PLUS = Algebra(SemiringKind.MAX_PLUS, Domain.Z)
Z_MIN_PLUS = Algebra(SemiringKind.MIN_PLUS, Domain.Z)
Q_MAX_PLUS = Algebra(SemiringKind.MAX_PLUS, Domain.Q)
Q_MIN_PLUS = Algebra(SemiringKind.MIN_PLUS, Domain.Q)
R64_MAX_PLUS = Algebra(SemiringKind.MAX_PLUS, Domain.F64)
R64_MIN_PLUS = Algebra(SemiringKind.MIN_PLUS, Domain.F64)
Q_CLASSICAL = Algebra(SemiringKind.CLASSICAL, Domain.Q)
R64_CLASSICAL = Algebra(SemiringKind.CLASSICAL, Domain.F64)

ALGEBRAS_BY_NAME = {
    "ZMaxPlus": Z_MAX_PLUS,
    "ZMinPlus": Z_MIN_PLUS,
    "QMaxPlus": Q_MAX_PLUS,
    "QMinPlus": Q_MIN_PLUS,
    "R64MaxPlus": R64_MAX_PLUS,
    "R64MinPlus": R64_MIN_PLUS,
    "Q": Q_CLASSICAL,
    "R64": R64_CLASSICAL,
}

_NAMES = {alg: name for name, alg in ALGEBRAS_BY_NAME.items()}


@dataclass
class OpCounts:
    """Running totals of semiring additions and multiplications."""

    adds: int = 0
    muls: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.muls


_ACTIVE = threading.local()


@contextmanager
def count_ops():
    """Count semiring operations performed by the current thread.

    Counters nest; only the innermost active counter receives tallies.
    """
    counts = OpCounts()
    stack = getattr(_ACTIVE, "stack", None)
    if stack is None:
        stack = _ACTIVE.stack = []
    stack.append(counts)
    try:
        yield counts
    finally:
        stack.pop()


def _tally_add():
    stack = getattr(_ACTIVE, "stack", None)
    if stack:
        stack[-1].adds += 1


def _tally_mul():
    stack = getattr(_ACTIVE, "stack", None)
    if stack:
        stack[-1].muls += 1


def _finite_result(value, alg: Algebra) -> ExtScalar:
    """Normalise a freshly computed finite-domain result.

    Rationals are reduced (Fraction does this) and demoted to int when
    integral. A float that overflowed to the algebra's own infinity is
    folded onto the absorbing element; any other infinite float is
    illegal.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return ExtScalar(int(value))
        return ExtScalar(value)
    if isinstance(value, float) and math.isinf(value):
        z = alg.zero()
        if z.inf_sign == (1 if value > 0 else -1):
            return z
        raise IllegalElement("float overflow produced an illegal infinity")
    return ExtScalar(value)


def trop_add(a: ExtScalar, b: ExtScalar, alg: Algebra) -> ExtScalar:
    """Semiring addition: max (max-plus), min (min-plus), or ordinary +."""
    alg.require_legal(a)
    alg.require_legal(b)
    _tally_add()
    k = alg.kind
    if k is SemiringKind.MAX_PLUS:
        return b if a < b else a
    if k is SemiringKind.MIN_PLUS:
        return b if b < a else a
    res = a.finite + b.finite
    if type(res) is int:
        return ExtScalar(res)
    return _finite_result(res, alg)


def trop_mul(a: ExtScalar, b: ExtScalar, alg: Algebra) -> ExtScalar:
    """Semiring multiplication: ordinary + tropically, ordinary * classically.

    The infinite element absorbs tropically.
    """
    alg.require_legal(a)
    alg.require_legal(b)
    _tally_mul()
    if alg.kind is SemiringKind.CLASSICAL:
        res = a.finite * b.finite
        if type(res) is int:
            return ExtScalar(res)
        return _finite_result(res, alg)
    if a.inf_sign or b.inf_sign:
        return alg.zero()
    res = a.finite + b.finite
    if type(res) is int:
        return ExtScalar(res)
    return _finite_result(res, alg)


def trop_neg(a: ExtScalar) -> ExtScalar:
    """The tropical multiplicative inverse of a finite element: -a."""
    if a.inf_sign:
        raise NoInverse("the infinite element has no multiplicative inverse")
    return ExtScalar.of(-a.finite)


def trop_closure_scalar(a: ExtScalar, alg: Algebra) -> ExtScalar:
    """Scalar closure: the sum of all powers of a, including the 0th.

    Over max-plus it equals the multiplicative identity 0 whenever a <= 0
    and does not exist otherwise; over min-plus the condition is a >= 0,
    the order of the semiring being reversed.
    """
    if not alg.is_tropical:
        raise AlgebraMismatch("scalar closure is defined over tropical algebras only")
    alg.require_legal(a)
    if alg.kind is SemiringKind.MAX_PLUS:
        if a.inf_sign < 0 or a.finite <= 0:
            return alg.one()
    else:
        if a.inf_sign > 0 or a.finite >= 0:
            return alg.one()
    raise ClosureUndefined(f"closure of {a} does not exist over {alg.name}")


def semiring_le(a: ExtScalar, b: ExtScalar, alg: Algebra) -> bool:
    """The natural order of the idempotent addition: a <= b iff a + b == b."""
    return trop_add(a, b, alg) == b
