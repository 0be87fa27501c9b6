"""Cantor normal form ordinals below epsilon_0.

An ordinal is stored as a tuple of ``(exponent, coeff)`` pairs with strictly
decreasing exponents and positive coefficients; the empty tuple is zero.
Exponents are themselves :class:`Ordinal` values, so every representable
ordinal has finite nesting depth and is therefore below epsilon_0.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from ._decimal import from_decimal, to_decimal

__all__ = [
    "Ordinal",
    "Order",
    "Kind",
    "Classification",
    "ZERO",
    "ONE",
    "OMEGA",
    "ord_compare",
    "ord_add",
    "ord_mul_nat",
    "omega_power",
    "classify",
    "fundamental",
    "from_json",
]


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Kind(enum.Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"


@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {exp!r}")
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"coefficients must be positive integers, got {coeff!r}")
            if prev is not None and ord_compare(prev, exp) is not Order.GREATER:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    @classmethod
    def of(cls, n: int) -> "Ordinal":
        """The finite ordinal ``n``."""
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) is Order.LESS

    def __le__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) is not Order.GREATER

    def __gt__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) is Order.GREATER

    def __ge__(self, other):
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) is not Order.LESS

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_add(self, other)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Ordinal({to_text(self)})"

    def to_json(self) -> list:
        """Nested ``[exponent, coeff]`` arrays; coefficients are decimal strings."""
        return [[exp.to_json(), to_decimal(coeff)] for exp, coeff in self.terms]


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ord_compare(a: Ordinal, b: Ordinal) -> Order:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c is not Order.EQUAL:
            return c
        if ca != cb:
            return Order.LESS if ca < cb else Order.GREATER
    if len(a.terms) == len(b.terms):
        return Order.EQUAL
    return Order.LESS if len(a.terms) < len(b.terms) else Order.GREATER


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if b.is_zero():
        return a
    lead_exp, lead_coeff = b.terms[0]
    kept = []
    for exp, coeff in a.terms:
        c = ord_compare(exp, lead_exp)
        if c is Order.GREATER:
            kept.append((exp, coeff))
        elif c is Order.EQUAL:
            lead_coeff += coeff
            break
        else:
            break
    return Ordinal(tuple(kept) + ((lead_exp, lead_coeff),) + b.terms[1:])


def ord_mul_nat(a: Ordinal, k: int) -> Ordinal:
    """``a * k`` for a natural ``k`` (right multiplication)."""
    if k < 0:
        raise ValueError("multiplier must be a natural number")
    if k == 0 or a.is_zero():
        return ZERO
    (exp, coeff), rest = a.terms[0], a.terms[1:]
    return Ordinal(((exp, coeff * k),) + rest)


def omega_power(exp: Ordinal, coeff: int = 1) -> Ordinal:
    """``w^exp * coeff``."""
    if coeff == 0:
        return ZERO
    return Ordinal(((exp, coeff),))


@dataclass(frozen=True)
class Classification:
    kind: Kind
    pred: Union[Ordinal, None] = None


def classify(a: Ordinal) -> Classification:
    if a.is_zero():
        return Classification(Kind.ZERO)
    exp, coeff = a.terms[-1]
    if not exp.is_zero():
        return Classification(Kind.LIMIT)
    head = a.terms[:-1]
    tail = ((exp, coeff - 1),) if coeff > 1 else ()
    return Classification(Kind.SUCCESSOR, Ordinal(head + tail))


def fundamental(lam: Ordinal, n: int) -> Ordinal:
    """The ``n``-th element of the fundamental sequence of the limit ``lam``.

    Uses the Wainer assignment::

        (g + w^(a+1))[n]   = g + w^a * n
        (g + w^l)[n]       = g + w^(l[n])           l a limit
        (g + w^a * (c+1))[n] = g + w^a * c + (w^a)[n]
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if classify(lam).kind is not Kind.LIMIT:
        raise ValueError(f"{lam} is not a limit ordinal")
    exp, coeff = lam.terms[-1]
    prefix = Ordinal(lam.terms[:-1] + (((exp, coeff - 1),) if coeff > 1 else ()))
    c = classify(exp)
    if c.kind is Kind.SUCCESSOR:
        step = omega_power(c.pred, n)
    else:
        step = omega_power(fundamental(exp, n))
    return ord_add(prefix, step)


def _term_text(exp: Ordinal, coeff: int) -> str:
    if exp.is_zero():
        return to_decimal(coeff)
    if exp == ONE:
        base = "w"
    elif exp.is_finite() or exp == OMEGA:
        base = f"w^{to_text(exp)}"
    else:
        base = f"w^({to_text(exp)})"
    return base if coeff == 1 else f"{base}*{to_decimal(coeff)}"


def to_text(a: Ordinal) -> str:
    if a.is_zero():
        return "0"
    return "+".join(_term_text(e, c) for e, c in a.terms)


def from_json(data: Iterable) -> Ordinal:
    terms = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"malformed ordinal term: {item!r}")
        exp, coeff = item
        if not isinstance(coeff, str):
            raise ValueError(f"ordinal coefficient must be a decimal string: {coeff!r}")
        terms.append((from_json(exp), from_decimal(coeff)))
    return Ordinal(tuple(terms))
