"""Small-step rewriting and budgeted exact evaluation.

Strategy: leftmost-innermost, where a node is a redex once every child it
scrutinizes is a literal.  Evaluation keeps a focus and a context stack (a
zipper), so each rewrite is O(1) amortized instead of re-descending the whole
term; :func:`step` and :func:`trace` drive the same machine.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .ordinals import Kind, classify, fundamental
from .terms import Arrow, Aur, AurOrd, Fgh, Iter, Lit, Term, validate

__all__ = [
    "Budget",
    "Reason",
    "Exact",
    "Overflow",
    "EvalOutcome",
    "Rewritten",
    "AlreadyValue",
    "Stuck",
    "step",
    "evaluate",
    "trace",
    "RULES",
]

RULES = ("K1", "K2", "K3", "K4", "F0", "FS", "FL", "I0", "I+", "A1", "A+", "AO0", "AO+")

A1_TERM = Arrow(Lit(10), Lit(3), Lit(10))
AO0_TERM = Arrow(Lit(10), Lit(2), Lit(10))
TEN = Lit(10)


@dataclass(frozen=True)
class Budget:
    max_steps: int = 10**6
    max_bits: int = 2**20

    def __post_init__(self):
        for name in ("max_steps", "max_bits"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")


class Reason(enum.Enum):
    STEP_LIMIT = "StepLimit"
    MAGNITUDE_LIMIT = "MagnitudeLimit"
    SYMBOLIC_ARROW_COUNT = "SymbolicArrowCount"
    SYMBOLIC_LIMIT = "SymbolicLimit"


@dataclass(frozen=True)
class Exact:
    value: int
    steps_used: int = 0


@dataclass(frozen=True)
class Overflow:
    residual: Term
    reason: Reason
    steps_used: int


EvalOutcome = Union[Exact, Overflow]


@dataclass(frozen=True)
class Rewritten:
    term: Term
    rule: str


@dataclass(frozen=True)
class AlreadyValue:
    pass


@dataclass(frozen=True)
class Stuck:
    reason: str


StepResult = Union[Rewritten, AlreadyValue, Stuck]


class _Blocked(Exception):
    """A redex that cannot fire: ``reason`` is a Reason or an ill-formedness note."""

    def __init__(self, reason):
        self.reason = reason


def _lit(v: int) -> Lit:
    # values built here are naturals by construction; skip the checked constructor
    t = object.__new__(Lit)
    object.__setattr__(t, "value", v)
    return t


def _power(a: int, b: int, max_bits: int) -> int:
    if b == 0:
        return 1
    if a < 2:
        return a
    width = a.bit_length()
    if (width - 1) * b + 1 > max_bits:
        raise _Blocked(Reason.MAGNITUDE_LIMIT)
    v = a**b  # at most width*b bits, i.e. under 2*max_bits
    if v.bit_length() > max_bits:
        raise _Blocked(Reason.MAGNITUDE_LIMIT)
    return v


def _contract(t: Term, max_bits: int) -> Tuple[Term, str]:
    """Fire the rule at ``t``; every scrutinized child is already a literal."""
    cls = type(t)
    if cls is Iter:
        if t.count == 0:
            return t.arg, "I0"
        return Fgh(t.index, Iter(t.index, t.count - 1, t.arg)), "I+"
    if cls is Fgh:
        n = t.arg.value
        terms = t.index.terms
        if not terms:
            if n.bit_length() >= max_bits and (n + 1).bit_length() > max_bits:
                raise _Blocked(Reason.MAGNITUDE_LIMIT)
            return _lit(n + 1), "F0"
        if terms[-1][0].terms:
            return Fgh(fundamental(t.index, n), t.arg), "FL"
        return Iter(classify(t.index).pred, n + 1, t.arg), "FS"
    if cls is Arrow:
        a, k, b = t.base.value, t.arrows.value, t.height.value
        if k == 0:
            raise _Blocked("arrow count 0")
        if k == 1:
            return _lit(_power(a, b, max_bits)), "K1"
        if b == 1:
            return t.base, "K2"
        if b == 0:
            return _lit(1), "K3"
        return Arrow(t.base, _lit(k - 1), Arrow(t.base, t.arrows, _lit(b - 1))), "K4"
    if cls is Aur:
        if t.n < 1:
            raise _Blocked("Aurellion index 0")
        if t.n == 1:
            return A1_TERM, "A1"
        return Arrow(TEN, Aur(t.n - 1), TEN), "A+"
    if cls is AurOrd:
        c = classify(t.alpha)
        if c.kind is Kind.ZERO:
            return AO0_TERM, "AO0"
        if c.kind is Kind.SUCCESSOR:
            return Arrow(TEN, AurOrd(c.pred), TEN), "AO+"
        raise _Blocked(Reason.SYMBOLIC_LIMIT)
    raise TypeError(f"not a term: {t!r}")


def _plug(parent: Term, slot: int, child: Term) -> Term:
    cls = type(parent)
    if cls is Fgh:
        return Fgh(parent.index, child)
    if cls is Iter:
        return Iter(parent.index, parent.count, child)
    if slot == 0:
        return Arrow(child, parent.arrows, parent.height)
    if slot == 1:
        return Arrow(parent.base, child, parent.height)
    return Arrow(parent.base, parent.arrows, child)


def _first_open(t: Term) -> int:
    """Index of the leftmost non-literal child, -1 if all children are literal."""
    cls = type(t)
    if cls is Arrow:
        if type(t.base) is not Lit:
            return 0
        if type(t.arrows) is not Lit:
            return 1
        if type(t.height) is not Lit:
            return 2
        return -1
    if cls is Fgh or cls is Iter:
        return -1 if type(t.arg) is Lit else 0
    return -1


_CHILD = {
    0: lambda t: t.base if type(t) is Arrow else t.arg,
    1: lambda t: t.arrows,
    2: lambda t: t.height,
}


class _Machine:
    def __init__(self, t: Term):
        self.focus = t
        self.ctx: List[Tuple[Term, int]] = []
        self.arrow_frames = 0  # frames sitting in an Arrow's arrow-count slot

    def settle(self) -> bool:
        """Move the focus to the next redex; True when the whole term is a literal."""
        ctx = self.ctx
        f = self.focus
        while True:
            cls = type(f)
            if cls is Lit:
                if not ctx:
                    self.focus = f
                    return True
                parent, slot = ctx.pop()
                if slot == 1:
                    self.arrow_frames -= 1
                f = _plug(parent, slot, f)
                continue
            # unary nodes dominate FGH evaluation, so they skip the generic path
            if cls is Fgh or cls is Iter:
                if type(f.arg) is Lit:
                    self.focus = f
                    return False
                ctx.append((f, 0))
                f = f.arg
                continue
            i = _first_open(f)
            if i < 0:
                self.focus = f
                return False
            ctx.append((f, i))
            if i == 1:
                self.arrow_frames += 1
            f = _CHILD[i](f)

    def fire(self, max_bits: int) -> str:
        self.focus, rule = _contract(self.focus, max_bits)
        return rule

    def term(self) -> Term:
        t = self.focus
        for parent, slot in reversed(self.ctx):
            t = _plug(parent, slot, t)
        return t


def step(t: Term, budget: Optional[Budget] = None) -> StepResult:
    """Apply exactly one rule at the leftmost-innermost redex."""
    budget = budget or Budget()
    m = _Machine(t)
    if m.settle():
        return AlreadyValue()
    try:
        rule = m.fire(budget.max_bits)
    except _Blocked as e:
        reason = e.reason.value if isinstance(e.reason, Reason) else e.reason
        return Stuck(reason)
    return Rewritten(m.term(), rule)


def _oversized_literal(t: Term, max_bits: int) -> bool:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Lit):
            if node.value.bit_length() > max_bits:
                return True
        elif isinstance(node, Arrow):
            stack += [node.base, node.arrows, node.height]
        elif isinstance(node, (Fgh, Iter)):
            stack.append(node.arg)
    return False


def evaluate(t: Term, budget: Optional[Budget] = None) -> EvalOutcome:
    """Rewrite ``t`` to a literal within ``budget``.

    Raises ValueError for ill-formed terms, including an arrow count that only
    reduces to 0 during evaluation.  Running out of steps or bits is reported
    as an :class:`Overflow` carrying the term reached so far.
    """
    budget = budget or Budget()
    problems = validate(t)
    if problems:
        raise ValueError(f"ill-formed term: {problems[0]}")
    if _oversized_literal(t, budget.max_bits):
        return Overflow(t, Reason.MAGNITUDE_LIMIT, 0)
    m = _Machine(t)
    steps = 0
    max_steps, max_bits = budget.max_steps, budget.max_bits
    while True:
        if m.settle():
            return Exact(m.focus.value, steps)
        if steps >= max_steps:
            return _overflow(m, Reason.STEP_LIMIT, steps)
        try:
            m.focus = _contract(m.focus, max_bits)[0]
        except _Blocked as e:
            if not isinstance(e.reason, Reason):
                raise ValueError(f"ill-formed term after {steps} steps: {e.reason}") from None
            return _overflow(m, e.reason, steps)
        steps += 1


def _overflow(m: _Machine, reason: Reason, steps: int) -> Overflow:
    if m.arrow_frames:
        reason = Reason.SYMBOLIC_ARROW_COUNT
    return Overflow(m.term(), reason, steps)


def trace(t: Term, max_steps: int, budget: Optional[Budget] = None) -> List[Tuple[str, Term]]:
    """The first ``max_steps`` rewrites of ``t`` as ``(rule, resulting term)`` pairs."""
    budget = budget or Budget()
    m = _Machine(t)
    out = []
    while len(out) < max_steps:
        if m.settle():
            break
        try:
            rule = m.fire(budget.max_bits)
        except _Blocked:
            break
        out.append((rule, m.term()))
    return out
