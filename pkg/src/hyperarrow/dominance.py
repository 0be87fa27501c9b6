"""Certified order relations between terms.

Every decided comparison comes with a :class:`Certificate`: a list of rule
applications, each concluding ``lhs REL rhs`` from earlier steps it cites as
premises.  :func:`check_certificate` re-validates a certificate using only the
rule definitions in this module; :func:`compare` searches for one by
proposing steps and keeping those the rules accept.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .engine import Budget, Exact, evaluate
from .hierarchies import aurellion_ordinal_term, aurellion_term
from .ordinals import Kind, classify
from .terms import Arrow, Aur, AurOrd, Fgh, Iter, Lit, Term, from_json, to_json, validate

__all__ = [
    "Rel",
    "Step",
    "Certificate",
    "CheckReport",
    "Verdict",
    "CERT_VERSION",
    "RULE_IDS",
    "compare",
    "check_certificate",
    "lemma1_certificate",
    "lower_bound",
    "unfold",
    "cert_to_json",
    "cert_from_json",
]

CERT_VERSION = "cert_v1"


class Rel(enum.Enum):
    LT = "Less"
    LE = "LessEqual"
    EQ = "Equal"
    GE = "GreaterEqual"
    GT = "Greater"
    UNKNOWN = "Unknown"

    def inverse(self) -> "Rel":
        return _INVERSE[self]

    @property
    def decisive(self) -> bool:
        return self in (Rel.LT, Rel.EQ, Rel.GT)

    def holds(self, c: int) -> bool:
        """Whether the relation is true of two values whose comparison is ``c``."""
        return {
            Rel.LT: c < 0, Rel.LE: c <= 0, Rel.EQ: c == 0,
            Rel.GE: c >= 0, Rel.GT: c > 0, Rel.UNKNOWN: False,
        }[self]


_INVERSE = {
    Rel.LT: Rel.GT, Rel.LE: Rel.GE, Rel.EQ: Rel.EQ,
    Rel.GE: Rel.LE, Rel.GT: Rel.LT, Rel.UNKNOWN: Rel.UNKNOWN,
}
_WEAKEN = {Rel.LT: Rel.LE, Rel.LE: Rel.LE, Rel.EQ: Rel.EQ, Rel.GE: Rel.GE, Rel.GT: Rel.GE}


def compose(r1: Rel, r2: Rel) -> Optional[Rel]:
    """Relation between x and z given ``x r1 y`` and ``y r2 z``; None if nothing follows."""
    if r1 is Rel.EQ:
        return r2
    if r2 is Rel.EQ:
        return r1
    down, up = {Rel.LT, Rel.LE}, {Rel.GT, Rel.GE}
    if r1 in down and r2 in down:
        return Rel.LE if r1 is r2 is Rel.LE else Rel.LT
    if r1 in up and r2 in up:
        return Rel.GE if r1 is r2 is Rel.GE else Rel.GT
    return None


@dataclass(frozen=True)
class Step:
    rule_id: str
    lhs: Term
    rhs: Term
    relation: Rel
    premises: Tuple[int, ...] = ()
    bindings: Dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Certificate:
    steps: Tuple[Step, ...]
    lhs: Term
    rhs: Term
    relation: Rel


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    failed_step: Optional[int] = None
    reason: str = ""


@dataclass(frozen=True)
class Verdict:
    relation: Rel
    certificate: Optional[Certificate] = None


# -- rule definitions -----------------------------------------------------

def lower_bound(t: Term) -> int:
    """A natural number certainly not exceeding the value of ``t``.

    Purely structural: ``a ^[k] b >= a`` when a, b, k >= 1; it exceeds both a
    and b when a, b >= 2; f_alpha(x) > x.  Returns 0 when nothing is known.
    """
    if isinstance(t, Lit):
        return t.value
    if isinstance(t, Arrow):
        lk = lower_bound(t.arrows)
        if lk < 1:
            return 0
        la, lb = lower_bound(t.base), lower_bound(t.height)
        if la >= 2 and lb >= 2:
            return max(la, lb) + 1
        if la >= 1:
            # b = 0 gives exactly 1, b >= 1 gives at least a
            return la if lb >= 1 else 1
        return 0
    if isinstance(t, Fgh):
        return lower_bound(t.arg) + 1
    if isinstance(t, Iter):
        return lower_bound(t.arg) + t.count
    if isinstance(t, Aur):
        return lower_bound(aurellion_term(1)) if t.n >= 1 else 0
    if isinstance(t, AurOrd):
        return lower_bound(aurellion_ordinal_term(t.alpha)) if t.alpha.is_finite() else 0
    return 0


class _TooLarge(Exception):
    pass


def unfold(t: Term, max_nodes: int) -> Optional[Term]:
    """Replace every Aur/AurOrd node by its definition, down to the seed.

    Limit-indexed AurOrd nodes stay symbolic.  Returns None when the result
    would need more than ``max_nodes`` Arrow nodes.
    """
    spent = [0]

    def charge(n):
        spent[0] += n
        if spent[0] > max_nodes:
            raise _TooLarge

    def go(t):
        if isinstance(t, Aur):
            charge(t.n)
            return aurellion_term(t.n)
        if isinstance(t, AurOrd):
            c = classify(t.alpha)
            while c.kind is Kind.SUCCESSOR:
                charge(1)
                c = classify(c.pred)
            return aurellion_ordinal_term(t.alpha)
        if isinstance(t, Arrow):
            return Arrow(go(t.base), go(t.arrows), go(t.height))
        if isinstance(t, Fgh):
            return Fgh(t.index, go(t.arg))
        if isinstance(t, Iter):
            return Iter(t.index, t.count, go(t.arg))
        return t

    try:
        return go(t)
    except (_TooLarge, RecursionError):
        return None


def _unfold_once(t: Term) -> Optional[Term]:
    """One definitional unfolding of an Aur/AurOrd node."""
    if isinstance(t, Aur) and t.n >= 1:
        return aurellion_term(1) if t.n == 1 else Arrow(Lit(10), Aur(t.n - 1), Lit(10))
    if isinstance(t, AurOrd):
        c = classify(t.alpha)
        if c.kind is Kind.ZERO:
            return aurellion_ordinal_term(t.alpha)
        if c.kind is Kind.SUCCESSOR:
            return Arrow(Lit(10), AurOrd(c.pred), Lit(10))
    return None


def _budget_from(bindings) -> Budget:
    return Budget(bindings.get("max_steps", Budget.max_steps), bindings.get("max_bits", Budget.max_bits))


def _r_exact(s: Step, facts) -> Optional[str]:
    budget = _budget_from(s.bindings)
    values = []
    for side in (s.lhs, s.rhs):
        out = evaluate(side, budget)
        if not isinstance(out, Exact):
            return "side does not evaluate exactly under the recorded budget"
        values.append(out.value)
    c = (values[0] > values[1]) - (values[0] < values[1])
    if not s.relation.holds(c):
        return f"numeric comparison contradicts {s.relation.value}"
    return None


def _r_norm(s: Step, facts) -> Optional[str]:
    if s.relation not in (Rel.EQ, Rel.LE, Rel.GE):
        return "normalization only proves equality"
    limit = s.bindings.get("max_nodes", Budget.max_steps)
    a, b = unfold(s.lhs, limit), unfold(s.rhs, limit)
    if a is None or b is None:
        return "unfolding exceeds the recorded node limit"
    if a != b:
        return "sides differ after unfolding"
    return None


def _arrows(s: Step):
    if not (isinstance(s.lhs, Arrow) and isinstance(s.rhs, Arrow)):
        return None
    return s.lhs, s.rhs


def _premise(s: Step, facts, lhs, rhs) -> Optional[str]:
    if len(s.premises) != 1:
        return "expects exactly one premise"
    p = facts[s.premises[0]]
    if p.lhs != lhs or p.rhs != rhs:
        return "premise does not relate the differing positions"
    return None


def _r_height(s: Step, facts) -> Optional[str]:
    pair = _arrows(s)
    if pair is None:
        return "both sides must be arrow terms"
    x, y = pair
    if x.base != y.base or x.arrows != y.arrows:
        return "base and arrow count must coincide"
    if lower_bound(x.base) < 2:
        return "base not known to be >= 2"
    if lower_bound(x.arrows) < 1:
        return "arrow count not known to be >= 1"
    err = _premise(s, facts, x.height, y.height)
    if err:
        return err
    if s.relation is not facts[s.premises[0]].relation:
        return "height monotonicity preserves the premise relation exactly"
    return None


def _r_base(s: Step, facts) -> Optional[str]:
    pair = _arrows(s)
    if pair is None:
        return "both sides must be arrow terms"
    x, y = pair
    if x.arrows != y.arrows or x.height != y.height:
        return "arrow count and height must coincide"
    if lower_bound(x.height) < 1:
        return "height not known to be >= 1"
    if lower_bound(x.arrows) < 1:
        return "arrow count not known to be >= 1"
    if lower_bound(x.base) < 1 or lower_bound(y.base) < 1:
        return "bases not known to be >= 1"
    err = _premise(s, facts, x.base, y.base)
    if err:
        return err
    if s.relation is not facts[s.premises[0]].relation:
        return "base monotonicity preserves the premise relation exactly"
    return None


def _arrow_count_conditions(s: Step, facts):
    pair = _arrows(s)
    if pair is None:
        return "both sides must be arrow terms", None
    x, y = pair
    if x.base != y.base or x.height != y.height:
        return "base and height must coincide", None
    if lower_bound(x.base) < 2 or lower_bound(x.height) < 2:
        return "base and height not known to be >= 2", None
    if lower_bound(x.arrows) < 1 or lower_bound(y.arrows) < 1:
        return "arrow counts not known to be >= 1", None
    err = _premise(s, facts, x.arrows, y.arrows)
    if err:
        return err, None
    return None, x


def _r_arrows_nonstrict(s: Step, facts) -> Optional[str]:
    err, _ = _arrow_count_conditions(s, facts)
    if err:
        return err
    if s.relation is not _WEAKEN.get(facts[s.premises[0]].relation):
        return "arrow-count monotonicity is only non-strict here"
    return None


def _r_arrows_strict(s: Step, facts) -> Optional[str]:
    err, x = _arrow_count_conditions(s, facts)
    if err:
        return err
    # 2 ^[k] 2 = 4 for every k
    if lower_bound(x.base) < 3 and lower_bound(x.height) < 3:
        return "strictness needs base >= 3 or height >= 3"
    if s.relation is not facts[s.premises[0]].relation:
        return "strict arrow-count monotonicity preserves the premise relation exactly"
    return None


def _r_major(s: Step, facts) -> Optional[str]:
    if isinstance(s.lhs, Arrow) and s.relation is Rel.GT:
        big, small = s.lhs, s.rhs
    elif isinstance(s.rhs, Arrow) and s.relation is Rel.LT:
        big, small = s.rhs, s.lhs
    else:
        return "needs an arrow term strictly above one of its operands"
    if small != big.base and small != big.height:
        return "the smaller side must be the base or the height"
    if lower_bound(big.base) < 2 or lower_bound(big.height) < 2:
        return "base and height not known to be >= 2"
    if lower_bound(big.arrows) < 1:
        return "arrow count not known to be >= 1"
    return None


ONE_ARROW = Lit(1)


def _lemma_rhs(n: int) -> Arrow:
    return Arrow(Lit(10), Lit(n + 2), Lit(10))


def _r_lemma1(s: Step, facts) -> Optional[str]:
    if isinstance(s.lhs, Aur):
        aur, other, rel = s.lhs, s.rhs, s.relation
    elif isinstance(s.rhs, Aur):
        aur, other, rel = s.rhs, s.lhs, s.relation.inverse()
    else:
        return "one side must be an Aurellion term"
    n = aur.n
    if n < 1 or other != _lemma_rhs(n):
        return "instance must be A[n] against 10 ^[n+2] 10"
    allowed = {Rel.GE, Rel.EQ} if n == 1 else {Rel.GE, Rel.GT}
    if rel not in allowed:
        return f"lemma does not give {rel.value} at n = {n}"
    return None


def _r_trans(s: Step, facts) -> Optional[str]:
    if len(s.premises) != 2:
        return "transitivity takes two premises"
    p, q = (facts[i] for i in s.premises)
    if p.rhs != q.lhs:
        return "premises do not share a middle term"
    if p.lhs != s.lhs or q.rhs != s.rhs:
        return "conclusion does not match the outer terms of the premises"
    if compose(p.relation, q.relation) is not s.relation:
        return "relations do not compose to the stated conclusion"
    return None


RULES: Dict[str, Callable[[Step, Sequence[Step]], Optional[str]]] = {
    "R-EXACT": _r_exact,
    "R-NORM": _r_norm,
    "R-HEIGHT": _r_height,
    "R-BASE": _r_base,
    "R-ARROWS-NONSTRICT": _r_arrows_nonstrict,
    "R-ARROWS-STRICT": _r_arrows_strict,
    "R-MAJOR": _r_major,
    "R-LEMMA1": _r_lemma1,
    "R-TRANS": _r_trans,
}
RULE_IDS = tuple(RULES)


def _capped(s: Step, limit: Budget):
    """``s`` with its resource bindings filled in and held to ``limit``."""
    caps = {"max_steps": limit.max_steps, "max_bits": limit.max_bits, "max_nodes": limit.max_steps}
    for name, v in s.bindings.items():
        if name in caps and v > caps[name]:
            return None
    return replace(s, bindings={**caps, **s.bindings})


def check_step(s: Step, facts: Sequence[Step], index: Optional[int] = None,
               limit: Optional[Budget] = None) -> Optional[str]:
    """Why ``s`` is not a valid consequence of ``facts`` (None if it is).

    With ``limit`` set, a step whose bindings ask for more work than the limit
    allows is rejected instead of checked.
    """
    rule = RULES.get(s.rule_id)
    if rule is None:
        return f"unknown rule {s.rule_id!r}"
    if s.relation is Rel.UNKNOWN:
        return "a step must conclude a definite relation"
    upto = len(facts) if index is None else index
    for i in s.premises:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < upto:
            return f"premise {i!r} does not refer to an earlier step"
    if limit is not None:
        s = _capped(s, limit)
        if s is None:
            return "bindings exceed the checker's resource limit"
    for side in (s.lhs, s.rhs):
        if validate(side):
            return "ill-formed term in step"
    try:
        return rule(s, facts)
    except (ValueError, TypeError, RecursionError) as e:
        return f"rule raised {type(e).__name__}: {e}"


def check_certificate(c: Certificate, limit: Optional[Budget] = None) -> CheckReport:
    for i, s in enumerate(c.steps):
        err = check_step(s, c.steps, i, limit)
        if err:
            return CheckReport(False, i, err)
    if not c.steps:
        if c.lhs == c.rhs and c.relation in (Rel.EQ, Rel.LE, Rel.GE):
            return CheckReport(True)
        return CheckReport(False, None, "empty certificate only proves reflexive relations")
    last = c.steps[-1]
    if (last.lhs, last.rhs, last.relation) != (c.lhs, c.rhs, c.relation):
        return CheckReport(False, len(c.steps) - 1, "final step does not match the conclusion")
    return CheckReport(True)


# -- certificate construction -----------------------------------------------

class _Builder:
    def __init__(self):
        self.steps: List[Step] = []

    def add(self, rule_id, lhs, rhs, relation, premises=(), **bindings) -> Optional[int]:
        s = Step(rule_id, lhs, rhs, relation, tuple(premises), bindings)
        if check_step(s, self.steps) is not None:
            return None
        self.steps.append(s)
        return len(self.steps) - 1

    def trans(self, i: Optional[int], j: Optional[int]) -> Optional[int]:
        if i is None or j is None:
            return None
        p, q = self.steps[i], self.steps[j]
        rel = compose(p.relation, q.relation)
        if rel is None:
            return None
        return self.add("R-TRANS", p.lhs, q.rhs, rel, (i, j))

    def certificate(self, root: int) -> Certificate:
        """Keep only the steps ``root`` depends on, renumbered in order."""
        needed = set()
        todo = [root]
        while todo:
            i = todo.pop()
            if i not in needed:
                needed.add(i)
                todo.extend(self.steps[i].premises)
        order = sorted(needed)
        renum = {old: new for new, old in enumerate(order)}
        steps = tuple(
            Step(s.rule_id, s.lhs, s.rhs, s.relation,
                 tuple(renum[p] for p in s.premises), dict(s.bindings))
            for s in (self.steps[i] for i in order)
        )
        last = steps[-1]
        return Certificate(steps, last.lhs, last.rhs, last.relation)


def lemma1_certificate(n: int) -> Certificate:
    """Certificate for ``A[n] >= 10 ^[n+2] 10`` by induction on n.

    The base case is an equality; each inductive link shows the arrow count
    ``A[k]`` exceeds ``k+3`` and applies strict arrow-count monotonicity, so
    the conclusion is strict for n >= 2.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("the lemma holds from n = 1")
    b = _Builder()
    ten = Lit(10)
    exact = {"max_steps": 16, "max_bits": 64}
    h = b.add("R-NORM", Aur(1), _lemma_rhs(1), Rel.EQ, max_nodes=4)
    one_arrow = Arrow(ten, Lit(1), ten)
    for k in range(1, n):
        # 10 ^[k+2] 10 > 10^10 > k+3
        s1 = b.add("R-EXACT", Lit(k + 2), Lit(1), Rel.GT, **exact)
        s2 = b.add("R-ARROWS-STRICT", _lemma_rhs(k), one_arrow, Rel.GT, (s1,))
        s3 = b.add("R-EXACT", one_arrow, Lit(k + 3), Rel.GT, **exact)
        aux = b.trans(s2, s3)
        count = b.trans(h, aux)  # A[k] > k+3
        mono = b.add("R-ARROWS-STRICT", Arrow(ten, Aur(k), ten), _lemma_rhs(k + 1), Rel.GT, (count,))
        unf = b.add("R-NORM", Aur(k + 1), Arrow(ten, Aur(k), ten), Rel.EQ, max_nodes=k + 1)
        h = b.trans(unf, mono)
    if h is None:
        raise AssertionError("lemma certificate construction failed")
    return b.certificate(h)


class _Prover:
    MAX_DEPTH = 48

    def __init__(self, budget: Budget):
        self.budget = budget
        self.b = _Builder()
        self.memo: Dict[Tuple[Term, Term], Optional[int]] = {}
        self.values: Dict[Term, Optional[int]] = {}
        self.active = set()
        self.work = 0

    def value(self, t: Term) -> Optional[int]:
        if t not in self.values:
            try:
                out = evaluate(t, self.budget)
            except ValueError:
                out = None  # an arrow count that reduces to 0 has no value
            self.values[t] = out.value if isinstance(out, Exact) else None
        return self.values[t]

    def exact(self, x, y):
        if self.value(x) is None or self.value(y) is None:
            return None
        vx, vy = self.value(x), self.value(y)
        rel = Rel.LT if vx < vy else Rel.GT if vx > vy else Rel.EQ
        return self.b.add("R-EXACT", x, y, rel,
                          max_steps=self.budget.max_steps, max_bits=self.budget.max_bits)

    def rel(self, i: Optional[int]) -> Optional[Rel]:
        return None if i is None else self.b.steps[i].relation

    def prove(self, x: Term, y: Term, depth: int = 0) -> Optional[int]:
        key = (x, y)
        if key in self.memo:
            return self.memo[key]
        if key in self.active or depth > self.MAX_DEPTH:
            return None
        self.work += 1
        if self.work > self.budget.max_steps:
            return None
        self.active.add(key)
        try:
            best = None
            for attempt in self._strategies(x, y, depth + 1):
                i = attempt()
                if i is None:
                    continue
                if self.rel(i).decisive:
                    best = i
                    break
                if best is None:
                    best = i
        finally:
            self.active.discard(key)
        self.memo[key] = best
        return best

    def _strategies(self, x, y, depth):
        b = self.b
        yield lambda: self.exact(x, y)
        yield lambda: b.add("R-NORM", x, y, Rel.EQ, max_nodes=self.budget.max_steps)
        if isinstance(x, Arrow) and isinstance(y, Arrow):
            if x.base == y.base and x.arrows == y.arrows:
                yield lambda: self._mono("R-HEIGHT", x, y, x.height, y.height, depth)
            if x.arrows == y.arrows and x.height == y.height:
                yield lambda: self._mono("R-BASE", x, y, x.base, y.base, depth)
            if x.base == y.base and x.height == y.height:
                yield lambda: self._arrow_counts(x, y, depth)
        for lhs_side in (True, False):
            t = x if lhs_side else y
            u = _unfold_once(t)
            if u is not None:
                yield lambda t=t, u=u, lhs_side=lhs_side: self._via_unfold(x, y, t, u, lhs_side, depth)
        if isinstance(x, Aur):
            yield lambda: self._via_lemma(x, y, depth)
        for big_left in (True, False):
            big = x if big_left else y
            if isinstance(big, Arrow):
                for part in (big.height, big.base):
                    yield lambda big=big, part=part, big_left=big_left: self._via_major(
                        x, y, big, part, big_left, depth)
        for big_left in (True, False):
            big = x if big_left else y
            if isinstance(big, Arrow) and big.arrows != ONE_ARROW and self.value(big) is None:
                yield lambda big=big, big_left=big_left: self._via_witness(x, y, big, big_left, depth)

    def _mono(self, rule, x, y, px, py, depth):
        p = self.prove(px, py, depth)
        if p is None:
            return None
        return self.b.add(rule, x, y, self.rel(p), (p,))

    def _arrow_counts(self, x, y, depth):
        p = self.prove(x.arrows, y.arrows, depth)
        if p is None:
            return None
        rel = self.rel(p)
        return (self.b.add("R-ARROWS-STRICT", x, y, rel, (p,))
                or self.b.add("R-ARROWS-NONSTRICT", x, y, _WEAKEN[rel], (p,)))

    def _via_unfold(self, x, y, t, u, lhs_side, depth):
        if lhs_side:
            e = self.b.add("R-NORM", t, u, Rel.EQ, max_nodes=self.budget.max_steps)
            return self.b.trans(e, self.prove(u, y, depth)) if e is not None else None
        e = self.b.add("R-NORM", u, t, Rel.EQ, max_nodes=self.budget.max_steps)
        return self.b.trans(self.prove(x, u, depth), e) if e is not None else None

    def _via_lemma(self, x, y, depth):
        anchor = _lemma_rhs(x.n)
        rel = Rel.EQ if x.n == 1 else Rel.GT
        lem = self.b.add("R-LEMMA1", x, anchor, rel)
        p = self.prove(anchor, y, depth)
        if lem is None or self.rel(p) not in (Rel.GT, Rel.GE, Rel.EQ):
            return None
        return self.b.trans(lem, p)

    def _via_witness(self, x, y, big, big_left, depth):
        """Bound ``big`` below by the same base and height under one arrow."""
        w = Arrow(big.base, ONE_ARROW, big.height)
        up, down = (Rel.GT, Rel.GE, Rel.EQ), (Rel.LT, Rel.LE, Rel.EQ)
        if big_left:
            m = self._arrow_counts(big, w, depth)
            if self.rel(m) not in up:
                return None
            q = self.prove(w, y, depth)
            return self.b.trans(m, q) if self.rel(q) in up else None
        m = self._arrow_counts(w, big, depth)
        if self.rel(m) not in down:
            return None
        q = self.prove(x, w, depth)
        return self.b.trans(q, m) if self.rel(q) in down else None

    def _via_major(self, x, y, big, part, big_left, depth):
        if big_left:
            m = self.b.add("R-MAJOR", big, part, Rel.GT)
            if m is None:
                return None
            p = self.prove(part, y, depth)
            if self.rel(p) not in (Rel.GT, Rel.GE, Rel.EQ):
                return None
            return self.b.trans(m, p)
        m = self.b.add("R-MAJOR", part, big, Rel.LT)
        if m is None:
            return None
        p = self.prove(x, part, depth)
        if self.rel(p) not in (Rel.LT, Rel.LE, Rel.EQ):
            return None
        return self.b.trans(p, m)


def compare(lhs: Term, rhs: Term, budget: Optional[Budget] = None) -> Verdict:
    """Decide ``lhs`` vs ``rhs`` with a certificate, or return Unknown.

    Tries exact evaluation, then equality after unfolding, then the
    monotonicity rules chained by transitivity.  Non-strict results are
    reported as Unknown.
    """
    budget = budget or Budget()
    for side in (lhs, rhs):
        problems = validate(side)
        if problems:
            raise ValueError(f"ill-formed term: {problems[0]}")
    prover = _Prover(budget)
    try:
        root = prover.prove(lhs, rhs)
    except RecursionError:
        # terms too deep to hash or compare structurally
        return Verdict(Rel.UNKNOWN)
    if root is None or not prover.rel(root).decisive:
        return Verdict(Rel.UNKNOWN)
    cert = prover.b.certificate(root)
    if not check_certificate(cert).valid:
        return Verdict(Rel.UNKNOWN)
    return Verdict(cert.relation, cert)


# -- JSON -------------------------------------------------------------------

def cert_to_json(c: Certificate) -> dict:
    return {
        "version": CERT_VERSION,
        "conclusion": {"lhs": to_json(c.lhs), "rhs": to_json(c.rhs), "relation": c.relation.value},
        "steps": [
            {
                "rule_id": s.rule_id,
                "lhs": to_json(s.lhs),
                "rhs": to_json(s.rhs),
                "relation": s.relation.value,
                "premises": list(s.premises),
                "bindings": dict(s.bindings),
            }
            for s in c.steps
        ],
    }


def _rel(v) -> Rel:
    try:
        return Rel(v)
    except ValueError:
        raise ValueError(f"unknown relation {v!r}") from None


def cert_from_json(data) -> Certificate:
    if not isinstance(data, dict):
        raise ValueError("certificate must be a JSON object")
    if data.get("version") != CERT_VERSION:
        raise ValueError(f"unsupported certificate version {data.get('version')!r}")
    try:
        concl = data["conclusion"]
        steps = []
        for s in data["steps"]:
            premises = s.get("premises", [])
            bindings = s.get("bindings", {})
            if not isinstance(premises, list) or not all(
                isinstance(p, int) and not isinstance(p, bool) for p in premises
            ):
                raise ValueError("premises must be a list of step indices")
            if not isinstance(bindings, dict) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in bindings.values()
            ):
                raise ValueError("bindings must map names to integers")
            steps.append(Step(str(s["rule_id"]), from_json(s["lhs"]), from_json(s["rhs"]),
                              _rel(s["relation"]), tuple(premises), dict(bindings)))
        return Certificate(tuple(steps), from_json(concl["lhs"]), from_json(concl["rhs"]),
                           _rel(concl["relation"]))
    except (KeyError, TypeError, AttributeError) as e:
        raise ValueError(f"malformed certificate: {e}") from None
