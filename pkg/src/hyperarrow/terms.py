"""Immutable symbolic terms for arrow, FGH and Aurellion expressions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple, Union

from . import ordinals
from ._decimal import from_decimal, to_decimal
from .ordinals import Ordinal

__all__ = [
    "Lit",
    "Arrow",
    "Fgh",
    "Iter",
    "Aur",
    "AurOrd",
    "Term",
    "Violation",
    "mk_arrow",
    "lit",
    "validate",
    "measure",
    "children",
    "to_json",
    "from_json",
    "KINDS",
]


@dataclass(frozen=True)
class Lit:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 0:
            raise ValueError(f"literal must be a natural number, got {self.value!r}")


@dataclass(frozen=True)
class Arrow:
    """``base ^[arrows] height``; the arrow count is itself a term."""

    base: "Term"
    arrows: "Term"
    height: "Term"


@dataclass(frozen=True)
class Fgh:
    index: Ordinal
    arg: "Term"


@dataclass(frozen=True)
class Iter:
    """``f_index`` applied ``count`` times to ``arg``."""

    index: Ordinal
    count: int
    arg: "Term"


@dataclass(frozen=True)
class Aur:
    n: int


@dataclass(frozen=True)
class AurOrd:
    alpha: Ordinal


Term = Union[Lit, Arrow, Fgh, Iter, Aur, AurOrd]

KINDS = {Lit: "lit", Arrow: "arrow", Fgh: "fgh", Iter: "iter", Aur: "aur", AurOrd: "aurord"}


def lit(n: int) -> Lit:
    return Lit(n)


def _coerce(t) -> Term:
    return Lit(t) if isinstance(t, int) else t


def mk_arrow(base, arrows, height) -> Arrow:
    """Build an Arrow node without simplification; ints are wrapped as literals."""
    return Arrow(_coerce(base), _coerce(arrows), _coerce(height))


def children(t: Term) -> List[Tuple[str, Term]]:
    if isinstance(t, Arrow):
        return [("base", t.base), ("arrows", t.arrows), ("height", t.height)]
    if isinstance(t, (Fgh, Iter)):
        return [("arg", t.arg)]
    return []


class Violation(NamedTuple):
    path: Tuple[str, ...]
    message: str

    def __str__(self):
        where = ".".join(self.path) or "<root>"
        return f"{where}: {self.message}"


def _natural(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _path(link) -> Tuple[str, ...]:
    out = []
    while link is not None:
        name, link = link
        out.append(name)
    return tuple(reversed(out))


def validate(t: Term) -> List[Violation]:
    """Every well-formedness violation in ``t``, each with its path from the root."""
    report = []
    # paths are kept as (name, parent) cells so deep terms stay linear
    stack = [(t, None)]

    def bad(link, *extra, message):
        report.append(Violation(_path(link) + extra, message))

    while stack:
        node, link = stack.pop()
        if isinstance(node, Lit):
            if not _natural(node.value):
                bad(link, message="literal is not a natural number")
        elif isinstance(node, Arrow):
            if isinstance(node.arrows, Lit) and node.arrows.value == 0:
                bad(link, "arrows", message="arrow count must be >= 1")
        elif isinstance(node, (Fgh, Iter)):
            if not isinstance(node.index, Ordinal):
                bad(link, "index", message="malformed ordinal")
            if isinstance(node, Iter) and not _natural(node.count):
                bad(link, "count", message="iteration count is not a natural number")
        elif isinstance(node, Aur):
            if not _natural(node.n) or node.n < 1:
                bad(link, "n", message="Aurellion index must be >= 1")
        elif isinstance(node, AurOrd):
            if not isinstance(node.alpha, Ordinal):
                bad(link, "alpha", message="malformed ordinal")
        else:
            bad(link, message=f"not a term: {type(node).__name__}")
            continue
        # reversed so the report lists violations in left-to-right order
        for name, child in reversed(children(node)):
            stack.append((child, (name, link)))
    return report


def measure(t: Term) -> Tuple[int, int]:
    """``(depth, node_count)`` of ``t``; ordinal indices are attributes, not nodes."""
    depth = count = 0
    stack = [(t, 1)]
    while stack:
        node, d = stack.pop()
        count += 1
        depth = max(depth, d)
        stack.extend((c, d + 1) for _, c in children(node))
    return depth, count


# -- JSON AST -------------------------------------------------------------

def to_json(t: Term) -> dict:
    """Canonical AST as nested dicts; naturals are rendered as decimal strings.

    Built bottom-up without recursion so that very deep residual terms can be
    serialized.
    """
    done = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        kids = children(node)
        if kids and not expanded:
            stack.append((node, True))
            stack.extend((c, False) for _, c in reversed(kids))
            continue
        if kids:
            sub = dict(zip((name for name, _ in kids), done[-len(kids):]))
            del done[-len(kids):]
        if isinstance(node, Lit):
            d = {"kind": "lit", "value": to_decimal(node.value)}
        elif isinstance(node, Arrow):
            d = {"kind": "arrow", **sub}
        elif isinstance(node, Fgh):
            d = {"kind": "fgh", "index": node.index.to_json(), "arg": sub["arg"]}
        elif isinstance(node, Iter):
            d = {"kind": "iter", "index": node.index.to_json(),
                 "count": to_decimal(node.count), "arg": sub["arg"]}
        elif isinstance(node, Aur):
            d = {"kind": "aur", "index": to_decimal(node.n)}
        elif isinstance(node, AurOrd):
            d = {"kind": "aurord", "index": node.alpha.to_json()}
        else:
            raise TypeError(f"not a term: {node!r}")
        done.append(d)
    return done[0]


def from_json(data) -> Term:
    if not isinstance(data, dict):
        raise ValueError("term must be a JSON object")
    kind = data.get("kind")
    try:
        if kind == "lit":
            return Lit(_nat(data["value"]))
        if kind == "arrow":
            return Arrow(from_json(data["base"]), from_json(data["arrows"]), from_json(data["height"]))
        if kind == "fgh":
            return Fgh(ordinals.from_json(data["index"]), from_json(data["arg"]))
        if kind == "iter":
            return Iter(ordinals.from_json(data["index"]), _nat(data["count"]), from_json(data["arg"]))
        if kind == "aur":
            return Aur(_nat(data["index"]))
        if kind == "aurord":
            return AurOrd(ordinals.from_json(data["index"]))
    except KeyError as e:
        raise ValueError(f"{kind} node is missing field {e.args[0]!r}") from None
    raise ValueError(f"unknown term kind {kind!r}")


def _nat(s) -> int:
    if not isinstance(s, str):
        raise ValueError(f"naturals are encoded as decimal strings, got {s!r}")
    return from_decimal(s)
