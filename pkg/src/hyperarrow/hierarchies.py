"""Constructors for the Aurellion families and fast-growing hierarchy terms."""
from __future__ import annotations

from dataclasses import dataclass

from .ordinals import Kind, Ordinal, classify, fundamental
from .terms import Arrow, AurOrd, Fgh, Lit, Term

__all__ = [
    "FamilyParams",
    "DEFAULT",
    "ORDINAL_DEFAULT",
    "aurellion_term",
    "aurellion_ordinal_term",
    "expand_limit",
    "fgh_term",
]


@dataclass(frozen=True)
class FamilyParams:
    """``A_1 = base ^[seed_arrows] seed_height``, ``A_{n+1} = base ^[A_n] base``."""

    base: int = 10
    seed_arrows: int = 3
    seed_height: int = 10

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.seed_arrows < 1:
            raise ValueError("seed_arrows must be >= 1")
        if self.seed_height < 2:
            raise ValueError("seed_height must be >= 2")

    def seed(self) -> Arrow:
        return Arrow(Lit(self.base), Lit(self.seed_arrows), Lit(self.seed_height))

    def wrap(self, arrows: Term) -> Arrow:
        b = Lit(self.base)
        return Arrow(b, arrows, b)


DEFAULT = FamilyParams()
# the ordinal-indexed family starts one level lower: A_0 = 10^^10
ORDINAL_DEFAULT = FamilyParams(10, 2, 10)


def aurellion_term(n: int, params: FamilyParams = DEFAULT) -> Term:
    """Fully unfolded ``A_n``: a depth-``n`` nest of arrow counts around the seed."""
    if n < 1:
        raise ValueError("the finite family starts at n = 1")
    t = params.seed()
    for _ in range(n - 1):
        t = params.wrap(t)
    return t


def aurellion_ordinal_term(alpha: Ordinal, params: FamilyParams = ORDINAL_DEFAULT) -> Term:
    """Unfold ``A_alpha`` through its finite successor tail.

    A limit ordinal reached on the way stays symbolic as ``AurOrd``.  That node
    always denotes the default family, so non-default params cannot be combined
    with an infinite index.
    """
    c = classify(alpha)
    wraps = 0
    while c.kind is Kind.SUCCESSOR:
        wraps += 1
        alpha = c.pred
        c = classify(alpha)
    if c.kind is Kind.ZERO:
        t = params.seed()
    elif params == ORDINAL_DEFAULT:
        t = AurOrd(alpha)
    else:
        raise ValueError("limit-indexed terms exist only for the default family")
    for _ in range(wraps):
        t = params.wrap(t)
    return t


def expand_limit(alpha: Ordinal, n: int, params: FamilyParams = ORDINAL_DEFAULT) -> Term:
    """The ``n``-th approximant ``A_{alpha[n]}`` of a limit-indexed term.

    Only members of the sequence are produced; its supremum is not a natural
    number and is never computed.
    """
    if classify(alpha).kind is not Kind.LIMIT:
        raise ValueError(f"{alpha} is not a limit ordinal")
    return aurellion_ordinal_term(fundamental(alpha, n), params)


def fgh_term(alpha: Ordinal, n: int) -> Fgh:
    return Fgh(alpha, Lit(n))
