"""Random terms and ordinals, both as hypothesis strategies and seeded generators."""
import random

from hypothesis import strategies as st

from hyperarrow.ordinals import Ordinal
from hyperarrow.terms import Arrow, Aur, AurOrd, Fgh, Iter, Lit

def random_ordinal(rng: random.Random, depth: int = 3) -> Ordinal:
    if depth == 0 or rng.random() < 0.25:
        n = rng.randrange(4)
        return Ordinal(((Ordinal(), n),)) if n else Ordinal()
    exps = {random_ordinal(rng, depth - 1) for _ in range(rng.randrange(1, 4))}
    exps = sorted(exps, reverse=True)
    return Ordinal(tuple((e, rng.randrange(1, 4)) for e in exps))

def random_limit(rng: random.Random, depth: int = 3) -> Ordinal:
    while True:
        a = random_ordinal(rng, depth)
        if a.terms and not a.terms[-1][0].is_zero():
            return a

def random_term(rng: random.Random, depth: int = 4):
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        return Lit(rng.choice([0, 1, 2, 3, 10, rng.randrange(10**rng.randrange(1, 30))]))
    if roll < 0.7:
        return Arrow(random_term(rng, depth - 1), random_term(rng, depth - 1), random_term(rng, depth - 1))
    if roll < 0.8:
        return Fgh(random_ordinal(rng), random_term(rng, depth - 1))
    if roll < 0.87:
        return Iter(random_ordinal(rng), rng.randrange(0, 5), random_term(rng, depth - 1))
    if roll < 0.94:
        return Aur(rng.randrange(1, 20))
    return AurOrd(random_ordinal(rng))

@st.composite
def _cnf(draw, exps):
    es = sorted(set(draw(st.lists(exps, min_size=0, max_size=3))), reverse=True)
    return Ordinal(tuple((e, draw(st.integers(1, 5))) for e in es))

ordinals = st.recursive(
    st.just(Ordinal()),
    lambda inner: _cnf(inner),
    max_leaves=8,
)

limits = ordinals.filter(lambda a: bool(a.terms) and not a.terms[-1][0].is_zero())

naturals = st.integers(0, 2**70)

terms = st.recursive(
    st.builds(Lit, naturals),
    lambda t: st.one_of(
        st.builds(Arrow, t, t, t),
        st.builds(Fgh, ordinals, t),
        st.builds(Iter, ordinals, st.integers(0, 6), t),
        st.builds(Aur, st.integers(1, 50)),
        st.builds(AurOrd, ordinals),
    ),
    max_leaves=12,
)

# only arrow towers over small literals: these are the ones the engine can finish
small_arrows = st.recursive(
    st.builds(Lit, st.integers(0, 4)),
    lambda t: st.builds(Arrow, t, t.filter(lambda k: k != Lit(0)), t),
    max_leaves=4,
)
