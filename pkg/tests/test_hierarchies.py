import pytest
from hypothesis import given, strategies as st

import oracles
from gen import limits
from hyperarrow.engine import Exact, evaluate
from hyperarrow.hierarchies import (
    DEFAULT, ORDINAL_DEFAULT, FamilyParams, aurellion_ordinal_term, aurellion_term, expand_limit, fgh_term,
)
from hyperarrow.notation import parse_ordinal, print_term
from hyperarrow.ordinals import OMEGA, Ordinal, fundamental, ord_add
from hyperarrow.dominance import Rel, compare
from hyperarrow.engine import Budget, Rewritten, step
from hyperarrow.terms import Aur, AurOrd, Lit, mk_arrow


def test_first_members():
    assert aurellion_term(1) == mk_arrow(10, 3, 10)
    assert aurellion_term(2) == mk_arrow(10, mk_arrow(10, 3, 10), 10)
    assert print_term(aurellion_term(3)) == "10^[10^[10^^^10]10]10"


def test_unfolded_depth_grows_by_one():
    for n in range(1, 8):
        t = aurellion_term(n)
        depth = 0
        while not isinstance(t, Lit):
            t, depth = t.arrows, depth + 1
        assert depth == n


def test_family_params_validation():
    for bad in [(1, 3, 10), (10, 0, 10), (10, 3, 1)]:
        with pytest.raises(ValueError):
            FamilyParams(*bad)
    with pytest.raises(ValueError):
        aurellion_term(0)


def test_small_family_evaluates():
    p = FamilyParams(base=2, seed_arrows=1, seed_height=2)
    # A1 = 2^2 = 4, A2 = 2^[4]2 = 4
    for n in (1, 2, 3):
        out = evaluate(aurellion_term(n, p))
        assert isinstance(out, Exact) and out.value == 4
    p = FamilyParams(base=3, seed_arrows=1, seed_height=2)
    assert evaluate(aurellion_term(1, p)).value == 9
    assert evaluate(aurellion_term(2, FamilyParams(2, 2, 3))).value == oracles.arrow(2, 16, 2)


def test_ordinal_family():
    assert aurellion_ordinal_term(Ordinal.of(0)) == mk_arrow(10, 2, 10)
    assert aurellion_ordinal_term(Ordinal.of(2)) == mk_arrow(10, mk_arrow(10, mk_arrow(10, 2, 10), 10), 10)
    assert aurellion_ordinal_term(OMEGA) == AurOrd(OMEGA)
    assert aurellion_ordinal_term(ord_add(OMEGA, Ordinal.of(1))) == mk_arrow(10, AurOrd(OMEGA), 10)
    with pytest.raises(ValueError):
        aurellion_ordinal_term(OMEGA, DEFAULT)
    assert ORDINAL_DEFAULT.seed_arrows == 2


def test_expand_limit():
    assert expand_limit(OMEGA, 3) == aurellion_ordinal_term(Ordinal.of(3))
    assert expand_limit(parse_ordinal("w*2"), 1) == aurellion_ordinal_term(parse_ordinal("w+1"))
    with pytest.raises(ValueError):
        expand_limit(Ordinal.of(4), 2)


@given(limits, st.integers(0, 5))
def test_expand_limit_follows_fundamental_sequence(lam, n):
    assert expand_limit(lam, n) == aurellion_ordinal_term(fundamental(lam, n))


@pytest.mark.parametrize("level, n", [(0, 7), (1, 9), (2, 4), (3, 1)])
def test_fgh_term_matches_iteration(level, n):
    out = evaluate(fgh_term(Ordinal.of(level), n))
    assert out.value == oracles.f(level, n)


def test_fgh_at_omega_diagonalises():
    assert evaluate(fgh_term(OMEGA, 2)).value == oracles.f(2, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_each_member_is_the_next_arrow_count(n):
    assert aurellion_term(n + 1).arrows == aurellion_term(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_rewriting_unfolds_to_the_same_term(n):
    t = Aur(n)
    for _ in range(n):
        r = step(t)
        assert isinstance(r, Rewritten) and r.rule in ("A1", "A+")
        t = r.term
        # the next redex is the innermost Aur, which sits in arrow-count position
    assert t == aurellion_term(n)


def test_approximants_are_monotone():
    params = FamilyParams(base=3, seed_arrows=1, seed_height=2)
    budget = Budget(2000, 2**12)
    decided = 0
    for m in range(4):
        for n in range(m + 1, 5):
            v = compare(expand_limit(OMEGA, m, params), expand_limit(OMEGA, n, params), budget)
            assert v.relation in (Rel.LT, Rel.UNKNOWN)
            decided += v.relation is Rel.LT
    assert decided > 0
