import json

import pytest
from hypothesis import given

from gen import terms
from hyperarrow.ordinals import OMEGA
from hyperarrow.schemas import TERM
from hyperarrow.terms import (
    Arrow, Aur, AurOrd, Fgh, Iter, Lit, children, from_json, measure, mk_arrow, to_json, validate,
)

from schema_util import validator

TERM_VALIDATOR = validator(TERM)


def test_literals_are_naturals():
    for bad in (-1, True, 1.5, "3"):
        with pytest.raises(ValueError):
            Lit(bad)


def test_mk_arrow_wraps_ints():
    assert mk_arrow(2, 3, Lit(4)) == Arrow(Lit(2), Lit(3), Lit(4))


def test_validate_reports_paths():
    t = Arrow(Lit(2), Lit(0), Arrow(Lit(1), Lit(1), Aur(0)))
    problems = validate(t)
    assert [v.path for v in problems] == [("arrows",), ("height", "height", "n")]
    assert validate(mk_arrow(2, 2, 3)) == []


def test_measure():
    assert measure(Lit(4)) == (1, 1)
    assert measure(mk_arrow(2, 2, mk_arrow(2, 2, 2))) == (3, 7)


def test_deep_terms_do_not_recurse():
    t = Lit(2)
    for _ in range(50_000):
        t = Arrow(Lit(2), Lit(1), t)
    assert measure(t) == (50_001, 150_001)
    assert validate(t) == []
    assert to_json(t)["kind"] == "arrow"


def test_json_shape_uses_decimal_strings():
    data = to_json(Iter(OMEGA, 3, Fgh(OMEGA, Lit(10**30))))
    assert data["count"] == "3"
    assert data["arg"]["arg"] == {"kind": "lit", "value": "1" + "0" * 30}
    assert to_json(Aur(4)) == {"kind": "aur", "index": "4"}


@pytest.mark.parametrize("bad", [
    {"kind": "lit", "value": 3},
    {"kind": "lit", "value": "-3"},
    {"kind": "nope"},
    {"kind": "arrow", "base": {"kind": "lit", "value": "1"}},
    [],
])
def test_from_json_rejects_malformed(bad):
    with pytest.raises(ValueError):
        from_json(bad)


@given(terms)
def test_json_round_trip_and_schema(t):
    data = to_json(t)
    TERM_VALIDATOR.validate(data)
    assert from_json(json.loads(json.dumps(data))) == t


def test_shared_nodes_serialise():
    two = Lit(2)
    assert to_json(Arrow(two, two, two))["height"] == {"kind": "lit", "value": "2"}


def test_aurord_holds_ordinal():
    assert to_json(AurOrd(OMEGA))["index"] == [[[[[], "1"]], "1"]]


def _subterms(t):
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(c for _, c in children(node))


@given(terms)
def test_valid_terms_have_valid_subterms(t):
    if not validate(t):
        assert all(not validate(s) for s in _subterms(t))


@given(terms)
def test_strict_subterms_are_smaller(t):
    _, size = measure(t)
    for _, child in children(t):
        assert measure(child)[1] < size


@given(terms, terms)
def test_structural_equality_is_an_equivalence(a, b):
    assert a == a
    assert (a == b) == (b == a)
    if a == b:
        assert hash(a) == hash(b)
