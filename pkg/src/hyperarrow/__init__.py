"""Symbolic Knuth-arrow, fast-growing hierarchy and Aurellion expressions.

Terms are built, parsed and printed here, evaluated exactly under budgets by
:mod:`hyperarrow.engine`, and compared with checkable certificates by
:mod:`hyperarrow.dominance`.
"""
from .dominance import Certificate, Rel, Verdict, check_certificate, compare, lemma1_certificate
from .engine import Budget, Exact, Overflow, Reason, evaluate, step, trace
from .hierarchies import FamilyParams, aurellion_ordinal_term, aurellion_term, expand_limit, fgh_term
from .notation import ParseError, parse_ordinal, parse_term, print_ordinal, print_term
from .ordinals import OMEGA, ZERO, Ordinal, classify, fundamental, ord_add, ord_compare
from .terms import Arrow, Aur, AurOrd, Fgh, Iter, Lit, mk_arrow, measure, validate

__all__ = [
    "Arrow", "Aur", "AurOrd", "Budget", "Certificate", "Exact", "FamilyParams", "Fgh", "Iter",
    "Lit", "OMEGA", "Ordinal", "Overflow", "ParseError", "Reason", "Rel", "Verdict", "ZERO",
    "aurellion_ordinal_term", "aurellion_term", "check_certificate", "classify", "compare",
    "evaluate", "expand_limit", "fgh_term", "fundamental", "lemma1_certificate", "measure",
    "mk_arrow", "ord_add", "ord_compare", "parse_ordinal", "parse_term", "print_ordinal",
    "print_term", "step", "trace", "validate",
]
