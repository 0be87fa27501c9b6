"""Text syntax for terms and ordinals.

Term grammar (ASCII; ``↑`` is accepted wherever ``^`` is)::

    expr     := operand (arrow operand)*      all arrows in a chain must agree
    arrow    := '^'{k}  |  '^' '[' expr ']'
    operand  := NUM | '(' expr ')'
              | 'f' '[' ord ']' ('^' NUM)? '(' expr ')'
              | 'A' '[' NUM ']' | 'AO' '[' ord ']'

    ord      := prod ('+' prod)*
    prod     := power ('*' NUM)*
    power    := NUM | '(' ord ')' | 'w' ('^' power)?

Arrow chains associate to the right.  ``f[a]^c(x)`` is the iterate node.
"""
from __future__ import annotations

from typing import FrozenSet, Iterable, List, NamedTuple, Optional

from ._decimal import from_decimal, to_decimal
from .ordinals import OMEGA, Ordinal, ord_add, ord_mul_nat, omega_power, to_text
from .terms import Arrow, Aur, AurOrd, Fgh, Iter, Lit, Term

__all__ = ["ParseError", "parse_term", "parse_ordinal", "print_term", "print_ordinal"]

MAX_CARETS = 5
_CARETS = "^↑"


class ParseError(ValueError):
    """Syntax error with the byte offset where it was detected."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected: FrozenSet[str] = frozenset(expected)
        detail = f"{message} at byte {offset}"
        if self.expected:
            detail += " (expected " + " or ".join(sorted(self.expected)) + ")"
        super().__init__(detail)
        self.message = message


class Token(NamedTuple):
    kind: str  # num, ident, caret, or the punctuation character itself; eof
    text: str
    offset: int  # byte offset into the UTF-8 source


def _tokenize(src: str) -> List[Token]:
    tokens = []
    i, n = 0, len(src)
    byte = 0

    def width(s):
        return len(s.encode("utf-8", "surrogatepass"))

    while i < n:
        ch = src[i]
        start_byte = byte
        if ch.isspace():
            j = i + 1
        elif "0" <= ch <= "9":
            j = i
            while j < n and "0" <= src[j] <= "9":
                j += 1
            tokens.append(Token("num", src[i:j], start_byte))
        elif ch.isascii() and ch.isalpha() or ch == "ω":
            j = i
            while j < n and (src[j].isascii() and src[j].isalpha() or src[j] == "ω"):
                j += 1
            tokens.append(Token("ident", src[i:j].replace("ω", "w"), start_byte))
        elif ch in _CARETS:
            j = i
            while j < n and src[j] in _CARETS:
                j += 1
            tokens.append(Token("caret", "^" * (j - i), start_byte))
        elif ch in "[]()+*":
            j = i + 1
            tokens.append(Token(ch, ch, start_byte))
        else:
            raise ParseError(f"unexpected character {ch!r}", start_byte)
        byte += width(src[i:j])
        i = j
    tokens.append(Token("eof", "", byte))
    return tokens


_OPERAND_START = frozenset({"number", "'('", "'f'", "'A'", "'AO'"})


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, message, expected=()):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.offset, expected)

    def expect(self, kind, label=None):
        if self.tok.kind != kind:
            self.fail("syntax error", {label or repr(kind)})
        return self.advance()

    def expect_ident(self, name):
        if self.tok.kind != "ident" or self.tok.text != name:
            self.fail("syntax error", {repr(name)})
        return self.advance()

    def end(self):
        if self.tok.kind != "eof":
            expected = {"end of input"}
            self.fail("trailing input", expected)

    # -- terms ------------------------------------------------------------

    def expr(self) -> Term:
        operands = [self.operand()]
        ops = []
        while self.tok.kind == "caret":
            at = self.tok.offset
            op = self.arrow()
            if ops and op != ops[0]:
                raise ParseError(
                    "mixed arrow counts require parentheses", at
                )
            ops.append(op)
            operands.append(self.operand())
        result = operands.pop()
        while operands:
            result = Arrow(operands.pop(), ops.pop(), result)
        return result

    def arrow(self) -> Term:
        carets = self.advance()
        k = len(carets.text)
        if k == 1 and self.tok.kind == "[":
            self.advance()
            count = self.expr()
            self.expect("]", "']'")
            return count
        return Lit(k)

    def operand(self) -> Term:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Lit(from_decimal(t.text))
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        if t.kind == "ident":
            if t.text == "f":
                self.advance()
                self.expect("[", "'['")
                index = self.ordinal()
                self.expect("]", "']'")
                count = None
                if self.tok.kind == "caret":
                    if len(self.tok.text) != 1:
                        self.fail("iteration takes a single caret", {"'^'"})
                    self.advance()
                    count = from_decimal(self.expect("num", "number").text)
                self.expect("(", "'('")
                arg = self.expr()
                self.expect(")", "')'")
                return Fgh(index, arg) if count is None else Iter(index, count, arg)
            if t.text == "A":
                self.advance()
                self.expect("[", "'['")
                n = from_decimal(self.expect("num", "number").text)
                self.expect("]", "']'")
                return Aur(n)
            if t.text == "AO":
                self.advance()
                self.expect("[", "'['")
                alpha = self.ordinal()
                self.expect("]", "']'")
                return AurOrd(alpha)
        self.fail("syntax error", _OPERAND_START)

    # -- ordinals ---------------------------------------------------------

    def ordinal(self) -> Ordinal:
        acc = self.ord_product()
        while self.tok.kind == "+":
            self.advance()
            acc = ord_add(acc, self.ord_product())
        return acc

    def ord_product(self) -> Ordinal:
        acc = self.ord_power()
        while self.tok.kind == "*":
            self.advance()
            acc = ord_mul_nat(acc, from_decimal(self.expect("num", "number").text))
        return acc

    def ord_power(self) -> Ordinal:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Ordinal.of(from_decimal(t.text))
        if t.kind == "(":
            self.advance()
            inner = self.ordinal()
            self.expect(")", "')'")
            return inner
        if t.kind == "ident" and t.text == "w":
            self.advance()
            if self.tok.kind == "caret":
                if len(self.tok.text) != 1:
                    self.fail("ordinal exponent takes a single caret", {"'^'"})
                self.advance()
                return omega_power(self.ord_power())
            return OMEGA
        self.fail("syntax error", {"number", "'w'", "'('"})


def _run(src: str, entry):
    p = _Parser(src)
    try:
        result = entry(p)
    except RecursionError:
        raise ParseError("expression nested too deeply", p.tok.offset) from None
    p.end()
    return result


def parse_term(src: str) -> Term:
    return _run(src, _Parser.expr)


def parse_ordinal(src: str) -> Ordinal:
    return _run(src, _Parser.ordinal)


def print_ordinal(a: Ordinal) -> str:
    return to_text(a)


def _arrow_op(k: Term) -> Optional[str]:
    if isinstance(k, Lit) and 1 <= k.value <= MAX_CARETS:
        return "^" * k.value
    return None


def print_term(t: Term) -> str:
    """Canonical text for ``t``; reparses to a structurally equal term."""
    out = []
    # work items are either str (emit) or Term (expand); popped LIFO
    work = [t]
    while work:
        item = work.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        if isinstance(item, Lit):
            out.append(to_decimal(item.value))
        elif isinstance(item, Arrow):
            seq: list = []
            if isinstance(item.base, Arrow):
                seq += ["(", item.base, ")"]
            else:
                seq.append(item.base)
            op = _arrow_op(item.arrows)
            seq += [op] if op else ["^[", item.arrows, "]"]
            h = item.height
            if isinstance(h, Arrow) and h.arrows != item.arrows:
                seq += ["(", h, ")"]
            else:
                seq.append(h)
            work.extend(reversed(seq))
        elif isinstance(item, Fgh):
            work.extend([")", item.arg, f"f[{to_text(item.index)}]("])
        elif isinstance(item, Iter):
            work.extend([")", item.arg, f"f[{to_text(item.index)}]^{to_decimal(item.count)}("])
        elif isinstance(item, Aur):
            out.append(f"A[{to_decimal(item.n)}]")
        elif isinstance(item, AurOrd):
            out.append(f"AO[{to_text(item.alpha)}]")
        else:
            raise TypeError(f"not a term: {item!r}")
    return "".join(out)
