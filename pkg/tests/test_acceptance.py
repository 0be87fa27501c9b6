"""Acceptance gate: one test per criterion, each timed against its cap."""
import io
import itertools
import random
import time

import oracles
from conftest import record
from gen import random_limit, random_term
from hyperarrow.cli import main
from hyperarrow.dominance import Rel, check_certificate, compare, lemma1_certificate
from hyperarrow.engine import Budget, Exact, evaluate
from hyperarrow.notation import parse_term, print_term
from hyperarrow.ordinals import OMEGA, Ordinal, fundamental, omega_power
from hyperarrow.terms import Aur, Fgh, Lit, mk_arrow

CORPUS = [(a, k, b) for a in (2, 3, 4) for k in (1, 2, 3) for b in range(5)]
CAP_BITS = 2**20


def gate(name, cap_seconds, body):
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < cap_seconds
    detail = f"({elapsed:.2f}s / {cap_seconds}s)"
    if failures:
        detail += f" {len(failures)} failures, first: {failures[0]}"
    record(name, ok, detail)
    assert not failures, failures[:5]
    assert elapsed < cap_seconds, f"{elapsed:.2f}s over the {cap_seconds}s cap"


def test_arrow_recursion_oracle():
    def body():
        bad, fitting = [], 0
        for a, k, b in CORPUS:
            try:
                expected = oracles.arrow(a, k, b, CAP_BITS)
            except oracles.TooBig:
                continue
            fitting += 1
            out = evaluate(mk_arrow(a, k, b))
            if not (isinstance(out, Exact) and out.value == expected):
                bad.append((a, k, b))
        if evaluate(mk_arrow(2, 2, 4)).value != 65536:
            bad.append("2^^4")
        if evaluate(mk_arrow(3, 2, 3)).value != 7625597484987:
            bad.append("3^^3")
        if fitting < 30:
            bad.append(f"only {fitting} corpus cases fit")
        return bad
    gate("arrow-recursion oracle", 10, body)


def test_fgh_suite():
    def body():
        bad = []
        zero, one = Ordinal.of(0), Ordinal.of(1)
        for n in range(1001):
            if evaluate(Fgh(zero, Lit(n))).value != n + 1:
                bad.append(("f0", n))
            if evaluate(Fgh(one, Lit(n))).value != 2 * n + 1:
                bad.append(("f1", n))
        for n in range(11):
            expected = oracles.f2_closed(n)
            if n <= 6 and oracles.f(2, n) != expected:
                bad.append(("f2 oracle", n))
            if evaluate(Fgh(Ordinal.of(2), Lit(n))).value != expected:
                bad.append(("f2", n))
        if oracles.f(3, 1) != 2047 or evaluate(Fgh(Ordinal.of(3), Lit(1))).value != 2047:
            bad.append("f3(1)")
        return bad
    gate("FGH suite", 5, body)


def test_lemma_certificates():
    def body():
        bad = []
        for n in range(1, 65):
            c = lemma1_certificate(n)
            want = Rel.EQ if n == 1 else Rel.GT
            if not check_certificate(c).valid or c.relation is not want:
                bad.append(n)
            if c.lhs != Aur(n) or c.rhs != mk_arrow(10, n + 2, 10):
                bad.append(("conclusion", n))
        return bad
    gate("lemma certificates n=1..64", 5, body)


def test_dominance_soundness():
    truth_budget = Budget(2000, CAP_BITS)
    terms = [mk_arrow(a, k, b) for a, k, b in CORPUS]

    def body():
        bad = []
        truth = {}
        for (a, k, b), t in zip(CORPUS, terms):
            out = evaluate(t, truth_budget)
            if isinstance(out, Exact):
                truth[t] = out.value
        # the ground truth must itself agree with the naive recursion
        for (a, k, b), t in zip(CORPUS, terms):
            try:
                expected = oracles.arrow(a, k, b, CAP_BITS)
            except oracles.TooBig:
                expected = None
            if truth.get(t) != expected:
                bad.append(("truth", a, k, b))
        decided = 0
        for budget in (truth_budget, Budget(2000, 16), Budget(50, 8)):
            for x, y in itertools.product(terms, repeat=2):
                v = compare(x, y, budget)
                if v.relation is Rel.UNKNOWN:
                    continue
                decided += 1
                if not check_certificate(v.certificate).valid:
                    bad.append(("certificate", print_term(x), print_term(y)))
                if x in truth and y in truth:
                    c = (truth[x] > truth[y]) - (truth[x] < truth[y])
                    if not v.relation.holds(c):
                        bad.append((print_term(x), v.relation.value, print_term(y)))
        pair = compare(mk_arrow(2, 9, 2), mk_arrow(2, 3, 2))
        if pair.relation is not Rel.EQ:
            bad.append(("2^[9]2 vs 2^[3]2", pair.relation.value))
        if decided == 0:
            bad.append("nothing decided")
        return bad
    gate("dominance soundness", 60, body)


def test_ordinal_suite():
    def body():
        bad = []
        for n in range(33):
            if fundamental(OMEGA, n) != Ordinal.of(n):
                bad.append(("w", n))
        if fundamental(omega_power(OMEGA), 2) != omega_power(Ordinal.of(2)):
            bad.append("w^w [2]")
        rng = random.Random(2024)
        for _ in range(200):
            lam = random_limit(rng)
            prev = None
            for n in range(33):
                x = fundamental(lam, n)
                if not x < lam or (prev is not None and not prev < x):
                    bad.append((str(lam), n))
                    break
                prev = x
        return bad
    gate("ordinal fundamental sequences", 5, body)


def test_round_trip():
    def body():
        rng = random.Random(10_000)
        bad = []
        for _ in range(10_000):
            t = random_term(rng)
            if parse_term(print_term(t)) != t:
                bad.append(print_term(t))
        return bad
    gate("parse/print round trip x10^4", 30, body)


FUZZ_PIECES = ["2", "10", "0", "^", "^^", "↑", "[", "]", "(", ")", "f", "A", "AO", "w", "ω", "+", "*",
               " ", "-", "99999999999999999999", "\x00", "é", "\ud800", "^[", "f[w](", "A[3]"]
COMMANDS = [["parse"], ["eval"], ["eval", "--full"], ["trace"], ["compare"], ["cert", "check"],
            ["cert", "lemma1"], ["hier", "aur"], ["hier", "aurord"], ["hier", "expand"], ["hier", "fgh"]]


def fuzz_text(rng):
    if rng.random() < 0.4:
        return print_term(random_term(rng, 3))
    return "".join(rng.choice(FUZZ_PIECES) for _ in range(rng.randrange(0, 12)))


def fuzz_argv(rng):
    argv = list(rng.choice(COMMANDS))
    nargs = {"compare": 2, "expand": 2, "fgh": 2}.get(argv[-1], 1)
    for _ in range(nargs):
        argv.append(str(rng.randrange(-3, 40)) if rng.random() < 0.3 else fuzz_text(rng))
    if rng.random() < 0.2:
        argv.insert(rng.randrange(len(argv) + 1), rng.choice(["--json", "--bogus", "-", "--steps=3"]))
    argv += ["--max-steps", "40", "--max-bits", "128"]
    if rng.random() < 0.05:
        argv = [fuzz_text(rng) for _ in range(rng.randrange(4))]
    return argv


def test_cli_fuzz():
    def body():
        rng = random.Random(4242)
        bad = []
        for _ in range(10_000):
            argv = fuzz_argv(rng)
            stdin = io.StringIO(fuzz_text(rng))
            try:
                code = main(argv, stdin, io.StringIO(), io.StringIO())
            except BaseException as e:  # noqa: BLE001 - any escape is a crash
                bad.append((argv, repr(e)))
                continue
            if code not in (0, 1, 2, 3, 4):
                bad.append((argv, code))
        return bad
    gate("CLI fuzz x10^4", 60, body)
