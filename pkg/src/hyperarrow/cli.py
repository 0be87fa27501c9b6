"""Command-line front end.

Exit codes: 0 success or decided verdict, 1 input error, 2 evaluation
overflow, 3 unknown verdict, 4 invalid certificate.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from . import _jsonout
from ._decimal import digit_count, to_decimal
from .dominance import (
    Rel,
    cert_from_json,
    cert_to_json,
    check_certificate,
    compare,
    lemma1_certificate,
)
from .engine import Budget, Exact, evaluate, trace
from .hierarchies import FamilyParams, aurellion_ordinal_term, aurellion_term, fgh_term
from .notation import ParseError, parse_ordinal, parse_term, print_term
from .ordinals import Kind, classify, fundamental, to_text
from .terms import Term, measure, to_json, validate

EXIT_OK, EXIT_INPUT, EXIT_OVERFLOW, EXIT_UNKNOWN, EXIT_BAD_CERT = range(5)

ENV_MAX_STEPS = "HYPERARROW_MAX_STEPS"
ENV_MAX_BITS = "HYPERARROW_MAX_BITS"
ELIDE_DIGITS = 10**4
ELIDE_KEEP = 20


class InputError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    max_steps: int = Budget.max_steps
    max_bits: int = Budget.max_bits
    output_mode: str = "text"

    @property
    def budget(self) -> Budget:
        return Budget(self.max_steps, self.max_bits)

    @property
    def json(self) -> bool:
        return self.output_mode == "json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-steps", type=_positive, default=None, help="rewrite-step budget")
    common.add_argument("--max-bits", type=_positive, default=None, help="bit-length cap on naturals")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="hyperarrow", description="Symbolic large-number expressions: parse, evaluate, compare.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sp = sub.add_parser("parse", parents=[common], help="print the canonical form")
    sp.add_argument("expr")

    sp = sub.add_parser("eval", parents=[common], help="evaluate exactly within the budget")
    sp.add_argument("expr")
    sp.add_argument("--full", action="store_true", help="never elide digits")

    sp = sub.add_parser("trace", parents=[common], help="show rewrite steps")
    sp.add_argument("expr")
    sp.add_argument("--steps", type=_natural, default=100)

    sp = sub.add_parser("compare", parents=[common], help="certified comparison")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.add_argument("--cert", action="store_true", help="also print the certificate")

    cp = sub.add_parser("cert", help="certificate workflows")
    csub = cp.add_subparsers(dest="cert_command", parser_class=_Parser)
    csub.required = True
    sp = csub.add_parser("lemma1", parents=[common], help="emit the A[n] >= 10^[n+2]10 certificate")
    sp.add_argument("n", type=int)
    sp = csub.add_parser("check", parents=[common], help="validate a certificate file ('-' for stdin)")
    sp.add_argument("file")

    hp = sub.add_parser("hier", help="build hierarchy terms")
    hsub = hp.add_subparsers(dest="hier_command", parser_class=_Parser)
    hsub.required = True
    sp = hsub.add_parser("aur", parents=[common], help="unfolded A[n]")
    sp.add_argument("n", type=int)
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--seed-arrows", type=int, default=3)
    sp.add_argument("--seed-height", type=int, default=10)
    sp = hsub.add_parser("aurord", parents=[common], help="ordinal-indexed A[alpha]")
    sp.add_argument("alpha")
    sp = hsub.add_parser("expand", parents=[common], help="n-th approximant of A[lambda]")
    sp.add_argument("alpha")
    sp.add_argument("n", type=_natural)
    sp = hsub.add_parser("fgh", parents=[common], help="f[alpha](n)")
    sp.add_argument("alpha")
    sp.add_argument("n", type=_natural)
    return p


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as e:
        raise InputError(f"{name}: {e}") from None


def _config(args) -> CliConfig:
    steps = args.max_steps or _env_int(ENV_MAX_STEPS) or Budget.max_steps
    bits = args.max_bits or _env_int(ENV_MAX_BITS) or Budget.max_bits
    return CliConfig(steps, bits, "json" if args.json else "text")


class _Io:
    def __init__(self, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.stdin, self.stdout, self.stderr = stdin, stdout, stderr

    def out(self, text: str = ""):
        self.stdout.write(text + "\n")

    def err(self, text: str):
        self.stderr.write(text + "\n")

    def read(self, arg: str) -> str:
        return self.stdin.read() if arg == "-" else arg


def _read_term(io: _Io, arg: str) -> Term:
    src = io.read(arg)
    try:
        t = parse_term(src)
    except ParseError as e:
        io.err(f"error: {e}")
        line = src.replace("\n", " ")
        if len(line) <= 200:
            col = len(src.encode("utf-8", "surrogatepass")[: e.offset].decode("utf-8", "replace"))
            io.err(f"  {line}\n  {' ' * col}^")
        raise InputError(None) from None
    problems = validate(t)
    if problems:
        for v in problems:
            io.err(f"error: invalid term: {v}")
        raise InputError(None)
    return t


def _read_ordinal(io: _Io, arg: str):
    try:
        return parse_ordinal(io.read(arg))
    except ParseError as e:
        io.err(f"error: {e}")
        raise InputError(None) from None


def _emit(io: _Io, cfg: CliConfig, payload: dict, text: str):
    io.out(_jsonout.dumps(payload) if cfg.json else text)


# -- commands -------------------------------------------------------------

def cmd_parse(io, cfg, args) -> int:
    t = _read_term(io, args.expr)
    text = print_term(t)
    depth, nodes = measure(t)
    _emit(io, cfg, {"text": text, "term": to_json(t), "depth": depth, "node_count": nodes}, text)
    return EXIT_OK


def _render_value(v: int, full: bool) -> dict:
    d = digit_count(v)
    if full or d < ELIDE_DIGITS:
        return {"digits": d, "value": to_decimal(v)}
    lead = to_decimal(v // 10 ** (d - ELIDE_KEEP))
    trail = to_decimal(v % 10**ELIDE_KEEP).zfill(ELIDE_KEEP)
    return {"digits": d, "leading": lead, "trailing": trail}


def cmd_eval(io, cfg, args) -> int:
    t = _read_term(io, args.expr)
    try:
        out = evaluate(t, cfg.budget)
    except ValueError as e:
        raise InputError(str(e)) from None
    if isinstance(out, Exact):
        r = _render_value(out.value, args.full)
        text = r["value"] if "value" in r else f"{r['leading']}...{r['trailing']} ({r['digits']} digits)"
        _emit(io, cfg, {"result": "exact", "steps_used": out.steps_used, **r}, text)
        return EXIT_OK
    residual = print_term(out.residual)
    _emit(
        io, cfg,
        {"result": "overflow", "reason": out.reason.value, "steps_used": out.steps_used,
         "residual": to_json(out.residual)},
        f"overflow: {out.reason.value} after {out.steps_used} steps\nresidual: {residual}",
    )
    return EXIT_OVERFLOW


def cmd_trace(io, cfg, args) -> int:
    t = _read_term(io, args.expr)
    steps = trace(t, args.steps, cfg.budget)
    if cfg.json:
        io.out(_jsonout.dumps({"steps": [
            {"index": i, "rule": rule, "term": to_json(u)} for i, (rule, u) in enumerate(steps, 1)
        ]}))
    else:
        for i, (rule, u) in enumerate(steps, 1):
            io.out(f"#{i} [{rule}] {print_term(u)}")
    return EXIT_OK


def cmd_compare(io, cfg, args) -> int:
    lhs = _read_term(io, args.lhs)
    rhs = _read_term(io, args.rhs)
    v = compare(lhs, rhs, cfg.budget)
    cert = cert_to_json(v.certificate) if v.certificate else None
    if cfg.json:
        io.out(_jsonout.dumps({"relation": v.relation.value, "certificate": cert}))
    else:
        io.out(v.relation.value)
        if args.cert and cert:
            io.out(_jsonout.dumps(cert))
    return EXIT_UNKNOWN if v.relation is Rel.UNKNOWN else EXIT_OK


def cmd_cert(io, cfg, args) -> int:
    if args.cert_command == "lemma1":
        if args.n < 1:
            io.err("error: the lemma starts at n = 1")
            return EXIT_INPUT
        # checking link k unfolds k nodes
        if args.n * (args.n + 1) // 2 > cfg.max_steps:
            io.err("error: certificate would exceed the step budget")
            return EXIT_INPUT
        io.out(_jsonout.dumps(cert_to_json(lemma1_certificate(args.n))))
        return EXIT_OK
    try:
        if args.file == "-":
            raw = io.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                raw = fh.read()
        cert = cert_from_json(json.loads(raw))
    except (OSError, ValueError, RecursionError) as e:
        io.err(f"error: cannot read certificate: {e}")
        return EXIT_INPUT
    report = check_certificate(cert, cfg.budget)
    text = "valid" if report.valid else f"invalid at step {report.failed_step}: {report.reason}"
    _emit(io, cfg, {"valid": report.valid, "failed_step": report.failed_step, "reason": report.reason}, text)
    return EXIT_OK if report.valid else EXIT_BAD_CERT


def _finite_tail(alpha) -> int:
    if alpha.terms and alpha.terms[-1][0].is_zero():
        return alpha.terms[-1][1]
    return 0


def cmd_hier(io, cfg, args) -> int:
    which = args.hier_command
    if which == "aur":
        try:
            params = FamilyParams(args.base, args.seed_arrows, args.seed_height)
        except ValueError as e:
            io.err(f"error: {e}")
            return EXIT_INPUT
        if not 1 <= args.n <= cfg.max_steps:
            io.err(f"error: n must be between 1 and the step budget ({cfg.max_steps})")
            return EXIT_INPUT
        t = aurellion_term(args.n, params)
    elif which == "fgh":
        t = fgh_term(_read_ordinal(io, args.alpha), args.n)
    else:
        alpha = _read_ordinal(io, args.alpha)
        if which == "expand":
            if classify(alpha).kind is not Kind.LIMIT:
                io.err(f"error: {to_text(alpha)} is not a limit ordinal")
                return EXIT_INPUT
            alpha = fundamental(alpha, args.n)
        if _finite_tail(alpha) > cfg.max_steps:
            io.err("error: unfolding would exceed the step budget")
            return EXIT_INPUT
        t = aurellion_ordinal_term(alpha)
    text = print_term(t)
    _emit(io, cfg, {"text": text, "term": to_json(t)}, text)
    return EXIT_OK


COMMANDS = {
    "parse": cmd_parse,
    "eval": cmd_eval,
    "trace": cmd_trace,
    "compare": cmd_compare,
    "cert": cmd_cert,
    "hier": cmd_hier,
}


def main(argv: Optional[List[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    io = _Io(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        cfg = _config(args)
        return COMMANDS[args.command](io, cfg, args)
    except InputError as e:
        if e.args and e.args[0]:
            io.err(f"error: {e.args[0]}")
        return EXIT_INPUT
    except SystemExit as e:
        # --help and friends
        return EXIT_OK if not e.code else EXIT_INPUT
    except UnicodeDecodeError as e:
        io.err(f"error: unreadable input: {e}")
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
