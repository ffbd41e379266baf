"""Command-line surface: convert, eval, inspect and verify.

Exit codes: 0 on success, 1 when a verification sweep fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from fractions import Fraction

from . import fixed, floatarith as fa
from .core import (
    DyadicRational,
    RnFixed,
    format_literal,
    interval_of,
    parse_literal,
    sd_of_canonical,
    value_of,
)
from .floatfmt import (
    FORMATS,
    FloatClass,
    RnFloat,
    float_negate,
    format_fields,
    format_hex_literal,
    parse_float_literal,
    unpack,
    value_of_float,
)
from .oracle import VerifyReport, reference_round_nearest
from .verify import SUITES

_DECIMAL_RE = re.compile(r"^[+-]?\d+(\.\d+)?$")
_MODES = {m.value: m for m in fa.RoundingMode}


class CliError(Exception):
    pass


def _parse_operand(text: str):
    """Classify a token as a fixed literal, a float literal or a decimal."""
    if text.startswith("rn:"):
        return parse_literal(text)
    if re.match(r"^rnf\d+:", text):
        return parse_float_literal(text)
    if _DECIMAL_RE.match(text):
        return Fraction(text)
    raise CliError(f"unrecognized operand {text!r}")


def _operand_value(op) -> Fraction:
    if isinstance(op, RnFixed):
        return value_of(op).to_fraction()
    if isinstance(op, RnFloat):
        v = value_of_float(op)
        if isinstance(v, FloatClass):
            raise CliError(f"{format_hex_literal(op)} has no finite value")
        return v.to_fraction()
    return op


def _fraction_decimal(x: Fraction) -> str:
    """Exact decimal string; requires a dyadic value."""
    num, den = x.numerator, x.denominator
    if den & (den - 1):
        raise CliError(f"{x} has no finite decimal expansion")
    return str(DyadicRational(num, -(den.bit_length() - 1)))


# ---------------------------------------------------------------------------
# convert


def _convert_to_fixed(value: Fraction, spec: str, prefer_round_bit: bool) -> RnFixed:
    m = re.match(r"^rn@(-?\d+),w=(\d+)$", spec)
    if not m:
        raise CliError(f"bad fixed-point target {spec!r} (expected rn@<lsb>,w=<width>)")
    lsb, width = int(m.group(1)), int(m.group(2))
    scaled = value / Fraction(2) ** lsb
    if scaled.denominator != 1:
        raise CliError(f"{value} is not representable at lsb exponent {lsb}")
    n = scaled.numerator
    try:
        if prefer_round_bit:
            return RnFixed(n - 1, width, 1, lsb)
        return RnFixed(n, width, 0, lsb)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_convert(args) -> int:
    operand = _parse_operand(args.value)
    target = args.to
    if target == "sd":
        if not isinstance(operand, RnFixed):
            raise CliError("signed-digit output needs a fixed-point literal")
        digits = list(sd_of_canonical(operand).digits)
        while len(digits) > 1 and digits[0] == 0:
            digits.pop(0)
        print(" ".join(str(d) for d in digits))
        return 0
    if target == "decimal":
        if isinstance(operand, RnFloat):
            v = value_of_float(operand)
            if isinstance(v, FloatClass):
                name = "nan" if v is FloatClass.NAN else ("-inf" if operand.sign else "inf")
                print(name)
                return 0
            print(str(v))
            return 0
        print(_fraction_decimal(_operand_value(operand)))
        return 0
    if target.startswith("float:"):
        name = target.split(":", 1)[1]
        if name not in FORMATS:
            raise CliError(f"unknown format {name!r}")
        fmt = FORMATS[name]
        out, sticky = fa.round_to_format(_operand_value(operand), fmt)
        print(f"{format_hex_literal(out)} {'inexact' if sticky.nonzero else 'exact'}")
        return 0
    if target.startswith("rn@"):
        out = _convert_to_fixed(_operand_value(operand), target, args.prefer_round_bit)
        print(format_literal(out))
        return 0
    raise CliError(f"unknown conversion target {target!r}")


# ---------------------------------------------------------------------------
# eval


def _tokenize(expr: str) -> list[str]:
    tokens = expr.split()
    if not tokens:
        raise CliError("empty expression")
    return tokens


class _Evaluator:
    """Left-to-right evaluation with * and / binding tighter than + and -."""

    def __init__(self, tokens: list[str], mode: fa.RoundingMode):
        self.tokens = tokens
        self.pos = 0
        self.mode = mode
        self.inexact = False

    def _operand(self):
        if self.pos >= len(self.tokens):
            raise CliError("expression ends with an operator")
        op = _parse_operand(self.tokens[self.pos])
        if isinstance(op, Fraction):
            raise CliError("eval operands must be rn: or rnf literals")
        self.pos += 1
        return op

    def _apply(self, op: str, a, b):
        if isinstance(a, RnFixed) != isinstance(b, RnFixed):
            raise CliError("cannot mix fixed-point and floating-point operands")
        if isinstance(a, RnFixed):
            if op == "+":
                return fixed.add(a, b)
            if op == "-":
                return fixed.sub(a, b)
            if op == "*":
                return fixed.mul(a, b)
            p = -a.lsb_exp
            try:
                res = fixed.div(a, b, p)
            except (ValueError, ZeroDivisionError) as exc:
                raise CliError(str(exc)) from exc
            self.inexact |= not res.exact
            return res.quotient
        if a.fmt != b.fmt:
            raise CliError("operands use different formats")
        if op == "-":
            out, sticky = fa.fadd_with_sticky(a, float_negate(b), self.mode)
        elif op == "+":
            out, sticky = fa.fadd_with_sticky(a, b, self.mode)
        elif op == "*":
            out, sticky = fa.fmul_with_sticky(a, b, self.mode)
        else:
            out, sticky = fa.fdiv_with_sticky(a, b, self.mode)
        self.inexact |= sticky.nonzero
        return out

    def _term(self):
        acc = self._operand()
        while self.pos < len(self.tokens) and self.tokens[self.pos] in ("*", "/"):
            op = self.tokens[self.pos]
            self.pos += 1
            acc = self._apply(op, acc, self._operand())
        return acc

    def run(self):
        acc = self._term()
        while self.pos < len(self.tokens):
            op = self.tokens[self.pos]
            if op not in ("+", "-"):
                raise CliError(f"expected an operator, got {op!r}")
            self.pos += 1
            acc = self._apply(op, acc, self._term())
        return acc


def cmd_eval(args) -> int:
    mode = _MODES[args.mode]
    ev = _Evaluator(_tokenize(args.expr), mode)
    result = ev.run()
    tag = "inexact" if ev.inexact else "exact"
    if isinstance(result, RnFixed):
        print(f"{format_literal(result)} {tag} (= {value_of(result)})")
        return 0
    v = value_of_float(result)
    shown = v if isinstance(v, DyadicRational) else ("nan" if v is FloatClass.NAN else "inf")
    print(f"{format_hex_literal(result)} {tag} sticky={int(ev.inexact)} (= {shown})")
    return 0


# ---------------------------------------------------------------------------
# inspect


def cmd_inspect(args) -> int:
    f = parse_float_literal(args.value)
    u = unpack(f)
    fmt = f.fmt
    pieces = [f"class={u.cls.value}", f"s={f.sign}", f"e={f.biased_exp}(bias {fmt.bias})"]
    if u.cls is FloatClass.NORMAL:
        pieces.append(f"hidden={1 - f.sign}")
    pieces.append(f"f={f.frac:0{fmt.frac_bits}b}")
    pieces.append(f"r={f.round}")
    if u.cls in (FloatClass.NORMAL, FloatClass.SUBNORMAL, FloatClass.ZERO):
        pieces.append(f"sig={format_literal(u.significand)}")
        v = value_of_float(f)
        pieces.append(f"value={v}")
        scale = (u.biased_exp - fmt.bias) if u.cls is FloatClass.NORMAL else fmt.e_min
        iv = interval_of(u.significand)
        lo = DyadicRational(iv.lo.mantissa, iv.lo.exp + scale)
        hi = DyadicRational(iv.hi.mantissa, iv.hi.exp + scale)
        pieces.append(f"interval=[{lo} ; {hi}]")
    print(" ".join(pieces))
    print(f"fields: {format_fields(f)}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _oracle_selftest(seed: int, rounds: int = 2000) -> VerifyReport:
    """Randomized cross-check of the reference rounder against brute-force
    distance minimization."""
    rep = VerifyReport("oracle-selftest", f"seed={seed}")
    rng = random.Random(seed)
    for _ in range(rounds):
        rep.cases += 1
        x = Fraction(rng.randint(-(1 << 20), 1 << 20), rng.randint(1, 1 << 12))
        k = rng.randint(-8, 8)
        grid = Fraction(2) ** k
        picks = reference_round_nearest(x, k)
        base = (x / grid).numerator // (x / grid).denominator
        best = min(abs(x - n * grid) for n in range(base - 4, base + 5))
        ok = all(abs(x - p.to_fraction()) == best for p in picks)
        ok = ok and len(picks) == (2 if abs(x - picks[0].to_fraction()) * 2 == grid else 1)
        if not ok:
            rep.record(str(x), "nearest grid point", str(picks))
    return rep.done()


def cmd_verify(args) -> int:
    if args.suite == "oracle-selftest":
        reports = [_oracle_selftest(args.seed)]
    else:
        if args.suite not in SUITES:
            raise CliError(f"unknown suite {args.suite!r}")
        kwargs = {"threads": args.threads}
        if args.width is not None:
            kwargs["width"] = args.width
        if args.format is not None:
            if args.format not in FORMATS:
                raise CliError(f"unknown format {args.format!r}")
            kwargs["fmt"] = FORMATS[args.format]
        reports = SUITES[args.suite](**kwargs)
    failed = False
    for rep in reports:
        print(rep.to_text())
        failed |= not rep.passed
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rnarith",
        description="Round-to-nearest-by-truncation arithmetic toolbox.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("value", help="rn: literal, rnf literal, or decimal")
    p.add_argument("--to", required=True, help="sd | canonical target rn@<lsb>,w=<width> | float:<fmt> | decimal")
    p.add_argument(
        "--prefer-round-bit",
        action="store_true",
        help="emit the round-bit-set spelling of exactly representable values",
    )
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("eval", help="evaluate an infix expression over literals")
    p.add_argument("expr", help="whitespace-separated literals and + - * /")
    p.add_argument("--mode", choices=sorted(_MODES), default="rn", help="rounding mode for float ops")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("inspect", help="break a float word into fields")
    p.add_argument("value", help="rnf literal, e.g. rnf8:0x30")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}, oracle-selftest")
    p.add_argument("--width", type=int, default=None, help="fixed-point width (or p for fixed-div)")
    p.add_argument("--format", default=None, help="float format name, e.g. rnf8")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--threads", type=int, default=1, help="worker threads for float sweeps")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
