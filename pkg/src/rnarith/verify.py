"""Verification sweeps: exhaustive checks of the library against the oracle.

Each sweep runs an operation over an enumerated space, checks its contract
with independent Fraction arithmetic, and returns a
:class:`~rnarith.oracle.VerifyReport`.  These back both the test suite and
the ``verify`` CLI command.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import fixed, floatarith as fa
from .core import (
    RnFixed,
    TailSign,
    booth_recode,
    canonical_of_sd,
    interval_of,
    negate,
    sd_of_canonical,
    tail_digit_sign,
    truncate_at,
    validate_rn,
    value_of,
)
from .floatfmt import RNF8, RNF16, FloatFormat, RnFloat, float_negate, pack, unpack
from .oracle import (
    VerifyReport,
    check_inclusion,
    enumerate_div_operands,
    enumerate_fixed,
    enumerate_format,
)

# ---------------------------------------------------------------------------
# independent float helpers (Fraction arithmetic on raw fields only)


def _fields(fmt: FloatFormat, word: int) -> tuple[int, int, int, int]:
    s = (word >> (fmt.total_bits - 1)) & 1
    e = (word >> fmt.precision) & fmt.exp_mask
    f = (word >> 1) & ((1 << fmt.frac_bits) - 1)
    return s, e, f, word & 1


def float_value(fmt: FloatFormat, word: int) -> Fraction | None:
    """Exact value of a finite word straight from the layout; None for
    infinities and NaNs."""
    s, e, f, r = _fields(fmt, word)
    p = fmt.precision
    if e == fmt.exp_mask:
        return None
    if e == 0:
        two_c = Fraction(f, 1 << (p - 1)) - s
        return (two_c + Fraction(r, 1 << (p - 1))) * Fraction(2) ** fmt.e_min
    two_c = (1 - 3 * s) + Fraction(f, 1 << (p - 1))
    return (two_c + Fraction(r, 1 << (p - 1))) * Fraction(2) ** (e - fmt.bias)


def float_ulp(fmt: FloatFormat, word: int) -> Fraction:
    _, e, _, _ = _fields(fmt, word)
    scale = fmt.e_min if e == 0 else e - fmt.bias
    return Fraction(2) ** (scale + 1 - fmt.precision)


def _floor_log2(x: Fraction) -> int:
    n, d = x.numerator, x.denominator
    k = n.bit_length() - d.bit_length()
    if k >= 0:
        return k if n >= (d << k) else k - 1
    return k if (n << -k) >= d else k - 1


def representable(x: Fraction, fmt: FloatFormat) -> bool:
    """Can the format hold x exactly?"""
    if x == 0:
        return True
    e = _floor_log2(abs(x))
    if e > fmt.e_max + 1:
        return False
    if e == fmt.e_max + 1:
        return abs(x) == Fraction(2) ** e
    grid = Fraction(2) ** (max(e, fmt.e_min) + 1 - fmt.precision)
    return (x / grid).denominator == 1


def _sig_interval(fmt: FloatFormat, word: int) -> tuple[Fraction, Fraction]:
    """Half-ulp interval of a finite word at full float scale."""
    s, e, f, r = _fields(fmt, word)
    p = fmt.precision
    if e == 0:
        bits = f - (s << (p - 1))
        scale = fmt.e_min
    else:
        bits = f + ((1 << (p - 1)) if s == 0 else -(1 << p))
        scale = e - fmt.bias
    half = Fraction(2) ** (scale - p)  # half of the word's scaled ulp
    lo = (2 * bits + r) * half
    return lo, lo + half


def _div_reference(fmt: FloatFormat, word_a: int, word_b: int) -> Fraction:
    """Quotient of the round-bit-extended, divider-normalized operands."""

    def prep(word: int) -> tuple[int, int]:
        s, e, f, r = _fields(fmt, word)
        p = fmt.precision
        if e == 0:
            w = f - (s << (p - 1))
            scale = fmt.e_min
        else:
            w = f + ((1 << (p - 1)) if s == 0 else -(1 << p))
            scale = e - fmt.bias
        if w + r < 0:
            w, r = -w - 1, 1 - r
        v = w + r
        if v == 1 << p:
            return 1 << p, scale + 1  # extended word of the plain power
        k = p - v.bit_length()
        if k > 0:
            w = (w << k) | (r * ((1 << k) - 1))
            scale -= k
        if w == (1 << (p - 1)) - 1:
            w, r = 1 << (p - 1), 0
        return 2 * w + r, scale

    na, ea = prep(word_a)
    nb, eb = prep(word_b)
    sa = -1 if float_value(fmt, word_a) < 0 else 1
    sb = -1 if float_value(fmt, word_b) < 0 else 1
    return sa * sb * Fraction(na, nb) * Fraction(2) ** (ea - eb)


# ---------------------------------------------------------------------------
# fixed-point sweeps


def fixed_add_sweep(width: int, variant: str = "add") -> VerifyReport:
    """Value exactness and interval inclusion for add, add_alt and sub.

    Checks run in integer arithmetic on the raw fields: values as
    ``bits + round`` and half-ulp intervals as ``[2*bits + round,
    2*bits + round + 1]`` in units of half an ulp.
    """
    op = {"add": fixed.add, "add_alt": fixed.add_alt, "sub": fixed.sub}[variant]
    rep = VerifyReport(variant, f"width={width}")
    encs = list(enumerate_fixed(width))
    for a in encs:
        va = a.bits + a.round
        la = 2 * a.bits + a.round
        for b in encs:
            rep.cases += 1
            out = op(a, b)
            if variant == "sub":
                want = va - (b.bits + b.round)
                lb = 2 * (~b.bits) + (1 - b.round)
            else:
                want = va + b.bits + b.round
                lb = 2 * b.bits + b.round
            if out.bits + out.round != want:
                rep.record(f"{a},{b}", str(want), str(out))
                continue
            lo = 2 * out.bits + out.round
            if not (la + lb <= lo and lo + 1 <= la + lb + 2):
                rep.record(f"{a},{b}", "interval inclusion", str(out))
    return rep.done()


def _zero_pair(a: RnFixed, b: RnFixed) -> bool:
    return (a.bits, a.round) == (0, 0) and (b.bits, b.round) == (0, 0)


def fixed_mul_sweep(width: int) -> VerifyReport:
    """Value exactness for all sign combinations; interval inclusion for
    nonnegative words (the all-zero pair is excluded: no zero encoding's
    interval fits inside [0, u*u/4])."""
    rep = VerifyReport("mul", f"width={width}")
    encs = list(enumerate_fixed(width))
    for a in encs:
        va = value_of(a).to_fraction()
        for b in encs:
            rep.cases += 1
            out = fixed.mul(a, b)
            want = va * value_of(b).to_fraction()
            got = value_of(out).to_fraction()
            if got != want:
                rep.record(f"{a},{b}", str(want), str(got))
                continue
            if a.bits >= 0 and b.bits >= 0 and not _zero_pair(a, b):
                if not check_inclusion(
                    interval_of(out), interval_of(a), interval_of(b), "mul-nonneg"
                ):
                    rep.record(f"{a},{b}", "interval inclusion", "violated")
    return rep.done()


def fixed_mul_sign_sweep(width: int) -> VerifyReport:
    """mul(a, b) == negate(mul(negate(a), b)) over every pair."""
    rep = VerifyReport("mul-sign", f"width={width}")
    encs = list(enumerate_fixed(width))
    for a in encs:
        na = negate(a)
        for b in encs:
            rep.cases += 1
            lhs = fixed.mul(a, b)
            rhs = negate(fixed.mul(na, b))
            if lhs != rhs:
                rep.record(f"{a},{b}", str(lhs), str(rhs))
    return rep.done()


def fixed_div_sweep(p: int) -> VerifyReport:
    """Divider contract over every scaled operand pair.

    The two-extra-bit approximation (nearest value on the p+2-bit grid, so
    |error| <= u/8) must lie strictly inside the operand-interval quotient
    bounds and within u/4 of the exact quotient; the delivered word and
    round bit must be the truncation of the exact quotient at the delivered
    grid; and the round bit must agree with the sign of the remaining
    remainder."""
    rep = VerifyReport("div", f"p={p}")
    u = Fraction(1, 1 << p)
    for x, y in enumerate_div_operands(p):
        rep.cases += 1
        n = 2 * x.bits + x.round
        d = 2 * y.bits + y.round
        q = Fraction(n, d)
        lo = Fraction(n, 1 << (p + 1)) / (Fraction(d, 1 << (p + 1)) + u / 2)
        hi = (Fraction(n, 1 << (p + 1)) + u / 2) / Fraction(d, 1 << (p + 1))
        q_approx = Fraction((2 * (n << (p + 2)) + d) // (2 * d), 1 << (p + 2))
        t_ref, rem_ref = divmod(n << (p + 2), d)
        out = fixed.div(x, y, p)
        quot = out.quotient
        if n >= d:
            expect = RnFixed(t_ref >> 2, p + 2, (t_ref >> 1) & 1, -p)
        else:
            expect = RnFixed(t_ref >> 1, p + 2, t_ref & 1, -p - 1)
        ok = (
            quot == expect
            and out.exact == (rem_ref == 0)
            and lo < q_approx < hi
            and abs(q_approx - q) < u / 4
        )
        if ok:
            vq = value_of(quot).to_fraction()
            if quot.round == 1:
                ok = q - vq <= 0
            else:
                ok = q - vq >= 0
        if not ok:
            rep.record(f"{x},{y}", "divider contract", str(quot))
    return rep.done()


def double_rounding_sweep(width: int) -> VerifyReport:
    """Truncating twice lands on the same bits as truncating once."""
    rep = VerifyReport("double-rounding", f"width={width}")
    for x in enumerate_fixed(width):
        for j in range(x.lsb_exp, x.msb_exp + 1):
            inner = truncate_at(x, j)
            for k in range(j, x.msb_exp + 1):
                rep.cases += 1
                if truncate_at(inner, k) != truncate_at(x, k):
                    rep.record(f"{x},j={j},k={k}", str(truncate_at(x, k)), str(truncate_at(inner, k)))
    return rep.done()


def negation_sweep(max_width: int) -> VerifyReport:
    """Negation is an exact involution at every width."""
    rep = VerifyReport("negate", f"width<={max_width}")
    for width in range(2, max_width + 1):
        for x in enumerate_fixed(width):
            rep.cases += 1
            nx = negate(x)
            if negate(nx) != x or value_of(nx) != -value_of(x):
                rep.record(str(x), str(-value_of(x).to_fraction()), str(value_of(nx)))
    return rep.done()


def roundtrip_sweep(width: int) -> VerifyReport:
    """Signed-digit conversions invert each other and stay valid."""
    rep = VerifyReport("roundtrip", f"width={width}")
    top = 1 << (width - 1)
    for word in range(-top, top):
        rep.cases += 1
        sd = booth_recode(word, width)
        ok = (
            validate_rn(sd)
            and sd.value().to_fraction() == word
            and canonical_of_sd(sd) == RnFixed(word, width, 0, 0)
        )
        if not ok:
            rep.record(f"word={word}", "round trip", str(sd))
    for x in enumerate_fixed(width):
        rep.cases += 1
        sd = sd_of_canonical(x)
        back = canonical_of_sd(sd)
        # the all-ones spelling of zero recodes to the all-zero string,
        # which canonicalizes to the plain zero word
        expect = RnFixed(0, width, 0, 0) if x.bits + x.round == 0 else x
        ok = (
            validate_rn(sd)
            and back == expect
            and sd_of_canonical(back).digits == sd.digits
        )
        if ok and x.bits + x.round != 0:
            last = next(d for d in reversed(sd.digits) if d != 0)
            claim = tail_digit_sign(x)
            ok = (claim is TailSign.ROUNDED_UP) == (last == 1)
        if not ok:
            rep.record(str(x), "round trip", str(sd))
    return rep.done()


# ---------------------------------------------------------------------------
# floating-point sweeps

_FLOAT_OPS = {
    "add": (fa.fadd_with_sticky, "fadd"),
    "mul": (fa.fmul_with_sticky, "fmul"),
    "div": (fa.fdiv_with_sticky, "fdiv"),
}


def _float_exact(fmt: FloatFormat, op: str, wa: int, wb: int,
                 va: Fraction | None, vb: Fraction | None) -> Fraction | None:
    if va is None or vb is None:
        return None
    if op == "add":
        return va + vb
    if op == "mul":
        return va * vb
    if vb == 0:
        return None
    if va == 0:
        return Fraction(0)
    return _div_reference(fmt, wa, wb)


def _partition(n: int, parts: int) -> list[range]:
    step = (n + parts - 1) // parts
    return [range(i, min(i + step, n)) for i in range(0, n, step)]


def float_nearest_sweep(fmt: FloatFormat, op: str, threads: int = 1) -> VerifyReport:
    """Nearest mode over every operand pair: half-ulp correctness, exact
    results delivered exactly, round-bit direction on inexact nonzero
    results, and commutativity for add and mul."""
    func, name = _FLOAT_OPS[op]
    rep = VerifyReport(name, f"format={fmt.name}")
    n = 1 << fmt.total_bits
    values = [float_value(fmt, w) for w in range(n)]

    def run(rows: range) -> tuple[int, list[tuple[str, str, str]]]:
        cases = 0
        fails: list[tuple[str, str, str]] = []
        for wa in rows:
            a = RnFloat(fmt, wa)
            va = values[wa]
            for wb in range(n):
                b = RnFloat(fmt, wb)
                vb = values[wb]
                if op == "div" and vb == 0:
                    continue
                cases += 1
                out, sticky = func(a, b)
                if op in ("add", "mul") and func(b, a)[0] != out:
                    fails.append((f"{wa:#x},{wb:#x}", "commutative", f"{out.word:#x}"))
                    continue
                exact = _float_exact(fmt, op, wa, wb, va, vb)
                if exact is None:
                    continue
                vo = float_value(fmt, out.word)
                if vo is None:
                    # overflow: legitimate only beyond the largest magnitude
                    if abs(exact) < Fraction(2) ** (fmt.e_max + 1):
                        fails.append((f"{wa:#x},{wb:#x}", str(exact), "inf"))
                    continue
                ulp = float_ulp(fmt, out.word)
                if abs(vo - exact) > ulp / 2:
                    fails.append((f"{wa:#x},{wb:#x}", str(exact), str(vo)))
                    continue
                if representable(exact, fmt) and vo != exact:
                    fails.append((f"{wa:#x},{wb:#x}", f"exact {exact}", str(vo)))
                    continue
                if sticky.nonzero != (vo != exact):
                    fails.append((f"{wa:#x},{wb:#x}", "sticky flag", str(sticky.nonzero)))
                    continue
                if vo != exact and vo != 0:
                    up = (out.word & 1) == 1
                    if up != (vo >= exact):
                        fails.append((f"{wa:#x},{wb:#x}", "round-bit direction", str(out.word & 1)))
        return cases, fails

    parts = _partition(n, max(1, threads))
    if len(parts) > 1:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            results = list(pool.map(run, parts))
    else:
        results = [run(parts[0])]
    for cases, fails in results:
        rep.cases += cases
        rep.failures.extend(fails)
    return rep.done()


def float_directed_sweep(fmt: FloatFormat, op: str, threads: int = 1) -> VerifyReport:
    """Directed modes over every pair: directional bounds within one ulp on
    finite results, and bit identity with nearest when nothing was dropped."""
    func, name = _FLOAT_OPS[op]
    rep = VerifyReport(f"{name}-directed", f"format={fmt.name}")
    n = 1 << fmt.total_bits
    values = [float_value(fmt, w) for w in range(n)]
    modes = (
        fa.RoundingMode.UPWARD,
        fa.RoundingMode.DOWNWARD,
        fa.RoundingMode.TOWARD_ZERO,
        fa.RoundingMode.AWAY_FROM_ZERO,
    )

    def run(rows: range) -> tuple[int, list[tuple[str, str, str]]]:
        cases = 0
        fails: list[tuple[str, str, str]] = []
        for wa in rows:
            a = RnFloat(fmt, wa)
            va = values[wa]
            for wb in range(n):
                b = RnFloat(fmt, wb)
                vb = values[wb]
                if op == "div" and vb == 0:
                    continue
                exact = _float_exact(fmt, op, wa, wb, va, vb)
                if exact is None:
                    continue
                near, sticky = func(a, b)
                for mode in modes:
                    cases += 1
                    out = func(a, b, mode)[0]
                    if not sticky.nonzero:
                        if out != near:
                            fails.append((f"{wa:#x},{wb:#x},{mode.value}", "unchanged", f"{out.word:#x}"))
                        continue
                    vo = float_value(fmt, out.word)
                    if vo is None:
                        if abs(exact) < Fraction(2) ** (fmt.e_max + 1):
                            fails.append((f"{wa:#x},{wb:#x},{mode.value}", str(exact), "inf"))
                        continue
                    ulp = float_ulp(fmt, out.word)
                    if mode is fa.RoundingMode.UPWARD:
                        ok = vo >= exact
                    elif mode is fa.RoundingMode.DOWNWARD:
                        ok = vo <= exact
                    elif mode is fa.RoundingMode.TOWARD_ZERO:
                        ok = abs(vo) <= abs(exact)
                    else:
                        ok = abs(vo) >= abs(exact)
                    if not ok or abs(vo - exact) >= ulp:
                        fails.append((f"{wa:#x},{wb:#x},{mode.value}", str(exact), str(vo)))
        return cases, fails

    parts = _partition(n, max(1, threads))
    if len(parts) > 1:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            results = list(pool.map(run, parts))
    else:
        results = [run(parts[0])]
    for cases, fails in results:
        rep.cases += cases
        rep.failures.extend(fails)
    return rep.done()


def far_shortcut_sweep(fmt: FloatFormat) -> VerifyReport:
    """Shortcut soundness on every huge-gap pair.

    The result interval must stay inside the larger operand's interval plus
    the half-ulp bounding interval of the smaller side ([0, u/2] for a
    positive smaller operand, [-u/2, 0] for a negative one, u the larger
    operand's ulp), and the value must be within one ulp of the exact sum.
    """
    rep = VerifyReport("far-shortcut", f"format={fmt.name}")
    n = 1 << fmt.total_bits
    values = [float_value(fmt, w) for w in range(n)]

    def exp_of(word: int) -> int | None:
        v = values[word]
        if v is None or v == 0:
            return None
        _, e, _, _ = _fields(fmt, word)
        return fmt.e_min if e == 0 else e - fmt.bias

    for wa in range(n):
        ea = exp_of(wa)
        if ea is None:
            continue
        a = RnFloat(fmt, wa)
        for wb in range(n):
            eb = exp_of(wb)
            if eb is None or ea <= eb + fmt.precision:
                continue
            rep.cases += 1
            out = fa.far_shortcut(a, RnFloat(fmt, wb))
            lo_r, hi_r = _sig_interval(fmt, out.word)
            lo_a, hi_a = _sig_interval(fmt, wa)
            half = float_ulp(fmt, wa) / 2
            lo_b, hi_b = (Fraction(0), half) if values[wb] > 0 else (-half, Fraction(0))
            exact = values[wa] + values[wb]
            vo = float_value(fmt, out.word)
            ok = (
                lo_a + lo_b <= lo_r
                and hi_r <= hi_a + hi_b
                and abs(vo - exact) < float_ulp(fmt, wa)
            )
            if not ok:
                rep.record(f"{wa:#x},{wb:#x}", "shortcut soundness", f"{out.word:#x}")
    return rep.done()


def float_negate_sweep(fmt: FloatFormat) -> VerifyReport:
    """Negation by bit inversion: value antisymmetry, involution up to the
    canonical zero."""
    rep = VerifyReport("float-negate", f"format={fmt.name}")
    from .floatfmt import FloatClass

    for f in enumerate_format(fmt):
        rep.cases += 1
        v = float_value(fmt, f.word)
        out = float_negate(f)
        if v is None:
            u, uo = unpack(f), unpack(out)
            if u.cls is FloatClass.INFINITY:
                ok = uo.cls is FloatClass.INFINITY and uo.sign == 1 - u.sign
            else:
                ok = uo.cls is FloatClass.NAN
        else:
            vo = float_value(fmt, out.word)
            ok = vo == -v
            if ok:
                back = float_negate(out)
                ok = back == f if v != 0 else float_value(fmt, back.word) == 0
        if not ok:
            rep.record(f"{f.word:#x}", "negation", f"{out.word:#x}")
    return rep.done()


def pack_unpack_sweep(fmt: FloatFormat) -> VerifyReport:
    """Bit-exact pack/unpack round trip and value-formula agreement over the
    whole word space."""
    rep = VerifyReport("pack-unpack", f"format={fmt.name}")
    from .floatfmt import FloatClass, value_of_float

    for f in enumerate_format(fmt):
        rep.cases += 1
        u = unpack(f)
        if pack(u).word != f.word:
            rep.record(f"{f.word:#x}", "round trip", str(u))
            continue
        v = value_of_float(f)
        ref = float_value(fmt, f.word)
        if ref is None:
            s, e, frac, r = _fields(fmt, f.word)
            want = FloatClass.INFINITY if frac == 0 and r == 0 else FloatClass.NAN
            if v is not want:
                rep.record(f"{f.word:#x}", str(want), str(v))
        elif v.to_fraction() != ref:
            rep.record(f"{f.word:#x}", str(ref), str(v))
    return rep.done()


# ---------------------------------------------------------------------------
# pinned worked examples


def pinned_examples() -> VerifyReport:
    """The worked conversion, truncation, product and identity vectors."""
    rep = VerifyReport("examples", "pinned")

    def check(name: str, ok: bool, got: str = "") -> None:
        rep.cases += 1
        if not ok:
            rep.record(name, "pinned vector", got)

    sd = booth_recode(-718, 12)
    check("booth-recode", sd.digits == (0, -1, 1, -1, 0, 1, 0, -1, 0, 1, -1, 0), str(sd))

    trunc = truncate_at(RnFixed(-718, 12), 2)
    check("truncate", trunc == RnFixed(-180, 10, 1, 2), str(trunc))
    check("truncate-value", value_of(trunc).to_fraction() == -716, str(value_of(trunc)))

    a = RnFixed(11, 5, 1)
    b = RnFixed(9, 5, 1)
    prod = fixed.mul(a, b)
    check("product", prod == RnFixed(119, 9, 1, 0), str(prod))
    iv = interval_of(prod)
    check(
        "product-interval",
        iv.lo.to_fraction() == Fraction(239, 2) and iv.hi.to_fraction() == 120,
        str(iv),
    )
    check(
        "product-inclusion",
        check_inclusion(iv, interval_of(a), interval_of(b), "mul-nonneg"),
    )

    for x in enumerate_fixed(8):
        zero = RnFixed(0, 8, 0)
        s = fixed.add(x, zero)
        check("add-zero", s == RnFixed(x.bits, 9, x.round), str(s))
        d = fixed.sub(x, x)
        check("sub-self", d == RnFixed(-1, 9, 1) and value_of(d).to_fraction() == 0, str(d))
    return rep.done()


SUITES = {
    "paper-examples": lambda **kw: [pinned_examples()],
    "fixed-add": lambda width=8, **kw: [fixed_add_sweep(width, "add")],
    "fixed-add-alt": lambda width=8, **kw: [fixed_add_sweep(width, "add_alt")],
    "fixed-sub": lambda width=8, **kw: [fixed_add_sweep(width, "sub")],
    "fixed-mul": lambda width=6, **kw: [fixed_mul_sweep(width), fixed_mul_sign_sweep(width)],
    "fixed-div": lambda width=3, **kw: [fixed_div_sweep(width)],
    "fixed-roundtrip": lambda width=10, **kw: [roundtrip_sweep(width)],
    "fixed-truncate": lambda width=12, **kw: [double_rounding_sweep(width)],
    "fixed-negate": lambda width=12, **kw: [negation_sweep(width)],
    "float-add": lambda fmt=RNF8, threads=1, **kw: [float_nearest_sweep(fmt, "add", threads)],
    "float-mul": lambda fmt=RNF8, threads=1, **kw: [float_nearest_sweep(fmt, "mul", threads)],
    "float-div": lambda fmt=RNF8, threads=1, **kw: [float_nearest_sweep(fmt, "div", threads)],
    "float-directed": lambda fmt=RNF8, threads=1, **kw: [
        float_directed_sweep(fmt, op, threads) for op in ("add", "mul", "div")
    ],
    "float-shortcut": lambda fmt=RNF8, **kw: [far_shortcut_sweep(fmt)],
    "float-negate": lambda fmt=RNF8, **kw: [float_negate_sweep(fmt)],
    "float-roundtrip": lambda fmt=RNF16, **kw: [pack_unpack_sweep(fmt)],
    "float-all": lambda fmt=RNF8, threads=1, **kw: [
        rep
        for group in (
            [float_nearest_sweep(fmt, op, threads) for op in ("add", "mul", "div")],
            [float_directed_sweep(fmt, op, threads) for op in ("add", "mul", "div")],
            [far_shortcut_sweep(fmt), float_negate_sweep(fmt)],
        )
        for rep in group
    ],
}
