"""Floating-point add, multiply and divide on round-bit encoded words.

Add and multiply are computed exactly on widened fixed-point significands
and rounded once by truncation, so results are within half an ulp of the
exact value and the result's round bit reports the rounding direction.
Division follows the fixed-point divider: its reference value is the
quotient of the operands' round-bit-extended words (the midpoints of their
half-ulp intervals), which is what the divider sees.

Directed roundings never increment: when the truncated tail was nonzero the
round bit is simply replaced according to the mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import fixed
from .core import DyadicRational, RnFixed, negate
from .floatfmt import (
    FloatClass,
    FloatFormat,
    RnFloat,
    UnpackedFloat,
    pack,
    unpack,
)


class RoundingMode(Enum):
    NEAREST = "rn"          # truncation; no adjustment
    UPWARD = "ru"           # toward +inf
    DOWNWARD = "rd"         # toward -inf
    TOWARD_ZERO = "rz"
    AWAY_FROM_ZERO = "ra"


@dataclass(frozen=True)
class StickyTail:
    """Whether anything nonzero was discarded by the final truncation.

    ``nonzero`` False means the delivered value equals the exact result.
    """

    nonzero: bool


def directed_round_bit(rbit: int, sign_bit: int, t: StickyTail, mode: RoundingMode) -> int:
    """Round-bit substitution table for the directed modes.

    Applies only when the truncated tail was nonzero; exact results pass
    through every mode unchanged.
    """
    if not t.nonzero or mode is RoundingMode.NEAREST:
        return rbit
    if mode is RoundingMode.UPWARD:
        return 1
    if mode is RoundingMode.DOWNWARD:
        return 0
    if mode is RoundingMode.TOWARD_ZERO:
        return sign_bit
    return 1 - sign_bit


def apply_directed_rounding(x: RnFixed, t: StickyTail, mode: RoundingMode) -> RnFixed:
    """Adjust the round bit of a truncated result for a directed mode."""
    sign_bit = 1 if x.bits < 0 else 0
    r = directed_round_bit(x.round, sign_bit, t, mode)
    if r == x.round:
        return x
    return RnFixed(x.bits, x.width, r, x.lsb_exp)


def sticky_of(exact, kept: RnFixed) -> StickyTail:
    """Sticky tail of ``kept`` relative to the exact result.

    ``exact`` is the infinitely precise value (a DyadicRational) or a
    division remainder (an int).
    """
    if isinstance(exact, int):
        return StickyTail(exact != 0)
    return StickyTail(DyadicRational(kept.bits + kept.round, kept.lsb_exp) != exact)


def _require_same_format(a: RnFloat, b: RnFloat) -> FloatFormat:
    if a.fmt != b.fmt:
        raise ValueError("operands must share a format")
    return a.fmt


def _is_nan(u: UnpackedFloat) -> bool:
    return u.cls is FloatClass.NAN


def _is_inf(u: UnpackedFloat) -> bool:
    return u.cls is FloatClass.INFINITY


def _is_zero_value(u: UnpackedFloat) -> bool:
    if u.cls is FloatClass.ZERO:
        return True
    return u.cls is FloatClass.SUBNORMAL and u.significand.bits + u.significand.round == 0


def _finite_parts(u: UnpackedFloat) -> tuple[int, RnFixed]:
    """Scale exponent and p+1-bit significand of a finite operand."""
    fmt = u.fmt
    p = fmt.precision
    sig = u.significand
    if u.cls is FloatClass.NORMAL:
        return u.biased_exp - fmt.bias, sig
    # subnormal: same value at the minimum exponent, sign-extended one bit
    return fmt.e_min, RnFixed(sig.bits, p + 1, sig.round, sig.lsb_exp)


def _aligned_sum(ua: UnpackedFloat, ub: UnpackedFloat) -> tuple[RnFixed, int]:
    """Exact significand sum at the smaller operand's scale.

    The larger-exponent operand is shifted left over the gap, appending
    copies of its round bit, which scales its value exactly.
    """
    ea, sa = _finite_parts(ua)
    eb, sb = _finite_parts(ub)
    if ea > eb:
        sa = fixed.shift_left(sa, ea - eb)
        scale = eb
    elif eb > ea:
        sb = fixed.shift_left(sb, eb - ea)
        scale = ea
    else:
        scale = ea
    return fixed.add(sa, sb), scale


def _floor_log2_ratio(num: int, den: int) -> int:
    """floor(log2(num/den)) for positive num, den."""
    k = num.bit_length() - den.bit_length()
    if k >= 0:
        return k if num >= (den << k) else k - 1
    return k if (num << -k) >= den else k - 1


def _ratio_is_pow2(num: int, den: int, k: int) -> bool:
    """num/den == 2**k, for positive num, den."""
    if k >= 0:
        return num == den << k
    return num << -k == den


def _boundary_word(fmt: FloatFormat, negative: bool) -> RnFloat:
    """Encoding of +-2**(e_max+1), the format's largest finite magnitude."""
    p = fmt.precision
    if negative:
        sig = RnFixed(-(1 << p), p + 1, 0, 1 - p)
        return pack(UnpackedFloat(fmt, FloatClass.NORMAL, 1, fmt.e_max + fmt.bias, sig))
    sig = RnFixed((1 << p) - 1, p + 1, 1, 1 - p)
    return pack(UnpackedFloat(fmt, FloatClass.NORMAL, 0, fmt.e_max + fmt.bias, sig))


def _deliver(num: int, den: int, fmt: FloatFormat, mode: RoundingMode) -> tuple[RnFloat, StickyTail]:
    """Round the exact value num/den (den > 0) into the format.

    One floor division places the word and round bit on the target grid;
    overflow saturates to infinity, except that the exactly representable
    edge magnitude 2**(e_max+1) is delivered on its boundary encoding.
    """
    p = fmt.precision
    if num == 0:
        return fmt.zero(), StickyTail(False)
    mag = -num if num < 0 else num
    e_val = _floor_log2_ratio(mag, den)
    if e_val > fmt.e_max:
        if e_val == fmt.e_max + 1 and _ratio_is_pow2(mag, den, e_val):
            return _boundary_word(fmt, num < 0), StickyTail(False)
        return fmt.inf(1 if num < 0 else 0), StickyTail(True)
    subnormal = e_val < fmt.e_min
    e_tgt = fmt.e_min if subnormal else e_val
    half = e_tgt - p  # absolute weight of the round-bit source position
    if half >= 0:
        t2, rem = divmod(num, den << half)
    else:
        t2, rem = divmod(num << -half, den)
    w, r = t2 >> 1, t2 & 1
    sticky = StickyTail(r == 1 or rem != 0)
    if not subnormal and w == -(1 << (p - 1)) and r == 0:
        # exact negative power of two: use the normalized spelling
        w, r = -(1 << (p - 1)) - 1, 1
    r = directed_round_bit(r, 1 if w < 0 else 0, sticky, mode)
    if subnormal:
        if w + r == 0:
            return fmt.zero(), sticky
        sign = (w >> (p - 1)) & 1
        sig = RnFixed(w, p, r, 1 - p)
        return pack(UnpackedFloat(fmt, FloatClass.SUBNORMAL, sign, 0, sig)), sticky
    sign = 1 if w < 0 else 0
    sig = RnFixed(w, p + 1, r, 1 - p)
    return pack(UnpackedFloat(fmt, FloatClass.NORMAL, sign, e_tgt + fmt.bias, sig)), sticky


def _deliver_scaled(v: int, g: int, fmt: FloatFormat, mode: RoundingMode) -> tuple[RnFloat, StickyTail]:
    if g >= 0:
        return _deliver(v << g, 1, fmt, mode)
    return _deliver(v, 1 << -g, fmt, mode)


def round_to_format(value: Fraction, fmt: FloatFormat, mode: RoundingMode = RoundingMode.NEAREST) -> tuple[RnFloat, StickyTail]:
    """Round an exact rational into a packed word, reporting inexactness."""
    if value == 0:
        return fmt.zero(), StickyTail(False)
    return _deliver(value.numerator, value.denominator, fmt, mode)


def fadd_with_sticky(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> tuple[RnFloat, StickyTail]:
    fmt = _require_same_format(a, b)
    ua, ub = unpack(a), unpack(b)
    exact = StickyTail(False)
    if _is_nan(ua) or _is_nan(ub):
        return fmt.nan(), exact
    if _is_inf(ua) and _is_inf(ub):
        if ua.sign != ub.sign:
            return fmt.nan(), exact
        return fmt.inf(ua.sign), exact
    if _is_inf(ua):
        return fmt.inf(ua.sign), exact
    if _is_inf(ub):
        return fmt.inf(ub.sign), exact
    if _is_zero_value(ua) and _is_zero_value(ub):
        return fmt.zero(), exact
    if _is_zero_value(ua):
        return b, exact
    if _is_zero_value(ub):
        return a, exact
    sum_sig, scale = _aligned_sum(ua, ub)
    v = sum_sig.bits + sum_sig.round
    if v == 0:
        return fmt.zero(), exact
    return _deliver_scaled(v, scale + (1 - fmt.precision), fmt, mode)


def fadd(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> RnFloat:
    """Correctly truncation-rounded sum; commutative bit-for-bit."""
    return fadd_with_sticky(a, b, mode)[0]


def near_path(a: RnFloat, b: RnFloat) -> tuple[RnFixed, int]:
    """Cancellation path: exact difference plus its scale exponent.

    Requires an effective subtraction with exponent gap at most one.  Aligns
    by at most one position, adds the two's complement significands, and
    left-normalizes by shifting in copies of the result round bit.  Nothing
    is rounded; the returned significand is exact.
    """
    fmt = _require_same_format(a, b)
    ua, ub = unpack(a), unpack(b)
    for u in (ua, ub):
        if _is_nan(u) or _is_inf(u) or _is_zero_value(u):
            raise ValueError("near path expects finite nonzero operands")
    if ua.sign == ub.sign:
        raise ValueError("near path handles effective subtraction only")
    ea, _ = _finite_parts(ua)
    eb, _ = _finite_parts(ub)
    if abs(ea - eb) > 1:
        raise ValueError("near path requires an exponent gap of at most 1")
    sum_sig, scale = _aligned_sum(ua, ub)
    v = sum_sig.bits + sum_sig.round
    if v == 0:
        return sum_sig, scale
    lead = fmt.precision - abs(v).bit_length()
    if lead > 0:
        sum_sig = fixed.shift_left(sum_sig, lead)
        scale -= lead
    return sum_sig, scale


def far_path(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> RnFloat:
    """Alignment path: exact widened sum, then a single truncation.

    Handles effective additions at any gap and effective subtractions with
    gap at least two.
    """
    fmt = _require_same_format(a, b)
    ua, ub = unpack(a), unpack(b)
    for u in (ua, ub):
        if _is_nan(u) or _is_inf(u) or _is_zero_value(u):
            raise ValueError("far path expects finite nonzero operands")
    ea, _ = _finite_parts(ua)
    eb, _ = _finite_parts(ub)
    if ua.sign != ub.sign and abs(ea - eb) <= 1:
        raise ValueError("near-path operands routed to the far path")
    sum_sig, scale = _aligned_sum(ua, ub)
    v = sum_sig.bits + sum_sig.round
    if v == 0:
        return fmt.zero()
    return _deliver_scaled(v, scale + (1 - fmt.precision), fmt, mode)[0]


def far_shortcut(a: RnFloat, b: RnFloat) -> RnFloat:
    """Huge-gap sum without forming it: keep the larger operand's word and
    force its round bit to the complement of the smaller operand's sign.

    Sound in the interval sense: the result's half-ulp interval stays inside
    the sum of the operand intervals.  Requires the gap to exceed the
    significand digit count, with the smaller operand finite and nonzero.
    """
    fmt = _require_same_format(a, b)
    ua, ub = unpack(a), unpack(b)
    for u in (ua, ub):
        if _is_nan(u) or _is_inf(u):
            raise ValueError("shortcut expects finite operands")
    if _is_zero_value(ub):
        raise ValueError("shortcut expects a nonzero smaller operand")
    ea, _ = _finite_parts(ua)
    eb, _ = _finite_parts(ub)
    if ea <= eb + fmt.precision:
        raise ValueError("shortcut requires the gap to exceed the precision")
    return RnFloat(fmt, (a.word & ~1) | (1 - ub.sign))


def fmul_with_sticky(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> tuple[RnFloat, StickyTail]:
    fmt = _require_same_format(a, b)
    ua, ub = unpack(a), unpack(b)
    exact = StickyTail(False)
    if _is_nan(ua) or _is_nan(ub):
        return fmt.nan(), exact
    sign = ua.sign ^ ub.sign
    if _is_inf(ua) or _is_inf(ub):
        other = ub if _is_inf(ua) else ua
        if not _is_inf(other) and _is_zero_value(other):
            return fmt.nan(), exact
        return fmt.inf(sign), exact
    if _is_zero_value(ua) or _is_zero_value(ub):
        return fmt.zero(), exact
    ea, sa = _finite_parts(ua)
    eb, sb = _finite_parts(ub)
    prod = fixed.mul(sa, sb)
    v = prod.bits + prod.round
    if v == 0:
        return fmt.zero(), exact
    return _deliver_scaled(v, ea + eb + prod.lsb_exp, fmt, mode)


def fmul(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> RnFloat:
    """Correctly truncation-rounded product; commutative bit-for-bit."""
    return fmul_with_sticky(a, b, mode)[0]


def _normalize_positive(e: int, sig: RnFixed, p: int) -> tuple[int, RnFixed]:
    """Absolute value of a significand, rescaled so the word lies in [1, 2).

    Value-preserving: shifts append round-bit copies and the two boundary
    spellings of an exact power (all-ones word with round bit set) are
    replaced by the power's plain word.
    """
    if sig.bits + sig.round < 0:
        sig = negate(sig)
    v = sig.bits + sig.round
    if v == 1 << p:
        return e + 1, RnFixed(1 << (p - 1), p + 1, 0, 1 - p)
    k = p - v.bit_length()
    if k > 0:
        e -= k
        word = (sig.bits << k) | (sig.round * ((1 << k) - 1))
        sig = RnFixed(word, p + 1, sig.round, 1 - p)
    elif sig.width != p + 1:
        sig = RnFixed(sig.bits, p + 1, sig.round, 1 - p)
    if sig.bits == (1 << (p - 1)) - 1:
        sig = RnFixed(1 << (p - 1), p + 1, 0, 1 - p)
    return e, sig


def _values_match(m: int, e: int, num: int, den: int) -> bool:
    """m * 2**e == num/den, den > 0."""
    if e >= 0:
        return (m * den) << e == num
    return m * den == num << -e


def fdiv_with_sticky(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> tuple[RnFloat, StickyTail]:
    fmt = _require_same_format(a, b)
    p = fmt.precision
    ua, ub = unpack(a), unpack(b)
    exact = StickyTail(False)
    if _is_nan(ua) or _is_nan(ub):
        return fmt.nan(), exact
    sign = ua.sign ^ ub.sign
    if _is_inf(ua):
        if _is_inf(ub):
            return fmt.nan(), exact
        return fmt.inf(sign), exact
    if _is_inf(ub):
        return fmt.zero(), exact
    a_zero, b_zero = _is_zero_value(ua), _is_zero_value(ub)
    if a_zero and b_zero:
        return fmt.nan(), exact
    if b_zero:
        return fmt.inf(sign), exact
    if a_zero:
        return fmt.zero(), exact
    ea, sa = _finite_parts(ua)
    eb, sb = _finite_parts(ub)
    neg = (sa.bits + sa.round < 0) ^ (sb.bits + sb.round < 0)
    ea, pa = _normalize_positive(ea, sa, p)
    eb, pb = _normalize_positive(eb, sb, p)
    dr = fixed.div(pa, pb, p - 1)
    q = dr.quotient
    e_r = ea - eb
    if q.lsb_exp == -p:
        # quotient below one: the left shift is an exponent adjustment here
        e_r -= 1
        q = RnFixed(q.bits, q.width, q.round, 1 - p)
    if neg:
        q = negate(q)
    # reference value: quotient of the round-bit-extended operand words
    n0, d0 = 2 * pa.bits + pa.round, 2 * pb.bits + pb.round
    e_diff = ea - eb
    if e_r > fmt.e_max:
        k = fmt.e_max + 1 - e_diff
        if _ratio_is_pow2(n0, d0, k):
            return _boundary_word(fmt, neg), StickyTail(False)
        return fmt.inf(1 if neg else 0), StickyTail(True)
    if e_r < fmt.e_min:
        num = -n0 if neg else n0
        if e_diff >= 0:
            return _deliver(num << e_diff, d0, fmt, mode)
        return _deliver(num, d0 << -e_diff, fmt, mode)
    signed_n0 = -n0 if neg else n0
    if e_diff >= 0:
        num, den = signed_n0 << e_diff, d0
    else:
        num, den = signed_n0, d0 << -e_diff
    sticky = StickyTail(not _values_match(q.bits + q.round, q.lsb_exp + e_r, num, den))
    q = apply_directed_rounding(q, sticky, mode)
    sign_bit = 1 if q.bits < 0 else 0
    return pack(UnpackedFloat(fmt, FloatClass.NORMAL, sign_bit, e_r + fmt.bias, q)), sticky


def fdiv(a: RnFloat, b: RnFloat, mode: RoundingMode = RoundingMode.NEAREST) -> RnFloat:
    """Quotient by the fixed-point divider on normalized significands."""
    return fdiv_with_sticky(a, b, mode)[0]
