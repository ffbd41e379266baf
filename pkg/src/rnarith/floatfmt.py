"""Packed floating-point formats built on the round-bit significand.

Word layout, high to low: sign | biased exponent | fraction (p-1 bits) |
round bit.  A normal significand is the two's complement string
``s s' . f1 .. f(p-1)`` with complementary top bits, so the second bit is
implied by the sign and not stored.  Subnormals store ``s . f`` at the
minimum exponent; negative subnormals naturally carry leading ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import DyadicRational, RnFixed


@dataclass(frozen=True)
class FloatFormat:
    exp_bits: int
    precision: int  # significand digits p: hidden bit + (p-1) fraction bits
    name: str = ""

    def __post_init__(self) -> None:
        if self.exp_bits < 2 or self.precision < 2:
            raise ValueError("format too small")

    @property
    def total_bits(self) -> int:
        # sign + exponent + fraction + round bit
        return 1 + self.exp_bits + (self.precision - 1) + 1

    @property
    def bias(self) -> int:
        return (1 << (self.exp_bits - 1)) - 1

    @property
    def e_min(self) -> int:
        return 1 - self.bias

    @property
    def e_max(self) -> int:
        return (1 << self.exp_bits) - 2 - self.bias

    @property
    def exp_mask(self) -> int:
        return (1 << self.exp_bits) - 1

    @property
    def frac_bits(self) -> int:
        return self.precision - 1

    def zero(self) -> "RnFloat":
        return RnFloat(self, 0)

    def inf(self, sign: int = 0) -> "RnFloat":
        return RnFloat(self, (sign << (self.total_bits - 1)) | (self.exp_mask << self.precision))

    def nan(self) -> "RnFloat":
        # don't-care bits are zero on output; the round bit marks it non-infinite
        return RnFloat(self, (self.exp_mask << self.precision) | 1)


RNF8 = FloatFormat(3, 4, "rnf8")
RNF16 = FloatFormat(5, 10, "rnf16")
RNF32 = FloatFormat(8, 23, "rnf32")
RNF64 = FloatFormat(11, 52, "rnf64")

FORMATS = {f.name: f for f in (RNF8, RNF16, RNF32, RNF64)}


@dataclass(frozen=True)
class RnFloat:
    fmt: FloatFormat
    word: int

    def __post_init__(self) -> None:
        if not 0 <= self.word < (1 << self.fmt.total_bits):
            raise ValueError("word does not fit the format")

    @property
    def sign(self) -> int:
        return (self.word >> (self.fmt.total_bits - 1)) & 1

    @property
    def biased_exp(self) -> int:
        return (self.word >> self.fmt.precision) & self.fmt.exp_mask

    @property
    def frac(self) -> int:
        return (self.word >> 1) & ((1 << self.fmt.frac_bits) - 1)

    @property
    def round(self) -> int:
        return self.word & 1

    def __str__(self) -> str:
        return format_hex_literal(self)


class FloatClass(Enum):
    NORMAL = "normal"
    SUBNORMAL = "subnormal"
    ZERO = "zero"
    INFINITY = "infinity"
    NAN = "nan"


@dataclass(frozen=True)
class UnpackedFloat:
    """Classified view of a word; packing it restores the word bit-exactly.

    For normals the significand is the full p+1-bit word with the hidden bit
    reconstituted; for every other class it is the raw p-bit ``s.f`` string.
    The round bit always rides on the significand.
    """

    fmt: FloatFormat
    cls: FloatClass
    sign: int
    biased_exp: int
    significand: RnFixed


def _assemble(fmt: FloatFormat, sign: int, biased_exp: int, frac: int, rbit: int) -> RnFloat:
    word = (
        (sign << (fmt.total_bits - 1))
        | (biased_exp << fmt.precision)
        | (frac << 1)
        | rbit
    )
    return RnFloat(fmt, word)


def unpack(f: RnFloat) -> UnpackedFloat:
    fmt = f.fmt
    p = fmt.precision
    s, e, frac, r = f.sign, f.biased_exp, f.frac, f.round
    lsb = 1 - p
    if e == fmt.exp_mask:
        cls = FloatClass.INFINITY if frac == 0 and r == 0 else FloatClass.NAN
        word = frac - (s << (p - 1))
        return UnpackedFloat(fmt, cls, s, e, RnFixed(word, p, r, lsb))
    if e == 0:
        word = frac - (s << (p - 1))
        cls = FloatClass.ZERO if s == 0 and frac == 0 and r == 0 else FloatClass.SUBNORMAL
        return UnpackedFloat(fmt, cls, s, e, RnFixed(word, p, r, lsb))
    # normal: hidden second bit is the complement of the sign
    word = frac + ((1 << (p - 1)) if s == 0 else -(1 << p))
    return UnpackedFloat(fmt, FloatClass.NORMAL, s, e, RnFixed(word, p + 1, r, lsb))


def pack(u: UnpackedFloat) -> RnFloat:
    fmt = u.fmt
    p = fmt.precision
    sig = u.significand
    frac_mask = (1 << (p - 1)) - 1
    if u.cls is FloatClass.NORMAL:
        if not 1 <= u.biased_exp <= fmt.exp_mask - 1:
            raise ValueError("normal exponent out of range")
        if sig.width != p + 1 or sig.lsb_exp != 1 - p:
            raise ValueError("normal significand has the wrong shape")
        top = (sig.bits >> p) & 1
        second = (sig.bits >> (p - 1)) & 1
        if top == second or top != u.sign:
            raise ValueError("significand is not normalized")
        return _assemble(fmt, u.sign, u.biased_exp, sig.bits & frac_mask, sig.round)
    if sig.width != p or sig.lsb_exp != 1 - p:
        raise ValueError("significand has the wrong shape")
    if ((sig.bits >> (p - 1)) & 1) != u.sign:
        raise ValueError("sign bit disagrees with the significand")
    expect_e = fmt.exp_mask if u.cls in (FloatClass.INFINITY, FloatClass.NAN) else 0
    if u.biased_exp != expect_e:
        raise ValueError("exponent field disagrees with the class")
    return _assemble(fmt, u.sign, u.biased_exp, sig.bits & frac_mask, sig.round)


def value_of_float(f: RnFloat) -> DyadicRational | FloatClass:
    """Exact value of a finite word; the class marker for infinities/NaNs."""
    u = unpack(f)
    if u.cls in (FloatClass.INFINITY, FloatClass.NAN):
        return u.cls
    if u.cls is FloatClass.ZERO:
        return DyadicRational(0)
    sig = u.significand
    scale = (u.biased_exp - f.fmt.bias) if u.cls is FloatClass.NORMAL else f.fmt.e_min
    return DyadicRational(sig.bits + sig.round, sig.lsb_exp + scale)


def float_negate(f: RnFloat) -> RnFloat:
    """Negate by complementing sign, fraction and round bit.

    Zero-valued inputs come back as the canonical +0 word; NaNs are
    canonicalized; infinities just flip sign.
    """
    u = unpack(f)
    if u.cls is FloatClass.NAN:
        return f.fmt.nan()
    if u.cls is FloatClass.INFINITY:
        return f.fmt.inf(1 - u.sign)
    v = value_of_float(f)
    assert isinstance(v, DyadicRational)
    if v.is_zero:
        return f.fmt.zero()
    flip = (
        (1 << (f.fmt.total_bits - 1))
        | (((1 << f.fmt.frac_bits) - 1) << 1)
        | 1
    )
    return RnFloat(f.fmt, f.word ^ flip)


def format_hex_literal(f: RnFloat) -> str:
    digits = (f.fmt.total_bits + 3) // 4
    return f"{f.fmt.name}:0x{f.word:0{digits}x}"


def format_fields(f: RnFloat) -> str:
    return (
        f"s={f.sign} e={f.biased_exp} "
        f"f={f.frac:0{f.fmt.frac_bits}b} r={f.round}"
    )


def parse_float_literal(text: str) -> RnFloat:
    """Parse ``rnf<bits>:0x<hex>`` or ``rnf<bits>:s=_ e=_ f=_ r=_`` forms."""
    text = text.strip()
    head, sep, rest = text.partition(":")
    if not sep or head not in FORMATS:
        raise ValueError(f"bad float literal: {text!r}")
    fmt = FORMATS[head]
    rest = rest.strip()
    if rest.startswith("0x") or rest.startswith("0X"):
        word = int(rest, 16)
        return RnFloat(fmt, word)
    fields = dict(
        item.split("=", 1) for item in rest.replace(",", " ").split() if "=" in item
    )
    try:
        s = int(fields["s"])
        e = int(fields["e"])
        frac = int(fields["f"], 2)
        r = int(fields["r"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad float field literal: {text!r}") from exc
    if s not in (0, 1) or r not in (0, 1):
        raise ValueError(f"bad bit field in literal: {text!r}")
    if not 0 <= e <= fmt.exp_mask or not 0 <= frac < (1 << fmt.frac_bits):
        raise ValueError(f"field out of range in literal: {text!r}")
    return _assemble(fmt, s, e, frac, r)
