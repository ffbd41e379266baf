"""Fixed-point values in the canonical round-to-nearest encoding.

A value is stored as an ordinary two's complement word plus one appended
round bit.  The encoded value is ``(bits + round) * 2**lsb_exp``: the round
bit carries the weight of the word's least significant position, not half of
it.  With this convention rounding to nearest is plain truncation (the first
dropped bit becomes the new round bit), negation is bitwise complement of
word and round bit, and the round bit of an inexact result records which way
the rounding went.

The equivalent signed-digit view uses digits in {-1, 0, 1} whose nonzero
digits alternate in sign; ``booth_recode`` / ``sd_of_canonical`` /
``canonical_of_sd`` convert between the two views.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


@dataclass(frozen=True)
class DyadicRational:
    """Exact value ``mantissa * 2**exp``, normalized to an odd mantissa.

    Zero is canonically ``DyadicRational(0, 0)``, so equal values compare
    equal regardless of how they were produced.
    """

    mantissa: int
    exp: int = 0

    def __post_init__(self) -> None:
        m, e = self.mantissa, self.exp
        if m == 0:
            e = 0
        else:
            while m % 2 == 0:
                m //= 2
                e += 1
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exp", e)

    @property
    def is_zero(self) -> bool:
        return self.mantissa == 0

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def _parts(self, other: "DyadicRational") -> tuple[int, int, int]:
        e = min(self.exp, other.exp)
        return self.mantissa << (self.exp - e), other.mantissa << (other.exp - e), e

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        a, b, e = self._parts(other)
        return DyadicRational(a + b, e)

    def __sub__(self, other: "DyadicRational") -> "DyadicRational":
        a, b, e = self._parts(other)
        return DyadicRational(a - b, e)

    def __mul__(self, other: "DyadicRational") -> "DyadicRational":
        return DyadicRational(self.mantissa * other.mantissa, self.exp + other.exp)

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.mantissa, self.exp)

    def __abs__(self) -> "DyadicRational":
        return DyadicRational(abs(self.mantissa), self.exp)

    def __lt__(self, other: "DyadicRational") -> bool:
        a, b, _ = self._parts(other)
        return a < b

    def __le__(self, other: "DyadicRational") -> bool:
        a, b, _ = self._parts(other)
        return a <= b

    def __gt__(self, other: "DyadicRational") -> bool:
        return other < self

    def __ge__(self, other: "DyadicRational") -> bool:
        return other <= self

    def to_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.mantissa << self.exp)
        return Fraction(self.mantissa, 1 << -self.exp)

    @staticmethod
    def from_int(n: int) -> "DyadicRational":
        return DyadicRational(n, 0)

    def __str__(self) -> str:
        """Exact decimal representation (always finite for dyadic values)."""
        m, e = self.mantissa, self.exp
        if e >= 0:
            return str(m << e)
        digits = m * 5 ** (-e)
        sign = "-" if digits < 0 else ""
        text = str(abs(digits)).rjust(-e + 1, "0")
        return f"{sign}{text[:e]}.{text[e:]}"


@dataclass(frozen=True)
class DyadicInterval:
    """Closed interval of dyadic rationals, lo <= hi."""

    lo: DyadicRational
    hi: DyadicRational

    def __post_init__(self) -> None:
        if self.hi < self.lo:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> DyadicRational:
        return self.hi - self.lo

    def contains_value(self, x: DyadicRational) -> bool:
        return self.lo <= x and x <= self.hi

    def contains(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class RnFixed:
    """A two's complement word of ``width`` bits with an appended round bit.

    The represented value is ``(bits + round) * 2**lsb_exp``.
    """

    bits: int
    width: int
    round: int = 0
    lsb_exp: int = 0

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("width must be at least 1")
        if self.round not in (0, 1):
            raise ValueError("round bit must be 0 or 1")
        lo = -(1 << (self.width - 1))
        hi = (1 << (self.width - 1)) - 1
        if not lo <= self.bits <= hi:
            raise ValueError(
                f"bits {self.bits} does not fit {self.width}-bit two's complement"
            )

    @property
    def msb_exp(self) -> int:
        return self.lsb_exp + self.width - 1

    def word_string(self) -> str:
        return format(self.bits & ((1 << self.width) - 1), f"0{self.width}b")

    def __str__(self) -> str:
        return format_literal(self)


class TailSign(Enum):
    """Direction information carried by the round bit of a nonzero value."""

    ROUNDED_UP = "rounded-up"
    ROUNDED_DOWN = "rounded-down"


@dataclass(frozen=True)
class SignedDigitString:
    """Digits over {-1, 0, 1}, most significant first; last digit has weight
    ``2**lsb_exp``."""

    digits: tuple[int, ...]
    lsb_exp: int = 0

    def __post_init__(self) -> None:
        if not self.digits:
            raise ValueError("digit string must be nonempty")
        if any(d not in (-1, 0, 1) for d in self.digits):
            raise ValueError("digits must lie in {-1, 0, 1}")

    def value(self) -> DyadicRational:
        acc = 0
        for d in self.digits:
            acc = 2 * acc + d
        return DyadicRational(acc, self.lsb_exp)

    def __str__(self) -> str:
        return " ".join(str(d) for d in self.digits)


def booth_recode(word: int, width: int, lsb_exp: int = 0) -> SignedDigitString:
    """Recode a two's complement word into alternating-sign digits.

    Digit at position i is ``b[i-1] - b[i]`` with a zero appended below the
    lsb, so the digit string represents exactly the same value.
    """
    if width < 1:
        raise ValueError("width must be at least 1")
    lo, hi = -(1 << (width - 1)), (1 << (width - 1)) - 1
    if not lo <= word <= hi:
        raise ValueError("word does not fit the given width")
    digits = []
    for i in range(width - 1, -1, -1):
        below = (word >> (i - 1)) & 1 if i > 0 else 0
        here = (word >> i) & 1
        digits.append(below - here)
    return SignedDigitString(tuple(digits), lsb_exp)


def validate_rn(sd: SignedDigitString) -> bool:
    """True iff consecutive nonzero digits alternate in sign."""
    prev = 0
    for d in sd.digits:
        if d != 0:
            if d == prev:
                return False
            prev = d
    return True


def sd_of_canonical(x: RnFixed) -> SignedDigitString:
    """Signed-digit view of an encoded value.

    Interior digits pair adjacent word bits; the last digit pairs the round
    bit with the lsb of the word: ``round - b[0]``.
    """
    w = x.width
    digits = []
    for i in range(w - 1, 0, -1):
        digits.append(((x.bits >> (i - 1)) & 1) - ((x.bits >> i) & 1))
    digits.append(x.round - (x.bits & 1))
    return SignedDigitString(tuple(digits), x.lsb_exp)


def canonical_of_sd(sd: SignedDigitString) -> RnFixed:
    """Inverse of :func:`sd_of_canonical`.

    Accepts either finite representation of a value (last nonzero digit +1
    or -1).  The all-zero string maps to the all-zero word with round bit 0.
    """
    if not validate_rn(sd):
        raise ValueError("nonzero digits must alternate in sign")
    first = next((d for d in sd.digits if d != 0), 0)
    top = 1 if first < 0 else 0
    bits_msb_first = [top]
    cur = top
    for d in sd.digits[:-1]:
        cur = d + cur
        if cur not in (0, 1):
            raise ValueError("digit string is not a valid recoding")
        bits_msb_first.append(cur)
    r = sd.digits[-1] + cur
    if r not in (0, 1):
        raise ValueError("digit string is not a valid recoding")
    word = 0
    for b in bits_msb_first:
        word = (word << 1) | b
    if top:
        word -= 1 << len(sd.digits)
    return RnFixed(word, len(sd.digits), r, sd.lsb_exp)


def value_of(x: RnFixed) -> DyadicRational:
    """Exact value ``(bits + round) * 2**lsb_exp``."""
    return DyadicRational(x.bits + x.round, x.lsb_exp)


def truncate_at(x: RnFixed, k: int) -> RnFixed:
    """Round to the coarser grid ``2**k`` by truncation.

    Dropped word bits vanish; the first dropped bit becomes the new round
    bit.  The result is always within half of the new ulp of the input, with
    equality only at ties.
    """
    if k < x.lsb_exp:
        raise ValueError("cannot truncate below the existing lsb")
    if k > x.msb_exp:
        raise ValueError("truncation would drop every word bit")
    if k == x.lsb_exp:
        return x
    s = k - x.lsb_exp
    new_bits = x.bits >> s
    new_round = (x.bits >> (s - 1)) & 1
    return RnFixed(new_bits, x.width - s, new_round, k)


def negate(x: RnFixed) -> RnFixed:
    """Exact negation: complement the word and the round bit."""
    return RnFixed(~x.bits, x.width, 1 - x.round, x.lsb_exp)


def interval_of(x: RnFixed) -> DyadicInterval:
    """The half-ulp interval of values the encoding may stand for.

    ``(a, r)`` covers ``[a + r*u/2, a + (1+r)*u/2]`` where ``a`` is the word
    value and ``u`` its ulp; adjacent encodings tile the line, overlapping
    only at endpoints.
    """
    lo = DyadicRational(2 * x.bits + x.round, x.lsb_exp - 1)
    return DyadicInterval(lo, lo + DyadicRational(1, x.lsb_exp - 1))


def tail_digit_sign(x: RnFixed) -> TailSign:
    """Sign of the last nonzero signed digit: up for round=1, down for 0.

    Zero has no nonzero digit, so it is rejected.
    """
    if x.bits + x.round == 0:
        raise ValueError("tail sign undefined for zero")
    return TailSign.ROUNDED_UP if x.round else TailSign.ROUNDED_DOWN


def range_of(width: int, lsb_exp: int = 0) -> tuple[RnFixed, RnFixed]:
    """Smallest and largest representable values at a width; the range is
    sign-symmetric and its extremes are each other's negation."""
    if width < 2:
        raise ValueError("width must be at least 2")
    top = 1 << (width - 1)
    return (
        RnFixed(-top, width, 0, lsb_exp),
        RnFixed(top - 1, width, 1, lsb_exp),
    )


def format_literal(x: RnFixed) -> str:
    """Textual form ``rn:<word bits>:r<round>@<lsb_exp>``."""
    return f"rn:{x.word_string()}:r{x.round}@{x.lsb_exp}"


def parse_literal(text: str) -> RnFixed:
    """Parse the output of :func:`format_literal`, bit-exactly."""
    parts = text.strip().split(":")
    if len(parts) != 3 or parts[0] != "rn":
        raise ValueError(f"bad fixed-point literal: {text!r}")
    word = parts[1]
    if not word or any(c not in "01" for c in word):
        raise ValueError(f"bad word field in literal: {word!r}")
    tail = parts[2]
    if not tail.startswith("r") or "@" not in tail:
        raise ValueError(f"bad round/exponent field in literal: {tail!r}")
    rtxt, etxt = tail[1:].split("@", 1)
    if rtxt not in ("0", "1"):
        raise ValueError(f"bad round bit in literal: {rtxt!r}")
    bits = int(word, 2)
    if word[0] == "1":
        bits -= 1 << len(word)
    return RnFixed(bits, len(word), int(rtxt), int(etxt))
