"""Bit-exact arithmetic on round-to-nearest-by-truncation encodings."""

from .core import (
    DyadicInterval,
    DyadicRational,
    RnFixed,
    SignedDigitString,
    TailSign,
    booth_recode,
    canonical_of_sd,
    format_literal,
    interval_of,
    negate,
    parse_literal,
    range_of,
    sd_of_canonical,
    tail_digit_sign,
    truncate_at,
    validate_rn,
    value_of,
)
from .fixed import DivResult, add, add_alt, div, mul, shift_left, sub, sub_alt
from .floatarith import (
    RoundingMode,
    StickyTail,
    apply_directed_rounding,
    directed_round_bit,
    fadd,
    fadd_with_sticky,
    far_path,
    far_shortcut,
    fdiv,
    fdiv_with_sticky,
    fmul,
    fmul_with_sticky,
    near_path,
    round_to_format,
    sticky_of,
)
from .floatfmt import (
    FORMATS,
    RNF8,
    RNF16,
    RNF32,
    RNF64,
    FloatClass,
    FloatFormat,
    RnFloat,
    UnpackedFloat,
    float_negate,
    format_fields,
    format_hex_literal,
    pack,
    parse_float_literal,
    unpack,
    value_of_float,
)

__all__ = [
    "DyadicInterval",
    "DyadicRational",
    "RnFixed",
    "SignedDigitString",
    "TailSign",
    "booth_recode",
    "canonical_of_sd",
    "format_literal",
    "interval_of",
    "negate",
    "parse_literal",
    "range_of",
    "sd_of_canonical",
    "tail_digit_sign",
    "truncate_at",
    "validate_rn",
    "value_of",
    "DivResult",
    "add",
    "add_alt",
    "div",
    "mul",
    "shift_left",
    "sub",
    "sub_alt",
    "RoundingMode",
    "StickyTail",
    "apply_directed_rounding",
    "directed_round_bit",
    "fadd",
    "fadd_with_sticky",
    "far_path",
    "far_shortcut",
    "fdiv",
    "fdiv_with_sticky",
    "fmul",
    "fmul_with_sticky",
    "near_path",
    "round_to_format",
    "sticky_of",
    "FORMATS",
    "RNF8",
    "RNF16",
    "RNF32",
    "RNF64",
    "FloatClass",
    "FloatFormat",
    "RnFloat",
    "UnpackedFloat",
    "float_negate",
    "format_fields",
    "format_hex_literal",
    "pack",
    "parse_float_literal",
    "unpack",
    "value_of_float",
]
