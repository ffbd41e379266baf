from fractions import Fraction

import pytest

from rnarith.core import DyadicRational, RnFixed, value_of
from rnarith.floatarith import (
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
    sticky_of,
)
from rnarith.floatfmt import (
    RNF8,
    FloatClass,
    RnFloat,
    float_negate,
    unpack,
    value_of_float,
)
from rnarith.verify import representable

ONE = RnFloat(RNF8, 0x30)
TWO = RnFloat(RNF8, 0x40)
NEG_ONE = float_negate(ONE)
TINY = RnFloat(RNF8, 0x01)  # smallest positive subnormal, 2**-5


def every_word():
    return (RnFloat(RNF8, w) for w in range(256))


def finite_value(f):
    v = value_of_float(f)
    return None if isinstance(v, FloatClass) else v.to_fraction()


class TestFaddBasics:
    def test_one_plus_one(self):
        assert fadd(ONE, ONE) == TWO

    def test_cancellation_gives_canonical_zero(self):
        for f in every_word():
            v = finite_value(f)
            if v is None:
                continue
            assert fadd(f, float_negate(f)) == RNF8.zero()

    def test_zero_operand_passthrough(self):
        for f in every_word():
            if finite_value(f) is None:
                continue
            if finite_value(f) != 0:
                assert fadd(f, RNF8.zero()) == f
                assert fadd(RNF8.zero(), f) == f

    def test_specials(self):
        inf, nan = RNF8.inf(0), RNF8.nan()
        assert fadd(inf, ONE) == inf
        assert fadd(ONE, RNF8.inf(1)) == RNF8.inf(1)
        assert unpack(fadd(inf, RNF8.inf(1))).cls is FloatClass.NAN
        assert unpack(fadd(nan, ONE)).cls is FloatClass.NAN

    def test_far_tie_rounds_by_truncation(self):
        # 1.111 * 2**0 + 1.000 * 2**-2 = 2.125, a tie at the coarser grid
        a = RnFloat(RNF8, 0x3E)
        b = RnFloat(RNF8, 0x10)
        out, sticky = fadd_with_sticky(a, b)
        assert sticky.nonzero
        assert out == RnFloat(RNF8, 0x41)
        assert finite_value(out) == Fraction(9, 4)

    def test_near_gap1_tie(self):
        # 15/8 - 9/16 = 21/16: not representable, rounds up to 11/8
        a = RnFloat(RNF8, 0x3E)
        b = RnFloat(RNF8, 0xAE)
        assert finite_value(a) == Fraction(15, 8)
        assert finite_value(b) == Fraction(-9, 16)
        out = fadd(a, b)
        assert finite_value(out) == Fraction(11, 8)

    def test_cancellation_into_subnormal_exact(self):
        just_above = RnFloat(RNF8, 0x31)  # 9/8
        out, sticky = fadd_with_sticky(ONE, float_negate(just_above))
        assert finite_value(out) == Fraction(-1, 8)
        assert not sticky.nonzero

    def test_overflow_saturates(self):
        big = RnFloat(RNF8, 0x6E)  # 15/8 * 2**3 = 15
        out = fadd(big, big)
        assert unpack(out).cls is FloatClass.INFINITY

    def test_exact_boundary_magnitude_is_finite(self):
        # 8 + 8 = 16 = 2**(e_max+1), representable on the boundary encoding
        eight = RnFloat(RNF8, 0x60)
        out = fadd(eight, eight)
        assert finite_value(out) == 16
        assert out == RnFloat(RNF8, 0x6F)  # s=0 e=110 f=111 r=1
        assert finite_value(fadd(float_negate(eight), float_negate(eight))) == -16

    def test_half_ulp_sample(self):
        for wa in range(0, 256, 7):
            for wb in range(0, 256, 5):
                a, b = RnFloat(RNF8, wa), RnFloat(RNF8, wb)
                va, vb = finite_value(a), finite_value(b)
                if va is None or vb is None:
                    continue
                out = fadd(a, b)
                vo = finite_value(out)
                if vo is None:
                    continue
                e = unpack(out).biased_exp
                scale = RNF8.e_min if e == 0 else e - RNF8.bias
                ulp = Fraction(2) ** (scale + 1 - RNF8.precision)
                assert abs(vo - (va + vb)) <= ulp / 2


class TestNearFarPaths:
    def test_near_requires_effective_subtraction(self):
        with pytest.raises(ValueError):
            near_path(ONE, ONE)

    def test_near_requires_small_gap(self):
        far_b = float_negate(RnFloat(RNF8, 0x10))
        with pytest.raises(ValueError):
            near_path(ONE, far_b)

    def test_near_exact_difference(self):
        sig, scale = near_path(ONE, float_negate(RnFloat(RNF8, 0x31)))
        got = value_of(sig).to_fraction() * Fraction(2) ** scale
        assert got == Fraction(-1, 8)

    def test_near_zero_result(self):
        sig, _ = near_path(ONE, NEG_ONE)
        assert value_of(sig).to_fraction() == 0

    def test_near_pairs_exact_when_representable(self):
        words = [RnFloat(RNF8, w) for w in range(256)]
        for a in words:
            va = finite_value(a)
            if va in (None, 0):
                continue
            ua = unpack(a)
            ea = (ua.biased_exp - RNF8.bias) if ua.cls is FloatClass.NORMAL else RNF8.e_min
            for b in words:
                vb = finite_value(b)
                if vb in (None, 0):
                    continue
                ub = unpack(b)
                if ua.sign == ub.sign:
                    continue
                eb = (ub.biased_exp - RNF8.bias) if ub.cls is FloatClass.NORMAL else RNF8.e_min
                if abs(ea - eb) > 1:
                    continue
                exact = va + vb
                out = fadd(a, b)
                vo = finite_value(out)
                if representable(exact, RNF8):
                    assert vo == exact
                # with true cancellation nothing can be dropped
                if exact != 0 and abs(exact) < Fraction(2) ** min(ea, eb):
                    assert vo == exact

    def test_far_path_matches_fadd(self):
        words = [RnFloat(RNF8, w) for w in range(256)]
        for a in words[::3]:
            va = finite_value(a)
            if va in (None, 0):
                continue
            ua = unpack(a)
            ea = (ua.biased_exp - RNF8.bias) if ua.cls is FloatClass.NORMAL else RNF8.e_min
            for b in words[::5]:
                vb = finite_value(b)
                if vb in (None, 0):
                    continue
                ub = unpack(b)
                eb = (ub.biased_exp - RNF8.bias) if ub.cls is FloatClass.NORMAL else RNF8.e_min
                if ua.sign != ub.sign and abs(ea - eb) <= 1:
                    continue
                assert far_path(a, b) == fadd(a, b)

    def test_far_gap2_power_sum_exact(self):
        quarter = RnFloat(RNF8, 0x10)
        out, sticky = fadd_with_sticky(ONE, quarter)
        assert finite_value(out) == Fraction(5, 4)
        assert not sticky.nonzero


class TestFarShortcut:
    def test_positive_small_operand_forces_round_bit(self):
        eight = RnFloat(RNF8, 0x60)
        assert far_shortcut(eight, TINY) == RnFloat(RNF8, 0x61)

    def test_negative_small_operand_clears_round_bit(self):
        eight_r1 = RnFloat(RNF8, 0x61)
        assert far_shortcut(eight_r1, float_negate(TINY)) == RnFloat(RNF8, 0x60)

    def test_gap_requirement(self):
        with pytest.raises(ValueError):
            far_shortcut(ONE, TINY)  # gap is 0 - (-2) = 2, not > p

    def test_zero_small_operand_rejected(self):
        with pytest.raises(ValueError):
            far_shortcut(RnFloat(RNF8, 0x60), RNF8.zero())


class TestFmul:
    def test_identity_value(self):
        for f in every_word():
            v = finite_value(f)
            if v is None:
                continue
            assert finite_value(fmul(ONE, f)) == v

    def test_negative_identity_matches_negate(self):
        for f in every_word():
            v = finite_value(f)
            if v is None:
                continue
            assert finite_value(fmul(NEG_ONE, f)) == finite_value(float_negate(f))

    def test_worked_product(self):
        # (3/2) * (5/4) = 15/8, exact
        a = RnFloat(RNF8, 0x38)
        b = RnFloat(RNF8, 0x34)
        out, sticky = fmul_with_sticky(a, b)
        assert finite_value(out) == Fraction(15, 8)
        assert not sticky.nonzero

    def test_underflow_to_subnormal(self):
        out = fmul(TINY, RnFloat(RNF8, 0x38))  # 2**-5 * 3/2 rounds at the bottom grid
        vo = finite_value(out)
        assert abs(vo - Fraction(3, 64)) <= Fraction(1, 64)

    def test_specials(self):
        assert unpack(fmul(RNF8.inf(0), RNF8.zero())).cls is FloatClass.NAN
        assert fmul(RNF8.inf(0), NEG_ONE) == RNF8.inf(1)
        assert fmul(RNF8.zero(), ONE) == RNF8.zero()

    def test_commutative_sample(self):
        for wa in range(0, 256, 11):
            for wb in range(0, 256, 13):
                a, b = RnFloat(RNF8, wa), RnFloat(RNF8, wb)
                assert fmul(a, b) == fmul(b, a)


class TestFdiv:
    def test_divide_by_one_preserves_value(self):
        for f in every_word():
            v = finite_value(f)
            if v is None:
                continue
            assert finite_value(fdiv(f, ONE)) == v

    def test_divide_by_one_bitexact_on_normals(self):
        # the all-ones boundary spelling is renormalized to the next power's
        # plain word before division, so only its value survives
        for f in every_word():
            u = unpack(f)
            if u.cls is not FloatClass.NORMAL:
                continue
            sig = u.significand
            if abs(sig.bits + sig.round) == 1 << RNF8.precision:
                assert finite_value(fdiv(f, ONE)) == finite_value(f)
            else:
                assert fdiv(f, ONE) == f

    def test_self_division(self):
        for f in every_word():
            v = finite_value(f)
            if v in (None, 0):
                continue
            out, sticky = fdiv_with_sticky(f, f)
            assert out == ONE
            assert not sticky.nonzero

    def test_specials(self):
        assert fdiv(ONE, RNF8.zero()) == RNF8.inf(0)
        assert fdiv(NEG_ONE, RNF8.zero()) == RNF8.inf(1)
        assert unpack(fdiv(RNF8.zero(), RNF8.zero())).cls is FloatClass.NAN
        assert unpack(fdiv(RNF8.inf(0), RNF8.inf(0))).cls is FloatClass.NAN
        assert fdiv(ONE, RNF8.inf(0)) == RNF8.zero()
        assert fdiv(RNF8.inf(0), NEG_ONE) == RNF8.inf(1)

    def test_reference_is_extended_word_quotient(self):
        # 1.0 (r clear) over 1.000 with round bit set: 16/17, rounds to 15/16
        a = ONE
        b = RnFloat(RNF8, 0x31)
        out = fdiv(a, b)
        assert finite_value(out) == Fraction(15, 16)

    def test_underflow(self):
        out = fdiv(TINY, TWO)
        vo = finite_value(out)
        assert vo is not None and abs(vo) <= Fraction(1, 32)


class TestDirectedRounding:
    def test_table(self):
        t = StickyTail(True)
        assert directed_round_bit(0, 0, t, RoundingMode.UPWARD) == 1
        assert directed_round_bit(1, 0, t, RoundingMode.DOWNWARD) == 0
        assert directed_round_bit(0, 1, t, RoundingMode.TOWARD_ZERO) == 1
        assert directed_round_bit(0, 0, t, RoundingMode.TOWARD_ZERO) == 0
        assert directed_round_bit(0, 1, t, RoundingMode.AWAY_FROM_ZERO) == 0
        assert directed_round_bit(0, 0, t, RoundingMode.AWAY_FROM_ZERO) == 1

    def test_zero_tail_changes_nothing(self):
        t = StickyTail(False)
        for mode in RoundingMode:
            assert directed_round_bit(0, 1, t, mode) == 0
            assert directed_round_bit(1, 0, t, mode) == 1

    def test_apply_to_fixed(self):
        x = RnFixed(10, 5, 0, -3)
        up = apply_directed_rounding(x, StickyTail(True), RoundingMode.UPWARD)
        assert up == RnFixed(10, 5, 1, -3)
        same = apply_directed_rounding(x, StickyTail(False), RoundingMode.UPWARD)
        assert same is x
        neg = RnFixed(-10, 5, 0, -3)
        rz = apply_directed_rounding(neg, StickyTail(True), RoundingMode.TOWARD_ZERO)
        assert rz.round == 1

    def test_exact_results_identical_across_modes(self):
        for mode in RoundingMode:
            assert fadd(ONE, ONE, mode) == TWO

    def test_directed_sum_bounds(self):
        a = RnFloat(RNF8, 0x3E)
        b = RnFloat(RNF8, 0x10)
        exact = Fraction(17, 8)
        up = finite_value(fadd(a, b, RoundingMode.UPWARD))
        dn = finite_value(fadd(a, b, RoundingMode.DOWNWARD))
        assert dn <= exact <= up
        assert up - dn == Fraction(1, 4)  # one ulp apart around an unrepresentable sum


class TestStickyOf:
    def test_representable_sum(self):
        kept = RnFixed(10, 6, 0, -2)
        assert not sticky_of(value_of(kept), kept).nonzero

    def test_tail_below_round_bit(self):
        exact = DyadicRational((1 << 7) + 1, -7)  # 1 + 2**-7
        kept = RnFixed(8, 5, 0, -3)
        assert sticky_of(exact, kept).nonzero

    def test_division_remainder(self):
        assert not sticky_of(0, RnFixed(8, 5, 0, -3)).nonzero
        assert sticky_of(3, RnFixed(8, 5, 0, -3)).nonzero


class TestWiderFormats:
    def test_random_pairs_against_oracle(self):
        import random

        from rnarith.floatfmt import RNF16, RNF32
        from rnarith.verify import _div_reference, float_ulp, float_value

        rng = random.Random(123)
        ops = (("add", fadd_with_sticky), ("mul", fmul_with_sticky), ("div", fdiv_with_sticky))
        for fmt in (RNF16, RNF32):
            n = 1 << fmt.total_bits
            for _ in range(1200):
                wa, wb = rng.randrange(n), rng.randrange(n)
                a, b = RnFloat(fmt, wa), RnFloat(fmt, wb)
                va, vb = float_value(fmt, wa), float_value(fmt, wb)
                if va is None or vb is None:
                    continue
                for name, fn in ops:
                    if name == "div" and vb == 0:
                        continue
                    out, sticky = fn(a, b)
                    vo = float_value(fmt, out.word)
                    if name == "add":
                        exact = va + vb
                    elif name == "mul":
                        exact = va * vb
                    else:
                        exact = Fraction(0) if va == 0 else _div_reference(fmt, wa, wb)
                    if vo is None:
                        assert abs(exact) >= Fraction(2) ** (fmt.e_max + 1)
                        continue
                    assert abs(vo - exact) <= float_ulp(fmt, out.word) / 2
                    assert sticky.nonzero == (vo != exact)
                    if representable(exact, fmt):
                        assert vo == exact


class TestThreadedSweep:
    def test_partitioned_run_matches_serial(self):
        import rnarith.verify as verify

        serial = verify.float_nearest_sweep(RNF8, "mul", threads=1)
        threaded = verify.float_nearest_sweep(RNF8, "mul", threads=4)
        assert serial.passed and threaded.passed
        assert serial.cases == threaded.cases


class TestAgainstIndependentValues:
    def test_library_values_match_formula(self):
        from rnarith.verify import float_value as independent

        for f in every_word():
            v = value_of_float(f)
            ref = independent(RNF8, f.word)
            if isinstance(v, FloatClass):
                assert ref is None
            else:
                assert v.to_fraction() == ref
